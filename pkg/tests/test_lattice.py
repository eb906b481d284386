import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

import goeritz._intlinalg as la
from goeritz import family
from goeritz.lattice import (
    GramLattice,
    LatticeEmbedding,
    SearchIncomplete,
    SignedPermutation,
    StandardTarget,
    brute_force_embeddings,
    canonicalize,
    embeddings_equivalent,
    enumerate_embeddings,
    gram_of,
    is_definite,
)

G_MINUS = GramLattice(family.G_MINUS_12A1019)


def random_signed_permutation(m, rng):
    perm = list(range(m))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(m)]
    return SignedPermutation(tuple(perm), tuple(signs))


def random_negative_definite(rank, rng, max_col_norm=4):
    """-(A^T A) for a random full-rank integer A with small columns."""
    while True:
        a = [[rng.randint(-1, 1) for _ in range(rank)] for _ in range(rank)]
        g = la.scale(-1, la.matmul(la.transpose(a), a))
        if all(-4 <= g[i][i] <= -1 for i in range(rank)) and is_definite(
            GramLattice(g), -1
        ):
            return GramLattice(g)


class TestIsDefinite:
    def test_g_minus_negative_definite(self):
        assert is_definite(G_MINUS, -1)
        assert not is_definite(G_MINUS, 1)

    def test_minus_one(self):
        lat = GramLattice(((-1,),))
        assert not is_definite(lat, 1)
        assert is_definite(lat, -1)

    def test_gn_blocks(self):
        for n in (1, 2, 3):
            assert is_definite(family.goeritz_Gn(n), -1)
            assert is_definite(family.goeritz_Gn(n).negated(), 1)

    def test_indefinite(self):
        assert not is_definite(GramLattice(((1, 0), (0, -1))), 1)
        assert not is_definite(GramLattice(((1, 0), (0, -1))), -1)


class TestGramOf:
    def test_psi3(self):
        psi3 = family.psi_block(3)
        assert gram_of(psi3.matrix, psi3.target) == ((-3, 1), (1, -2))

    def test_zero(self):
        assert gram_of(la.zeros(3, 2), StandardTarget(3, -1)) == la.zeros(2, 2)

    def test_phi1(self):
        assert gram_of(family.PHI1_12A1019, StandardTarget(7, -1)) == G_MINUS.matrix


class TestCanonicalize:
    def test_idempotent(self):
        for phi in family.phi_embeddings_12a1019():
            c = canonicalize(phi)
            assert canonicalize(c).matrix == c.matrix

    def test_constant_on_orbit(self):
        rng = random.Random(7)
        phi = family.phi_embeddings_12a1019()[0]
        c = canonicalize(phi).matrix
        for _ in range(100):
            t = random_signed_permutation(7, rng)
            moved = LatticeEmbedding(t.apply_rows(phi.matrix), phi.source, phi.target)
            assert canonicalize(moved).matrix == c

    def test_separates_phi1_phi2(self):
        phi1, phi2 = family.phi_embeddings_12a1019()
        assert canonicalize(phi1).matrix != canonicalize(phi2).matrix


class TestEmbeddingsEquivalent:
    def test_self_identity(self):
        phi = family.phi_embeddings_12a1019()[0]
        t = embeddings_equivalent(phi, phi)
        assert t == SignedPermutation.identity(7)

    def test_phi1_phi2_inequivalent(self):
        phi1, phi2 = family.phi_embeddings_12a1019()
        assert embeddings_equivalent(phi1, phi2) is None

    def test_psi1_psi2_inequivalent(self):
        assert embeddings_equivalent(family.psi_block(1), family.psi_block(2)) is None

    def test_witness_verifies(self):
        rng = random.Random(3)
        phi = family.phi_embeddings_12a1019()[1]
        for _ in range(20):
            t = random_signed_permutation(7, rng)
            moved = LatticeEmbedding(t.apply_rows(phi.matrix), phi.source, phi.target)
            w = embeddings_equivalent(phi, moved)
            assert w is not None
            assert w.apply_rows(phi.matrix) == moved.matrix


class TestSignedPermutationAutomorphisms:
    def test_all_orthogonal_integer_matrices_are_signed_permutations(self):
        # justifies representing target automorphisms as SignedPermutation
        for m in (1, 2, 3):
            ident = la.identity(m)
            count = 0
            for entries in itertools.product((-1, 0, 1), repeat=m * m):
                mat = tuple(
                    tuple(entries[i * m + j] for j in range(m)) for i in range(m)
                )
                if la.matmul(la.transpose(mat), mat) == ident:
                    count += 1
                    assert la.is_permutation_matrix(
                        tuple(tuple(abs(x) for x in row) for row in mat)
                    )
            import math

            assert count == 2**m * math.factorial(m)


class TestEnumerate:
    def test_norm_one(self):
        classes = enumerate_embeddings(GramLattice(((-1,),)), 1, -1)
        assert [e.matrix for e in classes] == [((-1,), (0,))]

    def test_eq1_two_classes(self):
        classes = enumerate_embeddings(G_MINUS, 1, -1)
        assert len(classes) == 2
        expected = sorted(
            canonicalize(p).matrix for p in family.phi_embeddings_12a1019()
        )
        assert [e.matrix for e in classes] == expected

    def test_g2_psi_classes(self):
        classes = enumerate_embeddings(family.goeritz_Gn(2), 1, -1)
        expected = sorted(
            {canonicalize(e).matrix for e in family.family_embeddings(2)}
        )
        assert [e.matrix for e in classes] == expected

    def test_g1_corank2_is_psi3(self):
        classes = enumerate_embeddings(family.goeritz_Gn(1), 2, -1)
        assert len(classes) == 1
        psi3 = family.family_embeddings(1)[0]
        assert classes[0].matrix == canonicalize(psi3).matrix

    def test_indefinite_returns_empty(self):
        assert enumerate_embeddings(GramLattice(((1, 0), (0, -1))), 1, -1) == ()

    def test_gram_invariant_and_pairwise_inequivalent(self):
        classes = enumerate_embeddings(G_MINUS, 1, -1)
        for e in classes:
            assert gram_of(e.matrix, e.target) == G_MINUS.matrix
        for a, b in itertools.combinations(classes, 2):
            assert embeddings_equivalent(a, b) is None

    def test_entry_bound(self):
        for e in enumerate_embeddings(G_MINUS, 1, -1):
            for j in range(G_MINUS.rank):
                bound = abs(G_MINUS.matrix[j][j])
                assert all(e.matrix[i][j] ** 2 <= bound for i in range(7))

    def test_negation_symmetry(self):
        neg = enumerate_embeddings(G_MINUS, 1, -1)
        pos = enumerate_embeddings(G_MINUS.negated(), 1, 1)
        assert [e.matrix for e in neg] == [e.matrix for e in pos]

    def test_budget_raises_incomplete(self):
        with pytest.raises(SearchIncomplete):
            enumerate_embeddings(G_MINUS, 1, -1, max_nodes=10)


class TestBruteForceOracle:
    def test_guard(self):
        with pytest.raises(ValueError, match="guard"):
            brute_force_embeddings(family.goeritz_Gn(4), 1, -1)
        with pytest.raises(ValueError, match="guard"):
            brute_force_embeddings(GramLattice(((-5,),)), 1, -1)

    def test_norm_two_single_class(self):
        classes = brute_force_embeddings(GramLattice(((-2,),)), 1, -1)
        assert len(classes) == 1
        assert classes[0].matrix == canonicalize(
            LatticeEmbedding(((1,), (1,)), GramLattice(((-2,),)), StandardTarget(2, -1))
        ).matrix

    def test_agrees_on_g1(self):
        for corank in (0, 1, 2):
            lat = family.goeritz_Gn(1)
            assert [e.matrix for e in brute_force_embeddings(lat, corank, -1)] == [
                e.matrix for e in enumerate_embeddings(lat, corank, -1)
            ]

    def test_agrees_on_random_forms(self):
        rng = random.Random(2024)
        for _ in range(15):
            lat = random_negative_definite(3, rng)
            corank = rng.choice((1, 2))
            oracle = brute_force_embeddings(lat, corank, -1)
            fast = enumerate_embeddings(lat, corank, -1)
            assert [e.matrix for e in oracle] == [e.matrix for e in fast]
