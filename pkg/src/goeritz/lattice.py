"""Exact integral lattice machinery.

Definiteness tests, exhaustive enumeration of embeddings of a definite Gram
lattice into the standard lattice (Z^m, +/-Id) up to signed-permutation
equivalence, canonical forms, and an independent brute-force oracle.

The automorphism group of (Z^m, +/-Id) consists exactly of the signed
permutation matrices (the only vectors of squared norm 1 are +/-e_i), so
"up to isomorphism of the target" means "up to a signed permutation of the
rows of the embedding matrix".  That action permutes and negates rows
independently, so the canonical form of an orbit is simply the row-sorted
matrix of sign-normalized rows; this total order is frozen and relied upon
throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _intlinalg as la


class SearchIncomplete(Exception):
    """Search budget exhausted before the enumeration finished.

    Distinct from "no embeddings exist": callers must not draw negative
    conclusions from an incomplete run.
    """

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"X_{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class GramLattice:
    """A symmetric integer matrix with a labeled basis."""

    matrix: la.IntMatrix
    basis_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", la.freeze(self.matrix))
        if not self.matrix or not la.is_symmetric(self.matrix):
            raise ValueError("Gram matrix must be square and symmetric")
        if self.basis_labels is None:
            object.__setattr__(self, "basis_labels", _default_labels(self.rank))
        elif len(self.basis_labels) != self.rank:
            raise ValueError("basis label count does not match rank")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def negated(self) -> "GramLattice":
        return GramLattice(la.neg(self.matrix), self.basis_labels)


@dataclass(frozen=True)
class StandardTarget:
    """The standard definite lattice (Z^rank, sign * Id)."""

    rank: int
    sign: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("target rank must be positive")
        if self.sign not in (1, -1):
            raise ValueError("target sign must be +1 or -1")


@dataclass(frozen=True)
class SignedPermutation:
    """An element of the hyperoctahedral group on m coordinates.

    As a matrix, row r carries the single entry signs[r] in column perm[r].
    Acting on an embedding matrix it sends row r of the result to
    signs[r] * (row perm[r] of the input).
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "signs", tuple(self.signs))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +/-1, one per coordinate")

    @classmethod
    def identity(cls, m: int) -> "SignedPermutation":
        return cls(tuple(range(m)), (1,) * m)

    @property
    def size(self) -> int:
        return len(self.perm)

    def matrix(self) -> la.IntMatrix:
        m = [[0] * self.size for _ in range(self.size)]
        for r, (p, s) in enumerate(zip(self.perm, self.signs)):
            m[r][p] = s
        return la.freeze(m)

    def apply_rows(self, mat: la.IntMatrix) -> la.IntMatrix:
        return tuple(
            tuple(s * x for x in mat[p]) for p, s in zip(self.perm, self.signs)
        )


@dataclass(frozen=True)
class LatticeEmbedding:
    """An m x n integer matrix whose columns realize the source Gram form."""

    matrix: la.IntMatrix
    source: GramLattice
    target: StandardTarget

    def __post_init__(self):
        object.__setattr__(self, "matrix", la.freeze(self.matrix))
        m, n = la.shape(self.matrix)
        if m != self.target.rank or n != self.source.rank:
            raise ValueError("embedding matrix shape does not match source/target")
        if gram_of(self.matrix, self.target) != self.source.matrix:
            raise ValueError("matrix does not satisfy the Gram constraint")


def is_definite(lat: GramLattice, sign: int) -> bool:
    """Exact definiteness test by leading-principal-minor signs."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    minors = la.leading_principal_minors(lat.matrix)
    if sign == 1:
        return all(d > 0 for d in minors)
    return all((d < 0 if k % 2 else d > 0) for k, d in enumerate(minors, start=1))


def gram_of(phi: la.IntMatrix, target: StandardTarget) -> la.IntMatrix:
    """sign * (phi^T phi): the form the columns of phi realize."""
    if len(phi) != target.rank:
        raise ValueError("row count does not match target rank")
    return la.scale(target.sign, la.matmul(la.transpose(phi), phi))


def canonicalize(phi: LatticeEmbedding) -> LatticeEmbedding:
    """Minimal orbit representative under signed permutations of the target.

    Frozen rule: replace each row by the lexicographically smaller of itself
    and its negation, then sort the rows ascending.  This is constant on
    orbits and idempotent because row permutations and row negations act
    independently.
    """
    return LatticeEmbedding(_canonical_rows(phi.matrix), phi.source, phi.target)


def _canonical_rows(mat: la.IntMatrix) -> la.IntMatrix:
    return tuple(sorted(min(row, tuple(-x for x in row)) for row in mat))


def embeddings_equivalent(
    a: LatticeEmbedding, b: LatticeEmbedding
) -> SignedPermutation | None:
    """A signed permutation T with T.a = b, if the embeddings are isomorphic."""
    if a.source.matrix != b.source.matrix or a.target != b.target:
        raise ValueError("embeddings must share source and target")
    t = _match_rows(a.matrix, b.matrix)
    if t is not None:
        assert t.apply_rows(a.matrix) == b.matrix
    return t


def _match_rows(a: la.IntMatrix, b: la.IntMatrix) -> SignedPermutation | None:
    """Signed permutation T with T.a = b, i.e. b[r] = signs[r] * a[perm[r]].

    Exists iff the rows of a and b agree as multisets up to sign.  Rows equal
    up to sign are interchangeable, so a fixed index-order pairing within each
    sign-normalized class is complete; rows fixed by negation (zero rows) are
    matched identically in index order with sign +1, which realizes the
    identity on coordinates outside the span.
    """
    norm = lambda row: min(row, tuple(-x for x in row))
    pool: dict[tuple[int, ...], list[int]] = {}
    for k, row in enumerate(a):
        pool.setdefault(norm(row), []).append(k)
    perm = [0] * len(a)
    signs = [1] * len(a)
    for r, row in enumerate(b):
        cands = pool.get(norm(row))
        if not cands:
            return None
        k = cands.pop(0)
        perm[r] = k
        if a[k] == row:
            signs[r] = 1
        else:
            signs[r] = -1
    return SignedPermutation(tuple(perm), tuple(signs))


def enumerate_embeddings(
    lat: GramLattice,
    corank: int,
    sign: int,
    max_nodes: int | None = None,
) -> tuple[LatticeEmbedding, ...]:
    """All embeddings of (Z^n, G) into (Z^{n+corank}, sign*Id), up to signed
    permutation of the target.

    Column-by-column backtracking in domain basis order.  Coordinates of the
    target are "used" once some earlier column touches them; entries of a new
    column on still-unused coordinates are normalized to be non-negative,
    non-increasing and to occupy the lowest-indexed unused coordinates (fresh
    coordinates are interchangeable under the residual signed-permutation
    stabilizer, so this loses no orbits).  Completed matrices are
    canonicalized and deduplicated; the result is sorted by canonical matrix.

    Raises SearchIncomplete when max_nodes is exceeded; returns () when the
    form is not sign-definite.
    """
    if corank < 0:
        raise ValueError("corank must be non-negative")
    if not is_definite(lat, sign):
        return ()
    n = lat.rank
    m = n + corank
    target = StandardTarget(m, sign)
    p = la.scale(sign, lat.matrix)  # positive definite; phi^T phi = p
    nodes = [0]

    def tick():
        nodes[0] += 1
        if max_nodes is not None and nodes[0] > max_nodes:
            raise SearchIncomplete(nodes[0])

    found: dict[la.IntMatrix, None] = {}
    cols: list[tuple[int, ...]] = []

    def place(j: int, used: int):
        if j == n:
            mat = tuple(tuple(col[i] for col in cols) for i in range(m))
            found[_canonical_rows(mat)] = None
            return
        norm_j = p[j][j]
        targets = [p[i][j] for i in range(j)]
        # suffix norms of earlier columns over coordinates t..used-1
        suffix = [
            [sum(x * x for x in cols[i][t:used]) for t in range(used + 1)]
            for i in range(j)
        ]
        vec = [0] * m

        def fill_used(t: int, rem: int, ips: list[int]):
            tick()
            if t == used:
                if any(ip != tgt for ip, tgt in zip(ips, targets)):
                    return
                fill_fresh(t, rem, norm_j + 1)
                return
            bound = math.isqrt(rem)
            for v in range(-bound, bound + 1):
                rem2 = rem - v * v
                ok = True
                for i in range(j):
                    gap = targets[i] - (ips[i] + v * cols[i][t])
                    if gap * gap > rem2 * suffix[i][t + 1]:
                        ok = False
                        break
                if not ok:
                    continue
                vec[t] = v
                fill_used(t + 1, rem2, [ip + v * cols[i][t] for i, ip in enumerate(ips)])
                vec[t] = 0

        def fill_fresh(t: int, rem: int, prev: int):
            tick()
            if rem == 0:
                new_used = t
                col = tuple(vec[:t]) + (0,) * (m - t)
                cols.append(col)
                place(j + 1, max(used, new_used))
                cols.pop()
                return
            if t == m:
                return
            top = min(prev, math.isqrt(rem))
            for v in range(top, 0, -1):
                vec[t] = v
                fill_fresh(t + 1, rem - v * v, v)
                vec[t] = 0

        fill_used(0, norm_j, [0] * j)

    place(0, 0)
    return tuple(
        LatticeEmbedding(mat, lat, target) for mat in sorted(found)
    )


def brute_force_embeddings(
    lat: GramLattice, corank: int, sign: int
) -> tuple[LatticeEmbedding, ...]:
    """Independent oracle: exhaustive column enumeration, no symmetry breaking.

    Enumerates every integer matrix satisfying the Gram constraints with
    entries bounded by the column-norm equation, then groups by canonical
    form.  Guarded to small instances; use enumerate_embeddings for real work.
    """
    n = lat.rank
    m = n + corank
    if m > 8 or any(abs(lat.matrix[i][i]) > 4 for i in range(n)):
        raise ValueError("brute-force oracle refused: instance exceeds its guard")
    if not is_definite(lat, sign):
        return ()
    p = la.scale(sign, lat.matrix)
    target = StandardTarget(m, sign)

    def vectors(norm: int):
        out: list[tuple[int, ...]] = []
        vec = [0] * m

        def rec(t: int, rem: int):
            if t == m:
                if rem == 0:
                    out.append(tuple(vec))
                return
            bound = math.isqrt(rem)
            for v in range(-bound, bound + 1):
                vec[t] = v
                rec(t + 1, rem - v * v)
                vec[t] = 0

        rec(0, norm)
        return out

    by_norm = {norm: vectors(norm) for norm in {p[j][j] for j in range(n)}}
    found: dict[la.IntMatrix, None] = {}
    cols: list[tuple[int, ...]] = []

    def place(j: int):
        if j == n:
            mat = tuple(tuple(col[i] for col in cols) for i in range(m))
            found[_canonical_rows(mat)] = None
            return
        for v in by_norm[p[j][j]]:
            if all(
                sum(x * y for x, y in zip(v, cols[i])) == p[i][j] for i in range(j)
            ):
                cols.append(v)
                place(j + 1)
                cols.pop()

    place(0)
    return tuple(LatticeEmbedding(mat, lat, target) for mat in sorted(found))
