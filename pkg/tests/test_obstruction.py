import json

import pytest

import goeritz._intlinalg as la
from goeritz import family
from goeritz.lattice import GramLattice, enumerate_embeddings
from goeritz.obstruction import (
    CoverSign,
    KnotCertificate,
    certificate_from_json,
    congruence_residue,
    gamma4p_lower_bound,
    mobius_cover_sign,
    obstruct_equivariant_klein,
    obstruct_equivariant_mobius,
    report_to_json,
    report_to_text,
)

# ground-truth residue table: (sigma mod 8, arf) -> residue
RESIDUE_TABLE = {
    (0, 0): 0,
    (0, 1): 4,
    (2, 0): 2,
    (2, 1): 6,
    (4, 0): 4,
    (4, 1): 0,
    (6, 0): 6,
    (6, 1): 2,
}


class TestCongruenceResidue:
    def test_all_eight_combinations(self):
        for (s, a), want in RESIDUE_TABLE.items():
            assert congruence_residue(s, a) == want
            assert congruence_residue(s - 8, a) == want
            assert congruence_residue(s + 16, a) == want

    def test_kn_values(self):
        assert congruence_residue(0, 1) == 4  # n odd
        assert congruence_residue(0, 0) == 0  # n even
        assert congruence_residue(-2, 1) == 2

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            congruence_residue(1, 0)
        with pytest.raises(ValueError):
            congruence_residue(0, 2)


class TestMobiusCoverSign:
    def test_table(self):
        assert mobius_cover_sign(2) is CoverSign.POSITIVE_DEFINITE
        assert mobius_cover_sign(6) is CoverSign.NEGATIVE_DEFINITE
        assert mobius_cover_sign(0) is CoverSign.INDETERMINATE
        assert mobius_cover_sign(4) is CoverSign.MOBIUS_IMPOSSIBLE

    def test_rejects_odd_residue(self):
        with pytest.raises(ValueError):
            mobius_cover_sign(3)

    def test_composed_with_residue_covers_all_inputs(self):
        for s, a in RESIDUE_TABLE:
            mobius_cover_sign(congruence_residue(s, a))


class TestKnotCertificate:
    def test_fixtures_validate(self):
        family.fixture_12a1019()
        for n in (2, 3, 4):
            cert = family.make_certificate_Kn(n)
            assert cert.period == n
            assert cert.arf == n % 2

    def test_rejects_wrong_definiteness(self):
        g = GramLattice(family.G_MINUS_12A1019)
        with pytest.raises(ValueError, match="definite"):
            KnotCertificate(
                "bad", g.negated(), g.negated(), la.identity(6), la.identity(6),
                period=2, signature=0, arf=0,
            )

    def test_rejects_wrong_order(self):
        g = GramLattice(family.G_MINUS_12A1019)
        with pytest.raises(ValueError, match="order"):
            KnotCertificate(
                "bad", g, g.negated(), la.identity(6), la.identity(6),
                period=3, signature=0, arf=0,
            )

    def test_rejects_non_isometry(self):
        g2 = family.goeritz_Gn(2)
        swap = [[0] * 4 for _ in range(4)]
        for i, j in ((0, 1), (1, 0), (2, 3), (3, 2)):
            swap[i][j] = 1
        with pytest.raises(ValueError, match="isometry"):
            KnotCertificate(
                "bad", g2, g2.negated(), la.freeze(swap), la.freeze(swap),
                period=2, signature=0, arf=0,
            )


class TestMobiusObstruction:
    def test_k2_obstructed(self):
        v = obstruct_equivariant_mobius(family.make_certificate_Kn(2))
        assert v.obstructed and v.certifying and not v.vacuous

    def test_k3_vacuous(self):
        # residue 4: no Mobius band at all
        v = obstruct_equivariant_mobius(family.make_certificate_Kn(3))
        assert v.obstructed and v.vacuous

    def test_12a1019_witness(self):
        v = obstruct_equivariant_mobius(family.fixture_12a1019())
        assert v.obstructed is False
        assert v.witnesses
        for sign, emb, t in v.witnesses:
            assert la.matmul(t.matrix(), emb.matrix) == la.matmul(
                emb.matrix, family.ACTION_12A1019
            )

    def test_budget_downgrades(self):
        v = obstruct_equivariant_mobius(family.make_certificate_Kn(2), max_nodes=5)
        assert v.obstructed is None
        assert not v.certifying
        assert "incomplete" in v.reason


class TestKleinObstruction:
    def test_inapplicable_for_even_n(self):
        v = obstruct_equivariant_klein(family.make_certificate_Kn(2))
        assert not v.applicable
        assert v.obstructed is None

    def test_k3_obstructed(self):
        v = obstruct_equivariant_klein(family.make_certificate_Kn(3))
        assert v.applicable and v.obstructed and v.certifying


class TestGamma4pLowerBound:
    def test_k2_bound_2_gap(self):
        rep = gamma4p_lower_bound(family.make_certificate_Kn(2))
        assert rep.gamma4p_lower_bound == 2
        assert rep.known_gamma4 == 1
        assert rep.gap_detected
        assert rep.klein is None

    def test_k3_bound_3_gap(self):
        rep = gamma4p_lower_bound(family.make_certificate_Kn(3))
        assert rep.gamma4p_lower_bound == 3
        assert rep.known_gamma4 == 2
        assert rep.gap_detected
        assert rep.mobius.vacuous

    def test_12a1019_bound_1_no_gap(self):
        rep = gamma4p_lower_bound(family.fixture_12a1019())
        assert rep.gamma4p_lower_bound == 1
        assert not rep.gap_detected

    def test_budget_never_yields_bound(self):
        rep = gamma4p_lower_bound(family.make_certificate_Kn(2), max_nodes=5)
        assert rep.gamma4p_lower_bound == 1
        assert not rep.mobius.certifying
        assert not rep.gap_detected

    def test_negation_symmetry_of_sign_tests(self):
        # G_+ = -G_- with equal actions: both sign problems see the same classes
        cert = family.make_certificate_Kn(2)
        neg = enumerate_embeddings(cert.goeritz_minus, 1, -1)
        pos = enumerate_embeddings(cert.goeritz_plus, 1, 1)
        assert [e.matrix for e in neg] == [e.matrix for e in pos]


class TestCertificateJson:
    def payload(self):
        cert = family.make_certificate_Kn(2)
        return {
            "name": "K_2",
            "goeritz_minus": [list(r) for r in cert.goeritz_minus.matrix],
            "goeritz_plus": [list(r) for r in cert.goeritz_plus.matrix],
            "action_minus": [list(r) for r in cert.action_minus],
            "action_plus": [list(r) for r in cert.action_plus],
            "period": 2,
            "signature": 0,
            "arf": 0,
            "known_gamma4": 1,
        }

    def test_round_trip(self):
        cert = certificate_from_json(self.payload())
        assert cert == family.make_certificate_Kn(2)

    def test_action_defaulting(self):
        obj = self.payload()
        del obj["action_plus"]
        cert = certificate_from_json(obj)
        assert cert.action_plus == cert.action_minus
        assert cert.action_defaulted == "plus"

    def test_image_list_action(self):
        obj = self.payload()
        obj["action_minus"] = [2, 3, 0, 1]  # X1<->X3, X2<->X4, 0-indexed images
        obj["action_plus"] = [2, 3, 0, 1]
        assert certificate_from_json(obj) == family.make_certificate_Kn(2)

    def test_missing_both_actions_rejected(self):
        obj = self.payload()
        del obj["action_minus"]
        del obj["action_plus"]
        with pytest.raises(ValueError, match="action"):
            certificate_from_json(obj)

    def test_missing_action_without_negation_rejected(self):
        obj = self.payload()
        obj["goeritz_plus"][0][0] += 1
        obj["goeritz_plus"][1][1] += 1
        del obj["action_plus"]
        with pytest.raises(ValueError):
            certificate_from_json(obj)


class TestReportSerialization:
    def test_json_serializable(self):
        rep = gamma4p_lower_bound(family.make_certificate_Kn(3))
        blob = json.dumps(report_to_json(rep), sort_keys=True)
        back = json.loads(blob)
        assert back["gamma4p_lower_bound"] == 3
        assert back["cover_sign"] == "mobius_impossible"
        assert back["klein"]["obstructed"] is True

    def test_text_contains_key_lines(self):
        text = report_to_text(gamma4p_lower_bound(family.make_certificate_Kn(2)))
        assert "gamma_{4,p} lower bound  2" in text.replace("   ", "  ") or "2" in text
        assert "gap detected" in text
        assert "yes" in text
