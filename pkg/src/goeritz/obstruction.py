"""The obstruction pipeline: congruence residue, equivariant Mobius and
punctured-Klein-bottle obstructions, and certified lower bounds for the
equivariant non-orientable 4-genus.

The signature and Arf invariant are inputs, not computed: the pipeline is a
pure consumer of the Goeritz data and the classical invariants.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _intlinalg as la
from .equivariance import exists_equivariant_embedding, is_isometry
from .lattice import (
    GramLattice,
    LatticeEmbedding,
    SearchIncomplete,
    SignedPermutation,
    is_definite,
)


def congruence_residue(sigma: int, arf: int) -> int:
    """(sigma + 4*Arf) mod 8; knot signatures are even, so this lands in
    {0, 2, 4, 6}."""
    if arf not in (0, 1):
        raise ValueError("Arf invariant must be 0 or 1")
    if sigma % 2 != 0:
        raise ValueError("knot signatures are even")
    return (sigma + 4 * arf) % 8


class CoverSign(enum.Enum):
    """Definiteness of the double branched cover along a Mobius band."""

    POSITIVE_DEFINITE = "positive_definite"
    NEGATIVE_DEFINITE = "negative_definite"
    INDETERMINATE = "indeterminate"
    MOBIUS_IMPOSSIBLE = "mobius_impossible"


def mobius_cover_sign(residue: int) -> CoverSign:
    """Decode the mod-8 residue: 2 -> positive definite cover, 6 -> negative,
    0 -> indeterminate, 4 -> the knot bounds no Mobius band at all."""
    table = {
        2: CoverSign.POSITIVE_DEFINITE,
        6: CoverSign.NEGATIVE_DEFINITE,
        0: CoverSign.INDETERMINATE,
        4: CoverSign.MOBIUS_IMPOSSIBLE,
    }
    if residue not in table:
        raise ValueError("residue must be one of 0, 2, 4, 6")
    return table[residue]


@dataclass(frozen=True)
class KnotCertificate:
    """Input bundle for the obstruction pipeline.

    goeritz_minus/goeritz_plus are the negative/positive definite Goeritz
    forms of an equivariant alternating diagram; the action matrices are the
    induced permutation matrices on each basis.  When only one action was
    supplied and G_+ = -G_-, the other defaults to it and action_defaulted
    records which side was filled in.
    """

    name: str
    goeritz_minus: GramLattice
    goeritz_plus: GramLattice
    action_minus: la.IntMatrix
    action_plus: la.IntMatrix
    period: int
    signature: int
    arf: int
    known_gamma4: int | None = None
    action_defaulted: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "action_minus", la.freeze(self.action_minus))
        object.__setattr__(self, "action_plus", la.freeze(self.action_plus))
        if self.period < 2:
            raise ValueError("period must be at least 2")
        congruence_residue(self.signature, self.arf)  # validates both
        if not is_definite(self.goeritz_minus, -1):
            raise ValueError("goeritz_minus must be negative definite")
        if not is_definite(self.goeritz_plus, 1):
            raise ValueError("goeritz_plus must be positive definite")
        for act, lat, side in (
            (self.action_minus, self.goeritz_minus, "minus"),
            (self.action_plus, self.goeritz_plus, "plus"),
        ):
            if not la.is_permutation_matrix(act):
                raise ValueError(f"action_{side} is not a permutation matrix")
            if not is_isometry(act, lat):
                raise ValueError(f"action_{side} is not an isometry of its form")
            if la.matrix_power_order(act) != self.period:
                raise ValueError(f"action_{side} does not have order {self.period}")

    @property
    def residue(self) -> int:
        return congruence_residue(self.signature, self.arf)


@dataclass(frozen=True)
class SurfaceVerdict:
    """Outcome of one equivariant-surface obstruction.

    obstructed=True means no equivariant surface of this type exists (the
    bound fires); obstructed=False means a witness was found; obstructed=None
    means the check was inapplicable or could not be certified.  vacuous
    marks the residue-4 Mobius case where no Mobius band exists at all.
    """

    kind: str
    applicable: bool
    obstructed: bool | None
    certifying: bool
    vacuous: bool = False
    reason: str = ""
    witnesses: tuple[tuple[int, LatticeEmbedding, SignedPermutation], ...] = ()


@dataclass(frozen=True)
class ObstructionReport:
    residue: int
    cover_sign: CoverSign
    mobius: SurfaceVerdict
    klein: SurfaceVerdict | None
    gamma4p_lower_bound: int
    gap_detected: bool
    name: str = ""
    known_gamma4: int | None = None
    action_defaulted: str | None = None


def _run_problems(
    cert: KnotCertificate,
    kind: str,
    problems: list[tuple[int, GramLattice, la.IntMatrix, int]],
    max_nodes: int | None,
    vacuous_reason: str | None = None,
) -> SurfaceVerdict:
    """Run a batch of (sign, form, action, corank) equivariant-embedding
    problems; the obstruction holds only if every problem comes back empty."""
    witnesses = []
    try:
        for sign, lat, action, corank in problems:
            hit = exists_equivariant_embedding(
                lat, action, corank, sign, max_nodes=max_nodes
            )
            if hit is not None:
                witnesses.append((sign, hit[0], hit[1]))
    except SearchIncomplete as exc:
        return SurfaceVerdict(
            kind,
            applicable=True,
            obstructed=None,
            certifying=False,
            reason=f"enumeration incomplete: {exc}",
        )
    if witnesses:
        return SurfaceVerdict(
            kind,
            applicable=True,
            obstructed=False,
            certifying=True,
            reason="equivariant embedding witness found",
            witnesses=tuple(witnesses),
        )
    return SurfaceVerdict(
        kind,
        applicable=True,
        obstructed=True,
        certifying=True,
        reason=vacuous_reason or "no equivariant embedding exists",
    )


def obstruct_equivariant_mobius(
    cert: KnotCertificate, max_nodes: int | None = None
) -> SurfaceVerdict:
    """Corank-1 obstruction: can the knot bound an equivariant Mobius band?

    The cover's definiteness (from the residue) selects which sign of
    embedding problem is relevant; an indeterminate residue requires both
    sign tests to be empty.  Residue 4 obstructs vacuously: no Mobius band
    exists, equivariant or not.
    """
    cover = mobius_cover_sign(cert.residue)
    if cover is CoverSign.MOBIUS_IMPOSSIBLE:
        return SurfaceVerdict(
            "mobius",
            applicable=True,
            obstructed=True,
            certifying=True,
            vacuous=True,
            reason="residue 4: the knot bounds no Mobius band in the 4-ball",
        )
    minus = (-1, cert.goeritz_minus, cert.action_minus, 1)
    plus = (1, cert.goeritz_plus, cert.action_plus, 1)
    problems = {
        CoverSign.POSITIVE_DEFINITE: [minus],
        CoverSign.NEGATIVE_DEFINITE: [plus],
        CoverSign.INDETERMINATE: [minus, plus],
    }[cover]
    return _run_problems(cert, "mobius", problems, max_nodes)


def obstruct_equivariant_klein(
    cert: KnotCertificate, max_nodes: int | None = None
) -> SurfaceVerdict:
    """Corank-2 obstruction: can the knot bound an equivariant punctured
    Klein bottle?  Only applicable when the residue is 4."""
    if cert.residue != 4:
        return SurfaceVerdict(
            "klein",
            applicable=False,
            obstructed=None,
            certifying=True,
            reason=f"residue {cert.residue} != 4: Klein-bottle test inapplicable",
        )
    problems = [
        (1, cert.goeritz_plus, cert.action_plus, 2),
        (-1, cert.goeritz_minus, cert.action_minus, 2),
    ]
    return _run_problems(cert, "klein", problems, max_nodes)


def gamma4p_lower_bound(
    cert: KnotCertificate, max_nodes: int | None = None
) -> ObstructionReport:
    """Full pipeline: residue, Mobius test, Klein test where applicable.

    The lower bound is 3 if the Klein obstruction fired, else 2 if the Mobius
    obstruction fired, else 1.  Bounds are only claimed from complete
    enumerations; an exhausted budget downgrades the affected step.
    """
    residue = cert.residue
    mobius = obstruct_equivariant_mobius(cert, max_nodes=max_nodes)
    klein = obstruct_equivariant_klein(cert, max_nodes=max_nodes)
    bound = 1
    if mobius.certifying and mobius.obstructed:
        bound = 2
        if klein.applicable and klein.certifying and klein.obstructed:
            bound = 3
    gap = cert.known_gamma4 is not None and cert.known_gamma4 < bound
    return ObstructionReport(
        residue=residue,
        cover_sign=mobius_cover_sign(residue),
        mobius=mobius,
        klein=klein if klein.applicable else None,
        gamma4p_lower_bound=bound,
        gap_detected=gap,
        name=cert.name,
        known_gamma4=cert.known_gamma4,
        action_defaulted=cert.action_defaulted,
    )


def certificate_from_json(obj: dict) -> KnotCertificate:
    """Parse the documented KnotCertificate JSON schema.

    Actions may be given as n x n 0/1 matrices or as length-n lists of
    0-indexed images on the basis positions.  If exactly one action is given
    and G_+ = -G_-, the other defaults to it.
    """

    def parse_action(value, n):
        if value and isinstance(value[0], list):
            return la.freeze(value)
        images = [int(x) for x in value]
        if sorted(images) != list(range(n)):
            raise ValueError("action permutation list is not a permutation")
        mat = [[0] * n for _ in range(n)]
        for i, img in enumerate(images):
            mat[img][i] = 1
        return la.freeze(mat)

    try:
        g_minus = GramLattice(la.freeze(obj["goeritz_minus"]))
        g_plus = GramLattice(la.freeze(obj["goeritz_plus"]))
        n = g_minus.rank
        a_minus = obj.get("action_minus")
        a_plus = obj.get("action_plus")
        defaulted = None
        if a_minus is None and a_plus is None:
            raise ValueError("at least one action must be supplied")
        if a_plus is None or a_minus is None:
            if g_plus.matrix != la.neg(g_minus.matrix):
                raise ValueError(
                    "one action missing and G_+ != -G_-: both actions required"
                )
            if a_plus is None:
                a_plus, defaulted = a_minus, "plus"
            else:
                a_minus, defaulted = a_plus, "minus"
        return KnotCertificate(
            name=obj.get("name", ""),
            goeritz_minus=g_minus,
            goeritz_plus=g_plus,
            action_minus=parse_action(a_minus, n),
            action_plus=parse_action(a_plus, g_plus.rank),
            period=int(obj["period"]),
            signature=int(obj["signature"]),
            arf=int(obj["arf"]),
            known_gamma4=obj.get("known_gamma4"),
            action_defaulted=defaulted,
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed certificate JSON: {exc}") from exc


def _verdict_json(v: SurfaceVerdict | None):
    if v is None:
        return None
    return {
        "kind": v.kind,
        "applicable": v.applicable,
        "obstructed": v.obstructed,
        "certifying": v.certifying,
        "vacuous": v.vacuous,
        "reason": v.reason,
        "witnesses": [
            {
                "sign": sign,
                "embedding": [list(row) for row in emb.matrix],
                "intertwiner": [list(row) for row in t.matrix()],
            }
            for sign, emb, t in v.witnesses
        ],
    }


def report_to_json(report: ObstructionReport) -> dict:
    return {
        "name": report.name,
        "residue": report.residue,
        "cover_sign": report.cover_sign.value,
        "mobius": _verdict_json(report.mobius),
        "klein": _verdict_json(report.klein),
        "gamma4p_lower_bound": report.gamma4p_lower_bound,
        "known_gamma4": report.known_gamma4,
        "gap_detected": report.gap_detected,
        "action_defaulted": report.action_defaulted,
    }


def report_to_text(report: ObstructionReport) -> str:
    rows = [
        ("knot", report.name or "(unnamed)"),
        ("residue (sigma + 4 Arf mod 8)", str(report.residue)),
        ("cover sign", report.cover_sign.value),
        ("mobius obstructed", _cell(report.mobius)),
        ("klein obstructed", _cell(report.klein) if report.klein else "inapplicable"),
        ("gamma_{4,p} lower bound", str(report.gamma4p_lower_bound)),
        ("known gamma_4", str(report.known_gamma4)),
        ("gap detected", "yes" if report.gap_detected else "no"),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _cell(v: SurfaceVerdict) -> str:
    if not v.certifying:
        return "inconclusive (budget)"
    if v.obstructed is None:
        return "inapplicable"
    if v.obstructed:
        return "yes (vacuous)" if v.vacuous else "yes"
    return "no (witness found)"
