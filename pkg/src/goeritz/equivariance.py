"""Equivariant structure on lattice embeddings.

Given an embedding phi of a Gram lattice and an isometry f of its source,
decide whether some signed permutation F of the target intertwines them
(F . phi = phi . f).  A fast rational refutation looks at the map induced by
f on the saturation of the image lattice: if that map fails to be integral,
no intertwiner of any kind exists and the offending rational entries form a
reproducible certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _intlinalg as la
from .lattice import (
    GramLattice,
    LatticeEmbedding,
    SearchIncomplete,
    SignedPermutation,
    _match_rows,
    enumerate_embeddings,
)


def is_isometry(f: la.IntMatrix, lat: GramLattice) -> bool:
    """True iff f^T G f = G."""
    f = la.freeze(f)
    if la.shape(f) != (lat.rank, lat.rank):
        raise ValueError("action matrix has wrong shape")
    return la.matmul(la.matmul(la.transpose(f), lat.matrix), f) == lat.matrix


@dataclass(frozen=True)
class SpanTestResult:
    """Outcome of the rational-span test.

    The induced map is expressed in the frozen saturation basis (column
    Hermite form of the saturation of the image lattice), so certificates are
    reproducible.  certificate lists every non-integral entry as
    (row, col, value).
    """

    passed: bool
    induced_map: tuple[tuple[Fraction, ...], ...]
    certificate: tuple[tuple[int, int, Fraction], ...] = ()
    reason: str = ""


def saturation_basis(phi: la.IntMatrix) -> la.IntMatrix:
    """Canonical basis of the saturation of the column lattice of phi.

    The saturation is the intersection of the rational column span with the
    ambient integer lattice; the basis returned is its column Hermite normal
    form, which is the frozen choice used for span-test certificates.
    """
    left_kernel = la.kernel_basis(la.transpose(phi))  # columns spanning ker phi^T
    _, corank = la.shape(left_kernel)
    m, _ = la.shape(phi)
    if corank == 0:
        return la.identity(m)
    sat = la.kernel_basis(la.transpose(left_kernel))
    return la.column_hnf(sat)


def span_restriction_test(phi: LatticeEmbedding, f: la.IntMatrix) -> SpanTestResult:
    """Necessary condition for an intertwiner: integrality on the saturation.

    The map sending phi(X_i) to phi(f(X_i)) is uniquely defined on the
    rational span of the image; it must restrict to an integral isometry of
    the saturation for any intertwiner to exist.  Failure is a complete
    refutation; passing is necessary but not sufficient.
    """
    f = la.freeze(f)
    if not is_isometry(f, phi.source):
        raise ValueError("f is not an isometry of the source form")
    basis = saturation_basis(phi.matrix)
    coords = la.solve_exact(basis, phi.matrix)  # basis @ coords = phi, integral
    assert all(x.denominator == 1 for row in coords for x in row)
    coords = tuple(tuple(int(x) for x in row) for row in coords)
    # induced map M with M @ coords = coords @ f
    rhs = la.matmul(coords, f)
    induced = la.transpose(la.solve_exact(la.transpose(coords), la.transpose(rhs)))
    certificate = tuple(
        (i, j, x)
        for i, row in enumerate(induced)
        for j, x in enumerate(row)
        if x.denominator != 1
    )
    if certificate:
        return SpanTestResult(False, induced, certificate, "induced map not integral")
    m_int = tuple(tuple(int(x) for x in row) for row in induced)
    form = la.scale(phi.target.sign, la.matmul(la.transpose(basis), basis))
    if la.matmul(la.matmul(la.transpose(m_int), form), m_int) != form:
        return SpanTestResult(
            False, induced, (), "induced map is not an isometry of the saturation"
        )
    return SpanTestResult(True, induced)


@dataclass(frozen=True)
class EquivarianceVerdict:
    """witness, refuted_rational (with certificate), or refuted_search."""

    outcome: str
    witness: SignedPermutation | None = None
    certificate: tuple[tuple[int, int, Fraction], ...] = ()

    def __post_init__(self):
        if self.outcome not in ("witness", "refuted_rational", "refuted_search"):
            raise ValueError(f"unknown outcome {self.outcome!r}")

    @property
    def has_witness(self) -> bool:
        return self.outcome == "witness"


def find_equivariant_witness(
    phi: LatticeEmbedding, f: la.IntMatrix
) -> EquivarianceVerdict:
    """Decide existence of a signed permutation F with F . phi = phi . f.

    Stage 1 is the rational-span test.  Stage 2 matches the rows of phi . f
    against the rows of phi up to sign: F exists iff the two row multisets
    agree up to sign, and the matching itself is the witness.  Coordinates
    outside the image span (zero rows) are filled by the identity assignment.
    """
    f = la.freeze(f)
    span = span_restriction_test(phi, f)  # validates the isometry precondition
    if not span.passed:
        return EquivarianceVerdict("refuted_rational", certificate=span.certificate)
    witness = _match_rows(phi.matrix, la.matmul(phi.matrix, f))
    if witness is None:
        return EquivarianceVerdict("refuted_search")
    assert witness.apply_rows(phi.matrix) == la.matmul(phi.matrix, f)
    return EquivarianceVerdict("witness", witness=witness)


def exists_equivariant_embedding(
    lat: GramLattice,
    f: la.IntMatrix,
    corank: int,
    sign: int,
    max_nodes: int | None = None,
) -> tuple[LatticeEmbedding, SignedPermutation] | None:
    """First equivariant embedding of (Z^n, G) into (Z^{n+corank}, sign*Id).

    Runs the full enumeration and tests each canonical representative;
    checking representatives suffices because conjugating an embedding by a
    signed permutation conjugates any witness to another signed permutation.
    Propagates SearchIncomplete: an exhausted budget never turns into a
    "no equivariant embedding" answer.
    """
    if not is_isometry(f, lat):
        raise ValueError("f is not an isometry of the form")
    for rep in enumerate_embeddings(lat, corank, sign, max_nodes=max_nodes):
        verdict = find_equivariant_witness(rep, f)
        if verdict.has_witness:
            return rep, verdict.witness
    return None


__all__ = [
    "EquivarianceVerdict",
    "SearchIncomplete",
    "SpanTestResult",
    "exists_equivariant_embedding",
    "find_equivariant_witness",
    "is_isometry",
    "saturation_basis",
    "span_restriction_test",
]
