"""The rank-2 algebraizability obstruction theta = Sq^2(c2) + c1 * c2 and its verdicts.

A pair (c1, c2) of ambient classes of degrees 1 and 2 lifts candidate Chern
classes on the complement.  theta is a degree-3 mod-2 class on the ambient
space; the pair is realizable by a rank-2 bundle on the complement exactly
when theta dies in CH^3(complement)/2.  That group is never computed directly;
instead theta is pushed into quotients with a known containment direction:

* zero in a quotient by a subgroup lying INSIDE the pushforward image
  (the divisor-multiple subgroup, or a custom lower bound) forces theta = 0 in
  CH^3/2, hence ALGEBRAIZABLE;
* nonzero in a quotient by a subgroup asserted to CONTAIN the image (an
  even-degree witness quotient) forces theta != 0 in CH^3/2, hence
  NOT_ALGEBRAIZABLE;
* otherwise the verdict is UNDETERMINED and is never upgraded.

The declared containing assumption, when one is supplied, is taken at face
value and its witness check runs first; the divisor-multiple restriction is
always computed and recorded alongside.  Verdicts are only issued on ambient
spaces of total dimension 4, where the criterion applies.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .abelian import AbelianPresentation, GroupElement, InfiniteGroupError
from .chow import AmbientMismatchError, ChowClass, class_str, cup, reduce_mod2
from .complement import (
    ComplementModel,
    Direction,
    ExactnessCertificate,
    PushforwardAssumption,
    complement_group,
)
from .intlinalg import IntegerMatrix, lattice_contains
from .steenrod import sq2

THREADS_ENV_VAR = "CHOW_OBSTRUCT_THREADS"

UNVERIFIED_HYPOTHESES = (
    "the complement is treated as a smooth affine fourfold over an algebraically "
    "closed field of characteristic != 2; this is recorded, not checked"
)


class DimensionUnsupportedError(Exception):
    """Raised when a verdict is requested on an ambient of total dimension != 4."""


class Verdict(str, Enum):
    ALGEBRAIZABLE = "ALGEBRAIZABLE"
    NOT_ALGEBRAIZABLE = "NOT_ALGEBRAIZABLE"
    UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class ChernPair:
    """Candidate first and second Chern classes, lifted to the ambient space."""

    c1: ChowClass
    c2: ChowClass

    def __post_init__(self):
        if self.c1.ambient != self.c2.ambient:
            raise AmbientMismatchError("c1 and c2 live in different ambient spaces")
        if self.c1.degree != 1 or self.c2.degree != 2:
            raise ValueError(
                f"expected degrees (1, 2), got ({self.c1.degree}, {self.c2.degree})"
            )


@dataclass(frozen=True, eq=False)
class ObstructionReport:
    theta_on_y: ChowClass
    theta_image: GroupElement
    verdict: Verdict
    justification: dict


def theta(pair: ChernPair) -> ChowClass:
    """Sq^2(c2) + c1 * c2 as a degree-3 mod-2 class on the ambient space."""
    return reduce_mod2(sq2(reduce_mod2(pair.c2)) + reduce_mod2(cup(pair.c1, pair.c2)))


@lru_cache(maxsize=None)
def _mod2_quotient(
    model: ComplementModel, j: int, assumption: PushforwardAssumption
) -> tuple[AbelianPresentation, ExactnessCertificate]:
    group, cert = complement_group(model, j, assumption)
    return group.tensor_mod2(), cert


@lru_cache(maxsize=None)
def _squaring_descends(model: ComplementModel) -> bool:
    """Check that Sq^2 maps degree-2 divisor-multiple relations into the degree-3
    ones mod 2, so the obstruction of a coset does not depend on the chosen lift."""
    naive = PushforwardAssumption.naive()
    deg2, _ = complement_group(model, 2, naive)
    deg3, _ = complement_group(model, 3, naive)
    n3 = len(model.ambient.monomial_basis(3))
    rows = list(deg3.relations.entries)
    rows.extend(tuple(2 * int(i == j) for j in range(n3)) for i in range(n3))
    lattice = IntegerMatrix(rows, cols=n3)
    for rel in deg2.relations.entries:
        image = sq2(ChowClass.from_coords(model.ambient, 2, rel))
        if not lattice_contains(lattice, image.coords()):
            return False
    return True


def sq2_descends(model: ComplementModel) -> bool:
    """Public wrapper for the lift-independence check of Sq^2 on this model."""
    return _squaring_descends(model)


def decide(
    model: ComplementModel,
    pair: ChernPair,
    assumption: PushforwardAssumption | None = None,
) -> ObstructionReport:
    """Evaluate theta for the pair and issue a three-valued verdict.

    The verdict is sound relative to the declared assumption: NOT_ALGEBRAIZABLE
    is only ever derived from a quotient asserted to contain the pushforward
    image, ALGEBRAIZABLE only from a quotient by a subgroup lying inside it.
    """
    if assumption is None:
        assumption = PushforwardAssumption.naive()
    if model.ambient.total_dim != 4:
        raise DimensionUnsupportedError(
            f"criterion applies to total dimension 4, not {model.ambient.total_dim}"
        )
    if pair.c1.ambient != model.ambient:
        raise AmbientMismatchError("pair does not live on the model's ambient space")
    if not _squaring_descends(model):
        raise AssertionError("squaring does not descend for this model")

    th = theta(pair)
    coords = th.coords()
    naive = PushforwardAssumption.naive()
    naive_group, naive_cert = _mod2_quotient(model, 3, naive)
    naive_image = naive_group.element(coords)
    naive_zero = naive_image.is_zero()

    assm_group, assm_cert = _mod2_quotient(model, 3, assumption)
    assm_image = assm_group.element(coords)
    assm_zero = assm_image.is_zero()

    contains_side = assumption.direction in (Direction.CONTAINS_IMAGE, Direction.EQUALS_IMAGE)
    lower_side_zero = naive_zero or (
        assumption.direction in (Direction.CONTAINED_IN_IMAGE, Direction.EQUALS_IMAGE)
        and assm_zero
    )

    if contains_side and not assm_zero:
        verdict = Verdict.NOT_ALGEBRAIZABLE
        basis = (
            f"theta is nonzero in the degree-3 mod-2 quotient by the "
            f"'{assumption.label()}' subgroup, asserted to contain the pushforward image"
        )
    elif lower_side_zero:
        verdict = Verdict.ALGEBRAIZABLE
        if naive_zero:
            basis = (
                "theta vanishes in the degree-3 mod-2 quotient by the divisor-multiple "
                "subgroup, a lower bound for the pushforward image by the projection formula"
            )
        else:
            basis = (
                f"theta vanishes in the degree-3 mod-2 quotient by the "
                f"'{assumption.label()}' subgroup, asserted to lie inside the pushforward image"
            )
    else:
        verdict = Verdict.UNDETERMINED
        basis = (
            "theta survives every quotient bounding the pushforward image from below, "
            "and no containing subgroup certifies nonvanishing"
        )

    justification = {
        "assumption": assumption.label(),
        "direction": assumption.direction.value,
        "certificates": {
            "naive": naive_cert.as_dict(),
            "assumption": assm_cert.as_dict(),
        },
        "naive_theta_zero": naive_zero,
        "assumption_theta_zero": assm_zero,
        "verdict_basis": basis,
        "unverified_hypotheses": UNVERIFIED_HYPOTHESES,
    }
    return ObstructionReport(
        theta_on_y=th,
        theta_image=assm_image,
        verdict=verdict,
        justification=justification,
    )


@dataclass(frozen=True)
class ClassifyRow:
    c1: str
    c2: str
    verdict: Verdict


def _thread_count(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV_VAR, "1"))
    return max(1, threads)


def classify_all(
    model: ComplementModel,
    assumption: PushforwardAssumption | None = None,
    threads: int | None = None,
) -> list[ClassifyRow]:
    """One verdict per element of CH^1(X) x CH^2(X).

    Cosets are enumerated through the divisor-multiple quotients in degrees 1
    and 2 (the declared assumption only ever concerns degree 3) and each coset
    is lifted to the ambient space through its smallest nonnegative
    representative.  Row order is the enumeration order, so output is
    deterministic; worker threads, capped by CHOW_OBSTRUCT_THREADS, only split
    the per-row work.
    """
    if assumption is None:
        assumption = PushforwardAssumption.naive()
    naive = PushforwardAssumption.naive()
    g1, _ = complement_group(model, 1, naive)
    g2, _ = complement_group(model, 2, naive)
    if not (g1.is_finite() and g2.is_finite()):
        raise InfiniteGroupError(
            f"classification sweep needs finite groups, got {g1.describe()} and {g2.describe()}"
        )

    lifts = []
    for e1 in g1.elements():
        lift1 = ChowClass.from_coords(model.ambient, 1, e1.coords)
        for e2 in g2.elements():
            lift2 = ChowClass.from_coords(model.ambient, 2, e2.coords)
            lifts.append((lift1, lift2))

    def row(pair_lifts: tuple[ChowClass, ChowClass]) -> ClassifyRow:
        lift1, lift2 = pair_lifts
        report = decide(model, ChernPair(lift1, lift2), assumption)
        return ClassifyRow(c1=class_str(lift1), c2=class_str(lift2), verdict=report.verdict)

    nthreads = _thread_count(threads)
    if nthreads == 1:
        return [row(p) for p in lifts]
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        return list(pool.map(row, lifts))
