"""The squaring operation Sq^2 on mod-2 classes of products of projective spaces.

On these rings Sq^2 is determined by three facts: it is additive mod 2, it
squares degree-1 classes, and it satisfies the Cartan product rule
Sq^2(ab) = Sq^2(a) b + Sq^1(a) Sq^1(b) + a Sq^2(b).  The middle term never
contributes because Sq^1 vanishes identically here (see SQ1_JUSTIFICATION), so
on a monomial x1^{a_1} ... xk^{a_k} the operation comes out as

    sum_i a_i * x_i^{a_i + 1} * prod_{j != i} x_j^{a_j}   (mod 2),

with any factor pushed past its truncation bound killing the term.  The output
degree is always the input degree plus one.
"""

from __future__ import annotations

from typing import Sequence

from .chow import AmbientSpace, ChowClass, reduce_mod2

# Sq^1 is the zero operation on every class handled here: the mod-2 motivic
# cohomology group it would land in vanishes for all smooth schemes.
SQ1_JUSTIFICATION = "H^{3,1}(W, Z) = 0 for every smooth scheme W"


def sq1(c: ChowClass) -> ChowClass:
    """Sq^1, identically zero on these classes (degree still shifts by one)."""
    return ChowClass.zero(c.ambient, c.degree + 1)


def sq2_monomial(ambient: AmbientSpace, exps: Sequence[int]) -> ChowClass:
    """Sq^2 of a single monomial, as a mod-2 class of one higher degree."""
    exps = tuple(int(e) for e in exps)
    if len(exps) != ambient.k or not ambient.in_bounds(exps):
        raise ValueError(f"monomial {exps} is not valid in {ambient}")
    degree = sum(exps)
    coeffs: dict[tuple[int, ...], int] = {}
    for i, a in enumerate(exps):
        if a % 2 == 0:
            continue
        bumped = exps[:i] + (a + 1,) + exps[i + 1:]
        if not ambient.in_bounds(bumped):
            continue
        coeffs[bumped] = (coeffs.get(bumped, 0) + 1) % 2
    return ChowClass(ambient, degree + 1, coeffs)


def sq2(c: ChowClass) -> ChowClass:
    """Additive extension of sq2_monomial; input coefficients are read mod 2."""
    out = ChowClass.zero(c.ambient, c.degree + 1)
    for exps, coeff in reduce_mod2(c).items():
        if coeff % 2:
            out = out + sq2_monomial(c.ambient, exps)
    return reduce_mod2(out)
