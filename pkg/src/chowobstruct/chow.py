"""The Chow ring of a product of projective spaces.

CH*(P^{n1} x ... x P^{nk}) is the truncated polynomial ring
Z[x1,...,xk] / (x1^{n1+1}, ..., xk^{nk+1}) graded by total degree, with xi the
hyperplane class pulled back from the i-th factor.  Classes are stored
sparsely as monomial -> coefficient maps; any product monomial exceeding a
truncation bound is zero and is dropped on the spot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterator, Mapping, Sequence

from .intlinalg import IntegerMatrix


class AmbientMismatchError(Exception):
    """Raised when classes from different ambient spaces are combined."""


@dataclass(frozen=True)
class AmbientSpace:
    """Product of projective spaces P^{n1} x ... x P^{nk}."""

    factor_dims: tuple[int, ...]

    def __init__(self, factor_dims: Sequence[int]):
        dims = tuple(int(n) for n in factor_dims)
        if not dims or any(n < 1 for n in dims):
            raise ValueError("ambient needs at least one factor, each of dimension >= 1")
        object.__setattr__(self, "factor_dims", dims)

    @property
    def k(self) -> int:
        return len(self.factor_dims)

    @property
    def total_dim(self) -> int:
        return sum(self.factor_dims)

    def monomial_basis(self, degree: int) -> tuple[tuple[int, ...], ...]:
        """All exponent vectors of the given total degree within the truncation bounds.

        Ordered by descending lexicographic comparison, so powers of the first
        factor sort first: in P^1 x P^3 degree 2 this is (x1*x2, x2^2).
        """
        if degree < 0 or degree > self.total_dim:
            return ()
        exps = [
            e
            for e in _cartesian(*(range(n + 1) for n in self.factor_dims))
            if sum(e) == degree
        ]
        exps.sort(reverse=True)
        return tuple(exps)

    def monomial_str(self, exps: Sequence[int]) -> str:
        parts = [
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
            for i, e in enumerate(exps)
            if e
        ]
        return "*".join(parts) if parts else "1"

    def in_bounds(self, exps: Sequence[int]) -> bool:
        return all(0 <= e <= n for e, n in zip(exps, self.factor_dims))

    def __str__(self) -> str:
        return " x ".join(f"P^{n}" for n in self.factor_dims)


class ChowClass:
    """A graded class: integer combination of monomials of one fixed codimension."""

    __slots__ = ("ambient", "degree", "_items")

    def __init__(self, ambient: AmbientSpace, degree: int, coeffs: Mapping[tuple[int, ...], int]):
        degree = int(degree)
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        items = []
        for exps, c in coeffs.items():
            exps = tuple(int(e) for e in exps)
            c = int(c)
            if c == 0:
                continue
            if len(exps) != ambient.k or not ambient.in_bounds(exps):
                raise ValueError(f"monomial {exps} is not valid in {ambient}")
            if sum(exps) != degree:
                raise ValueError(f"monomial {exps} has degree {sum(exps)}, expected {degree}")
            items.append((exps, c))
        items.sort(reverse=True)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_items", tuple(items))

    def __setattr__(self, name, value):
        raise AttributeError("ChowClass is immutable")

    @classmethod
    def zero(cls, ambient: AmbientSpace, degree: int) -> "ChowClass":
        return cls(ambient, degree, {})

    @classmethod
    def monomial(cls, ambient: AmbientSpace, exps: Sequence[int], coeff: int = 1) -> "ChowClass":
        exps = tuple(int(e) for e in exps)
        return cls(ambient, sum(exps), {exps: coeff})

    @classmethod
    def from_coords(cls, ambient: AmbientSpace, degree: int, coords: Sequence[int]) -> "ChowClass":
        basis = ambient.monomial_basis(degree)
        if len(coords) != len(basis):
            raise ValueError(f"expected {len(basis)} coordinates, got {len(coords)}")
        return cls(ambient, degree, dict(zip(basis, coords)))

    @property
    def coeffs(self) -> dict[tuple[int, ...], int]:
        return dict(self._items)

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self._items)

    def coefficient(self, exps: Sequence[int]) -> int:
        exps = tuple(exps)
        for e, c in self._items:
            if e == exps:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._items

    def coords(self) -> tuple[int, ...]:
        """Coordinates in the monomial basis of this degree."""
        return tuple(self.coefficient(e) for e in self.ambient.monomial_basis(self.degree))

    def _check_ambient(self, other: "ChowClass"):
        if not isinstance(other, ChowClass) or other.ambient != self.ambient:
            raise AmbientMismatchError("classes live in different ambient spaces")

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check_ambient(other)
        if self.degree != other.degree:
            raise ValueError(f"cannot add degree {self.degree} to degree {other.degree}")
        out = self.coeffs
        for e, c in other._items:
            out[e] = out.get(e, 0) + c
        return ChowClass(self.ambient, self.degree, out)

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-1) * other

    def __neg__(self) -> "ChowClass":
        return (-1) * self

    def __rmul__(self, k: int) -> "ChowClass":
        return ChowClass(self.ambient, self.degree, {e: k * c for e, c in self._items})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowClass)
            and self.ambient == other.ambient
            and self.degree == other.degree
            and self._items == other._items
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.degree, self._items))

    def __str__(self) -> str:
        return class_str(self)

    def __repr__(self) -> str:
        return f"ChowClass({self.ambient}, deg {self.degree}, {class_str(self)})"


def cup(a: ChowClass, b: ChowClass) -> ChowClass:
    """Cup product: bilinear, exponentwise, dropping monomials past a truncation bound."""
    a._check_ambient(b)
    ambient = a.ambient
    degree = a.degree + b.degree
    out: dict[tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if not ambient.in_bounds(e):
                continue
            out[e] = out.get(e, 0) + ca * cb
    return ChowClass(ambient, degree, out)


def reduce_mod2(c: ChowClass) -> ChowClass:
    """Reduce all coefficients into {0, 1}."""
    return ChowClass(c.ambient, c.degree, {e: v % 2 for e, v in c.items()})


def divisor_multiplication_matrix(ambient: AmbientSpace, z: ChowClass, j: int) -> IntegerMatrix:
    """Matrix of cup-with-z from the degree j-1 basis to the degree j basis.

    Rows are indexed by degree-j monomials, columns by degree-(j-1) monomials,
    both in basis order; column c holds the coordinates of z * (c-th monomial).
    """
    if z.ambient != ambient:
        raise AmbientMismatchError("divisor class lives in a different ambient space")
    if z.degree != 1:
        raise ValueError("divisor class must have degree 1")
    if j < 1:
        raise ValueError("j must be a positive integer")
    basis_from = ambient.monomial_basis(j - 1)
    basis_to = ambient.monomial_basis(j)
    columns = [cup(z, ChowClass.monomial(ambient, e)).coords() for e in basis_from]
    rows = [[columns[c][r] for c in range(len(basis_from))] for r in range(len(basis_to))]
    return IntegerMatrix(rows, cols=len(basis_from))


_FACTOR_RE = re.compile(r"(x(\d+)|xi|tau)(?:\^(\d+))?$")
_ALIASES = {"ξ": "x1", "τ": "x2"}


def parse_class(ambient: AmbientSpace, text: str, degree: int | None = None) -> ChowClass:
    """Parse a class literal such as '3*x1 + 4*x2' or 'x1*x2^2'.

    xi and the Greek letters ξ, τ are accepted as aliases for x1 and x2.
    Monomials that exceed a truncation bound are zero in the ring and are
    dropped (their written degree still participates in degree inference).
    Pass degree explicitly to parse '0' at a specific codimension.
    """
    src = text.strip()
    for greek, name in _ALIASES.items():
        src = src.replace(greek, name)
    if not src:
        raise ValueError("empty class literal")

    tokens = re.findall(r"[+-]|[^+-]+", src)
    terms: list[tuple[tuple[int, ...], int]] = []
    degrees_seen: set[int] = set()
    sign = 1
    expect_term = True
    for tok in tokens:
        tok = tok.strip()
        if tok in {"+", "-"}:
            if expect_term and tok == "-":
                sign = -sign
            elif expect_term:
                raise ValueError(f"misplaced sign in {text!r}")
            else:
                sign = 1 if tok == "+" else -1
                expect_term = True
            continue
        if not tok:
            continue
        coeff = sign
        exps = [0] * ambient.k
        for factor in tok.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in term {tok!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"cannot parse factor {factor!r}")
            name = m.group(1)
            if name == "xi":
                idx = 0
            elif name == "tau":
                idx = 1
            else:
                idx = int(m.group(2)) - 1
            if not 0 <= idx < ambient.k:
                raise ValueError(f"{name} is not a factor of {ambient}")
            exps[idx] += int(m.group(3) or 1)
        if coeff:
            degrees_seen.add(sum(exps))
            terms.append((tuple(exps), coeff))
        sign = 1
        expect_term = False
    if expect_term:
        raise ValueError(f"trailing sign in {text!r}")

    if degree is None:
        if len(degrees_seen) > 1:
            raise ValueError(f"mixed degrees {sorted(degrees_seen)} in {text!r}")
        degree = degrees_seen.pop() if degrees_seen else 0
    elif degrees_seen and degrees_seen != {degree}:
        raise ValueError(f"class {text!r} has degree {sorted(degrees_seen)}, expected {degree}")

    coeffs: dict[tuple[int, ...], int] = {}
    for exps, c in terms:
        if ambient.in_bounds(exps):
            coeffs[exps] = coeffs.get(exps, 0) + c
    return ChowClass(ambient, degree, coeffs)


def class_str(c: ChowClass) -> str:
    if c.is_zero():
        return "0"
    parts = []
    for exps, coeff in c.items():
        mono = c.ambient.monomial_str(exps)
        if mono == "1":
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append(mono)
        elif coeff == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{coeff}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")
