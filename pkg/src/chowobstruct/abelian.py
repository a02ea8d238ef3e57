"""Finitely generated abelian groups presented by generators and an integer relation matrix.

A presentation is the quotient Z^n / L where L is the row lattice of the
relation matrix.  Elements are coordinate vectors in generator coordinates;
two vectors represent the same element exactly when their difference lies in
L.  Canonical per-coset representatives come from reduction against the
Hermite form of L, which makes equality, hashing and zero-tests cheap and
deterministic.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

from .intlinalg import (
    IntegerMatrix,
    SnfDecomposition,
    hermite_normal_form,
    hermite_reduce,
    smith_normal_form,
    xgcd,
)


class InfiniteGroupError(Exception):
    """Raised when an operation requires a finite group but a free part is present."""


def bezout(d1: int, d2: int) -> tuple[int, int, int]:
    """Return (g, m, n) with m*d1 + n*d2 = g = gcd(d1, d2) and |m| minimal.

    m is only determined modulo d2/g; of the two candidates closest to zero the
    positive one wins a tie.  Generator images in quotient bases depend on this
    choice, so it is pinned here once.
    """
    if d1 <= 0 or d2 <= 0:
        raise ValueError("bezout expects positive integers")
    g, x, _ = xgcd(d1, d2)
    step = d2 // g
    m = x % step
    if 2 * m > step:
        m -= step
    n = (g - m * d1) // d2
    return g, m, n


class AbelianPresentation:
    """Abelian group given by generator names and a relation matrix (rows are relations)."""

    __slots__ = ("generator_names", "relations", "_snf", "_hnf", "_factors")

    def __init__(self, generator_names: Sequence[str], relations: IntegerMatrix | Iterable[Iterable[int]]):
        names = tuple(str(s) for s in generator_names)
        if not isinstance(relations, IntegerMatrix):
            relations = IntegerMatrix(relations, cols=len(names))
        if relations.cols != len(names):
            raise ValueError(
                f"relation width {relations.cols} != number of generators {len(names)}"
            )
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relations", relations)
        object.__setattr__(self, "_snf", None)
        object.__setattr__(self, "_hnf", None)
        object.__setattr__(self, "_factors", None)

    def __setattr__(self, name, value):
        raise AttributeError("AbelianPresentation is immutable")

    @classmethod
    def from_json(cls, obj: dict) -> "AbelianPresentation":
        """Build from {"generators": [...], "relations": [[...], ...]} (entries int or str)."""
        gens = obj["generators"]
        rows = obj.get("relations", [])
        return cls(gens, IntegerMatrix(rows, cols=len(gens)))

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    def snf(self) -> SnfDecomposition:
        if self._snf is None:
            object.__setattr__(self, "_snf", smith_normal_form(self.relations))
        return self._snf

    def hnf(self) -> IntegerMatrix:
        if self._hnf is None:
            h, _ = hermite_normal_form(self.relations)
            object.__setattr__(self, "_hnf", h)
        return self._hnf

    def invariant_factors(self) -> tuple[int, ...]:
        """Diagonal of the relation SNF with 1s dropped and a 0 per free generator.

        The result is in divisibility order with zeros (free ranks) trailing.
        """
        if self._factors is None:
            diag = self.snf().diagonal
            factors = tuple(d for d in diag if d != 1) + (0,) * (self.ngens - len(diag))
            object.__setattr__(self, "_factors", factors)
        return self._factors

    def is_finite(self) -> bool:
        return 0 not in self.invariant_factors()

    def order(self) -> int:
        """Number of elements, or 0 for an infinite group."""
        if not self.is_finite():
            return 0
        return math.prod(self.invariant_factors())

    def describe(self) -> str:
        """Invariant factors as a direct-sum string, e.g. 'Z/3 ⊕ Z/4' or 'Z/2 ⊕ Z'."""
        factors = self.invariant_factors()
        if not factors:
            return "0"
        return " ⊕ ".join("Z" if f == 0 else f"Z/{f}" for f in factors)

    def canonical_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        return hermite_reduce(self.hnf(), coords)

    def element(self, coords: Sequence[int]) -> "GroupElement":
        return GroupElement(self, coords)

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ngens)

    def tensor_mod2(self) -> "AbelianPresentation":
        """The mod-2 reduction: same generators, relations extended by 2*(each generator)."""
        n = self.ngens
        rows = list(self.relations.entries)
        rows.extend(tuple(2 * int(i == j) for j in range(n)) for i in range(n))
        return AbelianPresentation(self.generator_names, IntegerMatrix(rows, cols=n))

    def elements(self) -> Iterator["GroupElement"]:
        """Yield one representative per coset, breadth-first from zero.

        Representatives are found by repeatedly adding single generators, so
        each coset is labelled by a smallest nonnegative generator combination;
        the zero coset comes first and the order is deterministic.  Raises
        InfiniteGroupError when a free generator is present.
        """
        if not self.is_finite():
            raise InfiniteGroupError(f"group {self.describe()} is infinite")
        n = self.ngens
        start = (0,) * n
        seen = {self.canonical_coords(start)}
        queue = deque([start])
        while queue:
            coords = queue.popleft()
            yield GroupElement(self, coords)
            for i in range(n):
                nb = coords[:i] + (coords[i] + 1,) + coords[i + 1:]
                key = self.canonical_coords(nb)
                if key not in seen:
                    seen.add(key)
                    queue.append(nb)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AbelianPresentation)
            and self.generator_names == other.generator_names
            and self.relations == other.relations
        )

    def __hash__(self) -> int:
        return hash((self.generator_names, self.relations))

    def __repr__(self) -> str:
        return f"AbelianPresentation({self.generator_names!r}, {self.relations.to_lists()!r})"


class GroupElement:
    """Element of an AbelianPresentation, stored as a raw coordinate vector."""

    __slots__ = ("group", "coords")

    def __init__(self, group: AbelianPresentation, coords: Sequence[int]):
        coords = tuple(int(c) for c in coords)
        if len(coords) != group.ngens:
            raise ValueError(f"coordinate length {len(coords)} != {group.ngens} generators")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    def canonical(self) -> tuple[int, ...]:
        return self.group.canonical_coords(self.coords)

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def order(self) -> int:
        """Least k >= 1 with k*self = 0, or 0 if the element has infinite order."""
        snf = self.group.snf()
        v = snf.v.entries
        n = self.group.ngens
        y = [sum(self.coords[i] * v[i][j] for i in range(n)) for j in range(n)]
        diag = snf.diagonal
        result = 1
        for j in range(n):
            s = diag[j] if j < len(diag) else 0
            if s == 0:
                if y[j]:
                    return 0
            else:
                r = y[j] % s
                if r:
                    result = math.lcm(result, s // math.gcd(s, r))
        return result

    def _check_same_group(self, other: "GroupElement"):
        if not isinstance(other, GroupElement) or other.group != self.group:
            raise ValueError("elements belong to different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_same_group(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check_same_group(other)
        return GroupElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "GroupElement":
        return GroupElement(self.group, tuple(k * a for a in self.coords))

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.group == other.group
            and self.canonical() == other.canonical()
        )

    def __hash__(self) -> int:
        return hash((self.group, self.canonical()))

    def __repr__(self) -> str:
        return f"GroupElement({self.canonical()!r} in {self.group.describe()})"
