"""Finite abelian groups and their integral group rings.

The group ``A^G`` of ``G``-fixed torsion points of an abelian surface is given
by invariant factors, e.g. ``(2, 2, 2, 2)`` for ``A[2]``.  Elements are residue
vectors and the group law is written additively on them; in the group ring
the same law is the multiplication of basis elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping

__all__ = [
    "FiniteAbelianGroup",
    "GroupMismatchError",
    "GroupRing",
    "GroupRingElement",
    "augmentation",
    "gr_mul",
    "identity_coefficient",
]


class GroupMismatchError(ValueError):
    """Group-ring operands over different groups."""


@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(self.invariant_factors)
        if any(not isinstance(n, int) or n < 2 for n in factors):
            raise ValueError(f"invariant factors must be integers >= 2, got {factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def order(self) -> int:
        out = 1
        for n in self.invariant_factors:
            out *= n
        return out

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.invariant_factors)

    def element(self, residues: Iterable[int]) -> tuple[int, ...]:
        residues = tuple(residues)
        if len(residues) != len(self.invariant_factors):
            raise ValueError(f"{residues} is not an element of {self}")
        return tuple(r % n for r, n in zip(residues, self.invariant_factors))

    def contains(self, g) -> bool:
        return (
            isinstance(g, tuple)
            and len(g) == len(self.invariant_factors)
            and all(isinstance(r, int) and 0 <= r < n for r, n in zip(g, self.invariant_factors))
        )

    def add(self, g, h) -> tuple[int, ...]:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.invariant_factors))

    def scale(self, g, k: int) -> tuple[int, ...]:
        """``k * g`` (that is ``g^k`` in multiplicative notation)."""
        return tuple((a * k) % n for a, n in zip(g, self.invariant_factors))

    def elements(self) -> Iterator[tuple[int, ...]]:
        """All elements in lexicographic order."""
        return product(*(range(n) for n in self.invariant_factors))

    def __str__(self):
        if not self.invariant_factors:
            return "1"
        return "x".join(f"Z/{n}" for n in self.invariant_factors)


class GroupRingElement:
    """An element ``sum_g c_g [g]`` of ``Z[A]``; zero coefficients are dropped."""

    __slots__ = ("group", "_coeffs", "_hash")

    def __init__(self, group: FiniteAbelianGroup, coeffs: Mapping | None = None):
        self.group = group
        clean = {}
        for g, c in (coeffs or {}).items():
            if c:
                clean[group.element(g)] = clean.get(group.element(g), 0) + c
        self._coeffs = {g: c for g, c in sorted(clean.items()) if c}
        self._hash = None

    @classmethod
    def basis(cls, group: FiniteAbelianGroup, g, coeff: int = 1) -> "GroupRingElement":
        return cls(group, {g: coeff})

    @classmethod
    def scalar(cls, group: FiniteAbelianGroup, c: int) -> "GroupRingElement":
        return cls(group, {group.identity: c})

    @property
    def coeffs(self) -> dict:
        """Support with coefficients, in lexicographic element order (a copy)."""
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def _other(self, other) -> "GroupRingElement":
        if isinstance(other, int) and not isinstance(other, bool):
            return GroupRingElement.scalar(self.group, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.group != self.group:
            raise GroupMismatchError(f"{self.group} vs {other.group}")
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for g, c in other._coeffs.items():
            out[g] = out.get(g, 0) + c
        return GroupRingElement(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.group, {g: -c for g, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return gr_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = GroupRingElement.scalar(self.group, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.group, tuple(self._coeffs.items())))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"GroupRingElement({self.group}, {self._coeffs})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for g, c in self._coeffs.items():
            label = "1" if g == self.group.identity else "[" + ",".join(map(str, g)) + "]"
            parts.append(label if c == 1 and label != "1" else f"{c}" if label == "1" else f"{c}*{label}")
        return " + ".join(parts)


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution product in ``Z[A]``."""
    if a.group != b.group:
        raise GroupMismatchError(f"{a.group} vs {b.group}")
    add = a.group.add
    out: dict = {}
    for g, c in a._coeffs.items():
        for h, d in b._coeffs.items():
            k = add(g, h)
            out[k] = out.get(k, 0) + c * d
    return GroupRingElement(a.group, out)


def identity_coefficient(a: GroupRingElement) -> int:
    """The coefficient ``[1]a`` of the identity element."""
    return a._coeffs.get(a.group.identity, 0)


def augmentation(a: GroupRingElement) -> int:
    """Sum of all coefficients; the ring map ``Z[A] -> Z`` sending each ``[g]`` to 1."""
    return sum(a._coeffs.values())


@dataclass(frozen=True)
class GroupRing:
    """Coefficient-ring descriptor for :class:`hilbfix.qseries.TruncatedSeries`."""

    group: FiniteAbelianGroup

    @property
    def zero(self) -> GroupRingElement:
        return GroupRingElement(self.group)

    @property
    def one(self) -> GroupRingElement:
        return GroupRingElement.scalar(self.group, 1)

    def contains(self, x) -> bool:
        return isinstance(x, GroupRingElement) and x.group == self.group

    def __str__(self):
        return f"ZZ[{self.group}]"
