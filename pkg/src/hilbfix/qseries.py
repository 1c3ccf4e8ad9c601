"""Truncated power series in ``q`` over an exact commutative ring.

Two coefficient rings are needed: the integers, and the integral group ring
of a finite abelian group (see :mod:`hilbfix.torsion`).  A ring object only
has to provide ``zero``, ``one`` and ``contains``; coefficients themselves
use ``+`` and ``*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Any, Iterable, Sequence

__all__ = [
    "INTEGERS",
    "IntegerRing",
    "RingMismatchError",
    "TruncatedSeries",
    "TruncationError",
    "coefficient",
    "series_add",
    "series_mul",
    "series_product",
]


class RingMismatchError(ValueError):
    """Operands live over different coefficient rings."""


class TruncationError(IndexError):
    """Coefficient requested beyond the truncation order."""


@dataclass(frozen=True)
class IntegerRing:
    zero = 0
    one = 1

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def __str__(self):
        return "ZZ"


INTEGERS = IntegerRing()


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})``."""

    ring: Any
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, ring=INTEGERS, order: int | None = None):
        """Build a series, padding with zeros (or cutting) to ``order``."""
        coeffs = list(coeffs)
        if order is not None:
            coeffs = coeffs[: order + 1] + [ring.zero] * (order + 1 - len(coeffs))
        return cls(ring, tuple(coeffs))

    @classmethod
    def zero(cls, order: int, ring=INTEGERS):
        return cls(ring, (ring.zero,) * (order + 1))

    @classmethod
    def one(cls, order: int, ring=INTEGERS):
        return cls(ring, (ring.one,) + (ring.zero,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} series to {order}")
        return TruncatedSeries(self.ring, self.coeffs[: order + 1])

    def map(self, f, ring=INTEGERS) -> "TruncatedSeries":
        """Apply a ring homomorphism coefficientwise."""
        return TruncatedSeries(ring, tuple(f(c) for c in self.coeffs))

    def __getitem__(self, i: int):
        return coefficient(self, i)

    def __add__(self, other):
        return series_add(self, other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == self.ring.zero:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not mono:
                terms.append(f"{c}")
            elif c == self.ring.one:
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}" if " " in str(c) else f"{c}*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def _check_ring(a: TruncatedSeries, b: TruncatedSeries):
    if a.ring != b.ring:
        raise RingMismatchError(f"coefficient rings differ: {a.ring} vs {b.ring}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_ring(a, b)
    n = min(a.order, b.order)
    return TruncatedSeries(a.ring, tuple(a.coeffs[i] + b.coeffs[i] for i in range(n + 1)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the smaller order."""
    _check_ring(a, b)
    n = min(a.order, b.order)
    zero = a.ring.zero
    out = [zero] * (n + 1)
    bc = b.coeffs
    # factors are typically sparse, so skip zero terms on both sides
    b_support = [(j, bc[j]) for j in range(n + 1) if bc[j] != zero]
    for i in range(n + 1):
        ai = a.coeffs[i]
        if ai == zero:
            continue
        for j, bj in b_support:
            if i + j > n:
                break
            out[i + j] = out[i + j] + ai * bj
    return TruncatedSeries(a.ring, tuple(out))


def series_product(
    factors: Iterable[TruncatedSeries], order: int | None = None, ring=INTEGERS
) -> TruncatedSeries:
    """Left fold of :func:`series_mul`.

    The empty product is ``1``, truncated at ``order`` (default ``0``).
    """
    factors = list(factors)
    if not factors:
        return TruncatedSeries.one(order or 0, ring)
    return reduce(series_mul, factors)


def coefficient(a: TruncatedSeries, i: int):
    """``c_i``; zero for negative ``i``, an error past the truncation order."""
    if i < 0:
        return a.ring.zero
    if i > a.order:
        raise TruncationError(f"coefficient {i} requested from a series of order {a.order}")
    return a.coeffs[i]
