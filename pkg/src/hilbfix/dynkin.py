"""ADE root lattices, McKay data and bounded lattice-vector enumeration.

Node labels follow a fixed convention so that Gram matrices and dimension
vectors are deterministic:

* ``A_n``: the path ``1-2-...-n``;
* ``D_n``: the path ``1-...-(n-2)`` with ``n-1`` and ``n`` attached to ``n-2``;
* ``E_n``: the path ``1-...-(n-1)`` with ``n`` attached to ``3``.

The pairing is the negative definite Dynkin pairing (``-2`` on the diagonal,
``1`` on edges).  The norm used throughout is ``q(m) = -(m, m)/2``, which is a
positive integer for ``m != 0``.

Everything here is exact: integers and :class:`fractions.Fraction` only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

__all__ = [
    "DynkinType",
    "LatticeVector",
    "RootLatticeData",
    "build_root_lattice",
    "enumerate_vectors",
    "enumerate_vectors_naive",
    "ldl_decomposition",
    "norm",
    "norm_ball",
    "parse_dynkin",
]

FAMILIES = ("A", "D", "E")


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown Dynkin family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise TypeError("rank must be an int")
        if self.family == "A" and self.rank < 1:
            raise ValueError(f"A_{self.rank}: rank must be >= 1")
        if self.family == "D" and self.rank < 4:
            raise ValueError(f"D_{self.rank}: rank must be >= 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError(f"E_{self.rank}: rank must be 6, 7 or 8")

    def __str__(self):
        return f"{self.family}_{self.rank}"

    def edges(self) -> list[tuple[int, int]]:
        """Edges of the diagram as 0-based node pairs."""
        r = self.rank
        if self.family == "A":
            return [(i, i + 1) for i in range(r - 1)]
        if self.family == "D":
            return [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
        return [(i, i + 1) for i in range(r - 2)] + [(2, r - 1)]


def parse_dynkin(s: str) -> DynkinType:
    """Parse ``"A_3"`` / ``"E6"`` into a :class:`DynkinType`."""
    s = s.strip().replace("_", "")
    if len(s) < 2 or not s[1:].isdigit():
        raise ValueError(f"malformed Dynkin type {s!r}")
    return DynkinType(s[0].upper(), int(s[1:]))


# McKay dimension vectors in the node order above
_E_DIMS = {
    6: (1, 2, 3, 2, 1, 2),
    7: (2, 3, 4, 3, 2, 1, 2),
    8: (2, 4, 6, 5, 4, 3, 2, 3),
}
_E_ORDERS = {6: 24, 7: 48, 8: 120}


@dataclass(frozen=True)
class RootLatticeData:
    """Root lattice ``M_Delta`` of one ADE type with its McKay data.

    ``gram`` is the Dynkin pairing, ``dims`` the dimensions of the nontrivial
    irreducible representations of the binary polyhedral group ``G_Delta``
    attached to the nodes, and ``group_order`` is ``|G_Delta|``.
    """

    dynkin: DynkinType
    gram: tuple[tuple[int, ...], ...]
    dims: tuple[int, ...]
    group_order: int

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """The (positive definite) Cartan matrix ``-gram``."""
        return tuple(tuple(-x for x in row) for row in self.gram)

    def dot_dims(self, m: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(m, self.dims))


@lru_cache(maxsize=None)
def build_root_lattice(t: DynkinType) -> RootLatticeData:
    r = t.rank
    gram = [[0] * r for _ in range(r)]
    for i in range(r):
        gram[i][i] = -2
    for i, j in t.edges():
        gram[i][j] = gram[j][i] = 1
    if t.family == "A":
        dims = (1,) * r
        order = r + 1
    elif t.family == "D":
        dims = (1,) + (2,) * (r - 3) + (1, 1)
        order = 4 * (r - 2)
    else:
        dims = _E_DIMS[r]
        order = _E_ORDERS[r]
    return RootLatticeData(t, tuple(tuple(row) for row in gram), dims, order)


def norm(L: RootLatticeData, m: Sequence[int]) -> int:
    """``q(m) = -(m, m)/2`` for an integer vector ``m``."""
    if len(m) != L.rank:
        raise ValueError(f"vector of length {len(m)} for lattice of rank {L.rank}")
    total = 0
    for i, row in enumerate(L.gram):
        mi = m[i]
        if mi:
            total += mi * sum(g * mj for g, mj in zip(row, m))
    # the lattice is even, so the pairing is always even
    return -total // 2


@dataclass(frozen=True, order=True)
class LatticeVector:
    """An enumerated vector with its weighted exponent and local colength."""

    exponent: int
    m: tuple[int, ...]
    colength: int


@lru_cache(maxsize=None)
def ldl_decomposition(cartan: tuple[tuple[int, ...], ...]):
    """Exact ``C = L D L^T`` for a positive definite integer matrix.

    Returns ``(lower, diag)`` with ``lower`` unit lower triangular, so that
    ``x^T C x = sum_j diag[j] * (x_j + sum_{i>j} lower[i][j] x_i)^2``.
    """
    n = len(cartan)
    lower = [[Fraction(0)] * n for _ in range(n)]
    diag = [Fraction(0)] * n
    for j in range(n):
        s = Fraction(cartan[j][j]) - sum(lower[j][k] ** 2 * diag[k] for k in range(j))
        if s <= 0:
            raise ValueError("matrix is not positive definite")
        diag[j] = s
        lower[j][j] = Fraction(1)
        for i in range(j + 1, n):
            lower[i][j] = (
                Fraction(cartan[i][j]) - sum(lower[i][k] * lower[j][k] * diag[k] for k in range(j))
            ) / s
    return tuple(map(tuple, lower)), tuple(diag)


def _solve(cartan, rhs) -> list[Fraction]:
    """Exact solve ``C x = rhs`` via the LDL^T factors."""
    lower, diag = ldl_decomposition(cartan)
    n = len(rhs)
    y = [Fraction(0)] * n
    for i in range(n):
        y[i] = Fraction(rhs[i]) - sum(lower[i][k] * y[k] for k in range(i))
    z = [y[i] / diag[i] for i in range(n)]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        x[i] = z[i] - sum(lower[k][i] * x[k] for k in range(i + 1, n))
    return x


def _isqrt_ceil(x: Fraction) -> int:
    """An integer ``w >= sqrt(x)`` for rational ``x >= 0``."""
    if x <= 0:
        return 0
    return math.isqrt(math.floor(x)) + 1


def _check_weight(L: RootLatticeData, s: int, b: int):
    if s <= 0 or b <= 0:
        raise ValueError("scale and base must be positive")


def _ellipsoid(L: RootLatticeData, s: int, b: int, E: int):
    """Shift ``c`` and radius ``R`` with ``e(m) <= E  <=>  (m+c)^T C (m+c) <= R``."""
    C = L.cartan()
    c = [Fraction(s, b) * x for x in _solve(C, L.dims)]
    cCc = sum(c[i] * sum(C[i][j] * c[j] for j in range(L.rank)) for i in range(L.rank))
    R = Fraction(2 * E, b) + cCc
    return C, c, R


def _record(L: RootLatticeData, m: tuple[int, ...], s: int, b: int) -> LatticeVector:
    q = norm(L, m)
    md = L.dot_dims(m)
    return LatticeVector(s * md + b * q, m, md + L.group_order * q)


def _fincke_pohst(L: RootLatticeData, c: Sequence[Fraction], R: Fraction):
    """Yield every integer ``x`` with ``(x+c)^T C (x+c) <= R`` (``C`` the Cartan matrix)."""
    r = L.rank
    lower, diag = ldl_decomposition(L.cartan())
    x = [0] * r

    def descend(j: int, budget: Fraction):
        # coordinate j is constrained by diag[j] * (x_j + c_j + sum_{i>j} lower[i][j] (x_i + c_i))^2
        u = c[j] + sum(lower[i][j] * (x[i] + c[i]) for i in range(j + 1, r))
        T = budget / diag[j]
        w = _isqrt_ceil(T)
        for v in range(math.floor(-u) - w, math.ceil(-u) + w + 1):
            dev = (v + u) ** 2
            if dev > T:
                continue
            x[j] = v
            if j == 0:
                yield tuple(x)
            else:
                yield from descend(j - 1, budget - diag[j] * dev)
        x[j] = 0

    yield from descend(r - 1, R)


def enumerate_vectors(
    L: RootLatticeData, weight: tuple[int, int], bound: int
) -> list[LatticeVector]:
    """All ``m`` with ``e(m) = s*(m.d) + b*q(m) <= bound``.

    ``weight`` is ``(s, b)``.  Each entry also carries the local colength
    ``t(m) = m.d + |G_Delta| q(m)``.  Pruning is Fincke-Pohst on the exact
    LDL^T factors of the Cartan matrix, after completing the square to absorb
    the linear term.  Output is sorted by exponent, then by ``m``.
    """
    s, b = weight
    _check_weight(L, s, b)
    if bound < 0:
        return []
    _, c, R = _ellipsoid(L, s, b, bound)
    out = []
    for m in _fincke_pohst(L, c, R):
        vec = _record(L, m, s, b)
        if vec.exponent <= bound:
            out.append(vec)
    out.sort()
    return out


def norm_ball(L: RootLatticeData, Q: int) -> list[tuple[int, ...]]:
    """All ``m`` with ``q(m) <= Q``, in enumeration order."""
    if Q < 0:
        return []
    return list(_fincke_pohst(L, [Fraction(0)] * L.rank, Fraction(2 * Q)))


def box_radius(L: RootLatticeData, weight: tuple[int, int], bound: int) -> int:
    """Half-width ``B`` of a box ``[-B, B]^rank`` containing every ``e(m) <= bound``.

    Uses ``(x_j)^2 <= (C^{-1})_{jj} * x^T C x`` for the shifted vector.
    """
    s, b = weight
    C, c, R = _ellipsoid(L, s, b, max(bound, 0))
    B = 0
    for j in range(L.rank):
        unit = [0] * L.rank
        unit[j] = 1
        cinv_jj = _solve(C, unit)[j]
        B = max(B, math.ceil(abs(c[j])) + _isqrt_ceil(R * cinv_jj))
    return B


def enumerate_vectors_naive(
    L: RootLatticeData, weight: tuple[int, int], bound: int, box: int | None = None
) -> list[LatticeVector]:
    """Debug oracle for :func:`enumerate_vectors`: scan a full box."""
    s, b = weight
    _check_weight(L, s, b)
    if bound < 0:
        return []
    B = box_radius(L, weight, bound) if box is None else box
    out = []
    for m in product(range(-B, B + 1), repeat=L.rank):
        vec = _record(L, m, s, b)
        if vec.exponent <= bound:
            out.append(vec)
    out.sort()
    return out
