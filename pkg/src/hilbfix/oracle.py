"""Independent checks for the theta-series route.

Nothing here touches :mod:`hilbfix.qseries` or the Fincke-Pohst enumeration
in :mod:`hilbfix.dynkin`.  Two routes are provided:

* direct enumeration over the product lattice ``M_G``: per-point exponent
  lists come from a brute-force box scan (box from the exact inverse Cartan
  matrix, via sympy), and tuples with a prescribed total exponent are counted
  by a depth-first search over the points;
* monomial ideals for cyclic singularities ``C^2/Z_a``: partitions, their
  residue profiles, cores and quotients.

D and E points have no partition model, so they are covered only by the
first route.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np
import sympy

from hilbfix.catalog import ABELIAN, GroupAction
from hilbfix.dynkin import DynkinType, build_root_lattice
from hilbfix.torsion import GroupRingElement

__all__ = [
    "DirectCounter",
    "PartitionProfile",
    "colored_partition_check",
    "direct_count",
    "direct_tuples",
    "local_exponents",
    "local_rigid_counts",
    "multipartition_count",
    "partition_profile",
    "partitions",
    "rigid_vectors",
]


# -- per-point exponent lists -------------------------------------------------


def _box(t: DynkinType, scale: int, base: int, bound: int) -> list[int]:
    """Per-coordinate half-widths of a box containing all ``e(m) <= bound``."""
    L = build_root_lattice(t)
    C = -sympy.Matrix(L.gram)
    Cinv = C.inv()
    d = sympy.Matrix(L.dims)
    shift = sympy.Rational(scale, base) * Cinv * d
    radius = sympy.Rational(2 * bound, base) + (shift.T * C * shift)[0, 0]
    return [
        int(sympy.ceiling(abs(shift[j]) + sympy.sqrt(radius * Cinv[j, j])))
        for j in range(L.rank)
    ]


@lru_cache(maxsize=None)
def local_exponents(t: DynkinType, group_order: int, bound: int) -> tuple[tuple[int, int], ...]:
    """``(e(m), t(m))`` for all lattice vectors of one point with ``e(m) <= bound``.

    ``group_order`` is ``|G|``; the scale is ``|G|/g`` and the base ``|G|``.
    """
    L = build_root_lattice(t)
    g = L.group_order
    scale = group_order // g
    widths = _box(t, scale, group_order, bound)
    axes = [np.arange(-w, w + 1, dtype=np.int64) for w in widths]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, L.rank)
    gram = np.array(L.gram, dtype=np.int64)
    pair = np.einsum("ij,jk,ik->i", grid, gram, grid)
    q = -pair // 2
    md = grid @ np.array(L.dims, dtype=np.int64)
    colength = md + g * q
    e = scale * colength
    keep = e <= bound
    out = sorted(zip(e[keep].tolist(), colength[keep].tolist()))
    return tuple(out)


# -- direct count over M_G ----------------------------------------------------


class DirectCounter:
    """Counts tuples ``(m_i)`` over all singular points by total exponent.

    For decorated (Kummer) actions the tally is kept per torsion element,
    each tuple contributing ``prod_i gamma_i^{t(m_i)}``.  Subcounts are
    memoized on ``(point index, residual exponent)``.
    """

    def __init__(self, action: GroupAction, bound: int, decorated: bool | None = None):
        self.action = action
        self.bound = bound
        self.decorated = action.decorations is not None if decorated is None else decorated
        self.group = action.torsion if self.decorated else None
        self.points = []
        for t, gamma in action.points():
            exps = local_exponents(t, action.order, bound)
            self.points.append((exps, gamma if self.decorated else None))
        self._memo: dict = {}

    def _shift(self, gamma, power):
        factors = self.group.invariant_factors
        return tuple((x * power) % n for x, n in zip(gamma, factors))

    def _combine(self, target, tally, gamma):
        for elem, c in tally.items():
            key = tuple((a + b) % n for a, b, n in zip(elem, gamma, self.group.invariant_factors))
            target[key] += c

    def _count(self, i: int, residual: int):
        key = (i, residual)
        if key in self._memo:
            return self._memo[key]
        if i == len(self.points):
            if self.decorated:
                result = {self.group.identity: 1} if residual == 0 else {}
            else:
                result = 1 if residual == 0 else 0
            self._memo[key] = result
            return result
        exps, gamma = self.points[i]
        if self.decorated:
            acc: dict = defaultdict(int)
            for e, colength in exps:
                if e > residual:
                    break
                sub = self._count(i + 1, residual - e)
                if sub:
                    self._combine(acc, sub, self._shift(gamma, colength))
            result = {k: v for k, v in acc.items() if v}
        else:
            result = 0
            for e, _ in exps:
                if e > residual:
                    break
                result += self._count(i + 1, residual - e)
        self._memo[key] = result
        return result

    def at(self, exponent: int):
        if exponent < 0:
            return GroupRingElement(self.group) if self.decorated else 0
        if exponent > self.bound:
            raise ValueError(f"exponent {exponent} beyond the counter bound {self.bound}")
        result = self._count(0, exponent)
        if self.decorated:
            return GroupRingElement(self.group, result)
        return result


def direct_count(action: GroupAction, n: int, k: int):
    """Number of lattice tuples with total exponent ``n - |G| k``.

    An integer for K3 actions, the full ``Z[A^G]`` tally for Kummer actions.
    """
    target = n - action.order * k
    return DirectCounter(action, max(target, 0)).at(target)


def direct_tuples(action: GroupAction, target: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every tuple of lattice vectors with total exponent ``target`` (plain DFS).

    Yields one vector per point, aligned with ``action.points()``.  Meant for
    small targets; the count grows quickly.
    """
    per_point = []
    for t, _ in action.points():
        L = build_root_lattice(t)
        scale = action.order // L.group_order
        vecs = []
        widths = _box(t, scale, action.order, max(target, 0))
        for m in np.ndindex(*(2 * w + 1 for w in widths)):
            vec = tuple(int(x) - w for x, w in zip(m, widths))
            q = -sum(L.gram[i][j] * vec[i] * vec[j] for i in range(L.rank) for j in range(L.rank)) // 2
            e = scale * (sum(a * b for a, b in zip(vec, L.dims)) + L.group_order * q)
            if e <= target:
                vecs.append((e, vec))
        per_point.append(sorted(vecs))

    chosen: list = []

    def dfs(i, residual):
        if i == len(per_point):
            if residual == 0:
                yield tuple(chosen)
            return
        for e, vec in per_point[i]:
            if e > residual:
                break
            chosen.append(vec)
            yield from dfs(i + 1, residual - e)
            chosen.pop()

    yield from dfs(0, target)


# -- partitions and the cyclic local model ------------------------------------


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else min(largest, n)
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class PartitionProfile:
    """Residue data of a monomial ideal fixed by ``Z/a`` acting with weights ``(1, -1)``.

    ``residues[j]`` counts boxes ``(r, c)`` with ``c - r = j mod a``.  In the
    representation ring the quotient ``C[x,y]/I`` is
    ``m_hat0 [rho_reg] + sum_j m[j] [rho_j]`` with ``m_hat0 = residues[0]``.
    """

    partition: tuple[int, ...]
    a: int
    residues: tuple[int, ...]

    @property
    def m_hat0(self) -> int:
        return self.residues[0]

    @property
    def m_vector(self) -> tuple[int, ...]:
        return tuple(n_j - self.residues[0] for n_j in self.residues[1:])

    @property
    def size(self) -> int:
        return sum(self.partition)


def partition_profile(lam: Sequence[int], a: int) -> PartitionProfile:
    if a < 2:
        raise ValueError("cyclic order must be at least 2")
    residues = [0] * a
    for r, row in enumerate(lam):
        for c in range(row):
            residues[(c - r) % a] += 1
    return PartitionProfile(tuple(lam), a, tuple(residues))


def cyclic_norm(m: Sequence[int]) -> int:
    """``q(m)`` on the ``A_{a-1}`` root lattice: ``sum m_j^2 - sum m_j m_{j+1}``."""
    return sum(x * x for x in m) - sum(x * y for x, y in zip(m, m[1:]))


def rigid_vectors(a: int, size: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Rigid ``m``-vectors realised by partitions of ``size``, with their partitions.

    A profile is rigid when ``m_hat0 == q(m)``.
    """
    out: dict = defaultdict(list)
    for lam in partitions(size):
        prof = partition_profile(lam, a)
        if prof.m_hat0 == cyclic_norm(prof.m_vector):
            out[prof.m_vector].append(lam)
    return dict(out)


def local_rigid_counts(a: int, L: int) -> list[int]:
    """Number of rigid ``m``-vectors of colength ``l`` for ``l = 0 .. L``."""
    if a < 2 or L < 0:
        raise ValueError("need a >= 2 and L >= 0")
    return [len(rigid_vectors(a, size)) for size in range(L + 1)]


@lru_cache(maxsize=None)
def multipartition_count(a: int, w: int) -> int:
    """Number of ``a``-tuples of partitions of total size ``w``."""
    if w < 0:
        return 0
    # number of partitions p(0..w), then the a-fold convolution
    p = [0] * (w + 1)
    p[0] = 1
    for part in range(1, w + 1):
        for i in range(part, w + 1):
            p[i] += p[i - part]
    counts = [1] + [0] * w
    for _ in range(a):
        nxt = [0] * (w + 1)
        for i, ci in enumerate(counts):
            if ci:
                for j in range(w + 1 - i):
                    nxt[i + j] += ci * p[j]
        counts = nxt
    return counts[w]


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    checked: int
    counterexample: tuple | None = None


def colored_partition_check(a: int, l_max: int) -> CheckReport:
    """Fibre over each ``m``: ``#{lam : m(lam) = m}`` equals the number of
    ``a``-tuples of partitions of total size ``m_hat0 - q(m)``.
    """
    checked = 0
    for size in range(l_max + 1):
        fibres: dict = defaultdict(list)
        for lam in partitions(size):
            prof = partition_profile(lam, a)
            fibres[prof.m_vector].append(prof)
        for m, profs in sorted(fibres.items()):
            hat0 = profs[0].m_hat0
            expected = multipartition_count(a, hat0 - cyclic_norm(m))
            checked += 1
            if len(profs) != expected:
                return CheckReport(False, checked, (size, m, len(profs), expected))
    return CheckReport(True, checked)


def kummer_ready(action: GroupAction) -> bool:
    return action.surface != ABELIAN or action.kummer
