"""Theta generating functions of fixed loci.

For a point with inertia group ``G_i`` (order ``g_i``) of type ``Delta_i`` the
factor is the root-lattice theta series with ``z = q^{(|G|/g_i) d}`` and
nome ``q^{|G|}``; a lattice vector ``m`` contributes ``q^{e(m)}`` with

    e(m) = (|G|/g_i) (m.d) + |G| q(m) = (|G|/g_i) t(m),
    t(m) = m.d + g_i q(m)                 (local rigid colength).

On an abelian surface a point carries a torsion element ``gamma_i`` and the
contribution becomes ``gamma_i^{t(m)} q^{e(m)}`` in ``Z[A^G][[q]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from hilbfix.catalog import GroupAction
from hilbfix.dynkin import RootLatticeData, build_root_lattice, enumerate_vectors
from hilbfix.qseries import INTEGERS, TruncatedSeries, series_product
from hilbfix.torsion import FiniteAbelianGroup, GroupRing, GroupRingElement

__all__ = [
    "ThetaFactorSpec",
    "identity_projection",
    "p_formula",
    "theta_factor",
    "theta_series",
]


@dataclass(frozen=True)
class ThetaFactorSpec:
    lattice: RootLatticeData
    global_order: int
    decoration: tuple | None = None
    torsion: FiniteAbelianGroup | None = None

    def __post_init__(self):
        if self.global_order % self.inertia_order:
            raise ValueError(
                f"inertia order {self.inertia_order} does not divide |G| = {self.global_order}"
            )
        if (self.decoration is None) != (self.torsion is None):
            raise ValueError("a decoration needs its torsion group and vice versa")

    @property
    def inertia_order(self) -> int:
        return self.lattice.group_order

    @property
    def scale(self) -> int:
        return self.global_order // self.inertia_order

    @property
    def base(self) -> int:
        return self.global_order


@lru_cache(maxsize=None)
def _undecorated(lattice: RootLatticeData, scale: int, base: int, N: int) -> tuple[int, ...]:
    coeffs = [0] * (N + 1)
    for v in enumerate_vectors(lattice, (scale, base), N):
        coeffs[v.exponent] += 1
    return tuple(coeffs)


def theta_factor(spec: ThetaFactorSpec, N: int) -> TruncatedSeries:
    """The theta factor of one singular point, truncated at ``q^N``."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    if spec.decoration is None:
        return TruncatedSeries(INTEGERS, _undecorated(spec.lattice, spec.scale, spec.base, N))
    group = spec.torsion
    tally: list[dict] = [{} for _ in range(N + 1)]
    for v in enumerate_vectors(spec.lattice, (spec.scale, spec.base), N):
        g = group.scale(spec.decoration, v.colength)
        tally[v.exponent][g] = tally[v.exponent].get(g, 0) + 1
    return TruncatedSeries(GroupRing(group), tuple(GroupRingElement(group, t) for t in tally))


def _factor_specs(action: GroupAction, decorated: bool) -> list[ThetaFactorSpec]:
    specs = []
    for t, decoration in action.points():
        lattice = build_root_lattice(t)
        if decorated:
            specs.append(ThetaFactorSpec(lattice, action.order, decoration, action.torsion))
        else:
            specs.append(ThetaFactorSpec(lattice, action.order))
    return specs


def theta_series(action: GroupAction, N: int, decorated: bool | None = None) -> TruncatedSeries:
    """Product of the theta factors over all singular points of ``S/G``.

    Integer-valued unless the action carries torsion decorations, in which
    case the coefficients lie in ``Z[A^G]``.  ``decorated=False`` forces the
    plain integer series for a decorated configuration.
    """
    if decorated is None:
        decorated = action.decorations is not None
    if decorated and action.decorations is None:
        raise ValueError(f"{action.name} has no torsion decorations")
    ring = GroupRing(action.torsion) if decorated else INTEGERS
    factors = [theta_factor(spec, N) for spec in _factor_specs(action, decorated)]
    return series_product(factors, order=N, ring=ring)


def identity_projection(series: TruncatedSeries) -> TruncatedSeries:
    """Apply ``[1]`` coefficientwise; integer series pass through unchanged."""
    if series.ring == INTEGERS:
        return series
    from hilbfix.torsion import identity_coefficient

    return series.map(identity_coefficient)


def p_formula(action: GroupAction) -> int:
    """``|G| / lcm(g_i)``, which divides every exponent in the support."""
    orders = action.inertia_orders()
    if not orders:
        return action.order
    return action.order // lcm(*orders)


def support_gcd(series: TruncatedSeries) -> int:
    """gcd of the positive exponents with nonzero coefficient (0 if none)."""
    g = 0
    zero = series.ring.zero
    for i, c in enumerate(series.coeffs[1:], start=1):
        if c != zero:
            g = gcd(g, i)
    return g
