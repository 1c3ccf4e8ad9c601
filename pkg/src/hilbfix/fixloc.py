"""Component counts and dimensions of fixed loci.

``N_k``, the number of ``2k``-dimensional components of ``(S^[n])^G``, is the
theta coefficient at ``n - |G| k`` (its ``[1]``-projection on an abelian
surface, which selects the components over the identity Albanese fibre).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

from hilbfix.catalog import ABELIAN, GroupAction, NotKummerEnabledError
from hilbfix.dynkin import build_root_lattice, norm
from hilbfix.qseries import TruncatedSeries, coefficient
from hilbfix.theta import identity_projection, p_formula, support_gcd, theta_series

__all__ = [
    "ComponentReport",
    "ComponentRow",
    "EmptyFixedLocusError",
    "Table2Cell",
    "component_counts",
    "counting_series",
    "stratum_dimension",
    "support_gcd_pair",
    "table2_row",
    "top_dimension",
]


class EmptyFixedLocusError(ValueError):
    """The fixed locus has no components at all."""


@dataclass(frozen=True)
class ComponentRow:
    k: int
    dim: int
    count: int


@dataclass(frozen=True)
class ComponentReport:
    key: str
    group: str
    n: int
    surface: str
    rows: tuple[ComponentRow, ...]
    top_k: int | None
    epsilon: int | None
    p_empirical: int
    p_formula: int
    warnings: tuple[str, ...] = field(default=())

    @property
    def empty(self) -> bool:
        return self.top_k is None

    def count(self, k: int) -> int:
        for row in self.rows:
            if row.k == k:
                return row.count
        return 0

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "group": self.group,
            "n": self.n,
            "surface": self.surface,
            "empty": self.empty,
            "components": [{"k": r.k, "dim": r.dim, "count": r.count} for r in self.rows],
            "top_dim": None if self.empty else 2 * self.top_k,
            "epsilon": self.epsilon,
            "p_empirical": self.p_empirical,
            "p_formula": self.p_formula,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ComponentReport":
        rows = tuple(ComponentRow(c["k"], c["dim"], c["count"]) for c in d["components"])
        top = d["top_dim"]
        return cls(
            key=d["key"],
            group=d["group"],
            n=d["n"],
            surface=d["surface"],
            rows=rows,
            top_k=None if top is None else top // 2,
            epsilon=d["epsilon"],
            p_empirical=d["p_empirical"],
            p_formula=d["p_formula"],
            warnings=tuple(d.get("warnings", ())),
        )


def counting_series(action: GroupAction, N: int) -> TruncatedSeries:
    """Integer series whose coefficients count components (``[1]``-projected if decorated)."""
    if action.surface == ABELIAN and not action.kummer:
        raise NotKummerEnabledError(f"{action.name} has no Kummer theta treatment")
    return identity_projection(theta_series(action, N))


def component_counts(action: GroupAction, n: int) -> ComponentReport:
    if n < 1:
        raise ValueError("n must be positive")
    G = action.order
    series = counting_series(action, max(n, G))
    rows = tuple(
        ComponentRow(k, 2 * k, coefficient(series, n - G * k)) for k in range(n // G, -1, -1)
    )
    nonzero = [r.k for r in rows if r.count]
    top_k = max(nonzero) if nonzero else None
    if top_k is None:
        rows = ()
    p_emp = support_gcd(series)
    p_form = p_formula(action)
    warnings = ()
    if p_emp != p_form:
        warnings = (f"support gcd {p_emp} differs from |G|/lcm(g_i) = {p_form}",)
    return ComponentReport(
        key=action.key,
        group=action.name,
        n=n,
        surface=action.surface,
        rows=rows,
        top_k=top_k,
        epsilon=None if top_k is None else n // G - top_k,
        p_empirical=p_emp,
        p_formula=p_form,
        warnings=warnings,
    )


def top_dimension(action: GroupAction, n: int) -> tuple[int, int, int]:
    """``(top_k, N_top_k, epsilon)`` with ``epsilon = floor(n/|G|) - top_k``."""
    report = component_counts(action, n)
    if report.empty:
        raise EmptyFixedLocusError(f"fixed locus of {action.name} on S^[{n}] is empty")
    return report.top_k, report.count(report.top_k), report.epsilon


def support_gcd_pair(action: GroupAction, N: int | None = None) -> tuple[int, int]:
    """``(p_empirical, p_formula)``; ``N`` defaults to ``|G|``."""
    N = action.order if N is None else N
    if N < action.order:
        raise ValueError("support gcd needs N >= |G|")
    return support_gcd(counting_series(action, N)), p_formula(action)


def stratum_dimension(
    action: GroupAction, n: int, m: Sequence[Sequence[int]]
) -> tuple[int, int]:
    """``(O, dim_half)`` for the stratum with lattice data ``m`` (one vector per point).

    ``O = (n - sum_i (|G|/g_i) m_i.d_i) / |G|`` and ``dim_half = O - sum_i q(m_i)``;
    the stratum has complex dimension ``2 * dim_half`` when that is nonnegative
    and is empty otherwise.
    """
    points = action.points()
    if len(m) != len(points):
        raise ValueError(f"expected {len(points)} vectors, got {len(m)}")
    G = action.order
    weighted = 0
    q_total = 0
    for (t, _), vec in zip(points, m):
        L = build_root_lattice(t)
        weighted += (G // L.group_order) * L.dot_dims(vec)
        q_total += norm(L, vec)
    rest = n - weighted
    if rest < 0:
        raise ValueError(f"weighted colength {weighted} exceeds n = {n}")
    if rest % G:
        raise ValueError(f"n - weighted colength = {rest} is not a multiple of |G| = {G}")
    O = rest // G
    return O, O - q_total


@dataclass(frozen=True)
class Table2Cell:
    """Top-dimensional count at ``n = m|G| + k p``."""

    k: int
    n: int
    residue: int
    top_k: int | None
    epsilon: int | None
    count: int

    def as_dict(self) -> dict:
        return asdict(self)


def table2_row(action: GroupAction, m: int = 2) -> list[Table2Cell]:
    """One row of the top-dimension table, for ``k = 0 .. |G|/p - 1``.

    ``p`` is the empirical support gcd.  ``m`` must be at least the largest
    defect that occurs; the counts no longer depend on ``m`` beyond that.
    """
    G = action.order
    p, _ = support_gcd_pair(action)
    cells = []
    for k in range(G // p):
        n = m * G + k * p
        report = component_counts(action, n)
        if report.empty:
            cells.append(Table2Cell(k, n, k * p, None, None, 0))
        else:
            cells.append(
                Table2Cell(k, n, k * p, report.top_k, report.epsilon, report.count(report.top_k))
            )
    return cells
