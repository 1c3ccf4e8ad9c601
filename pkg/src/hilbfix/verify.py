"""Internal two-path consistency checks.

Each check compares two computations that share no code: the theta product
against the direct enumeration of :mod:`hilbfix.oracle`, or lattice counts
against monomial-ideal combinatorics.  A failure here means the engine is
wrong; disagreements with published numbers live in :mod:`hilbfix.audit`.
"""

from __future__ import annotations

from dataclasses import dataclass

from hilbfix.catalog import ABELIAN, K3, euler_defect, iter_all, list_actions, local_action
from hilbfix.dynkin import DynkinType
from hilbfix.fixloc import component_counts
from hilbfix.oracle import (
    DirectCounter,
    colored_partition_check,
    cyclic_norm,
    local_rigid_counts,
    partition_profile,
    partitions,
    rigid_vectors,
)
from hilbfix.qseries import coefficient
from hilbfix.theta import p_formula, theta_series
from hilbfix.torsion import augmentation

__all__ = [
    "CheckResult",
    "check_admissible",
    "check_catalog",
    "check_kummer",
    "check_local",
    "run_checks",
]

DEFAULT_ADMISSIBLE_ORDER = 40
DEFAULT_KUMMER_ORDER = 20
DEFAULT_LOCAL_LEN = 12
CATALOG_ORDER = 30


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "detail": self.detail}


def check_admissible(max_order: int = DEFAULT_ADMISSIBLE_ORDER) -> list[CheckResult]:
    """Series vs direct count for every admissible K3 action, every exponent and every ``(n, k)``."""
    out = []
    for action in list_actions(K3, admissible=True):
        series = theta_series(action, max_order)
        counter = DirectCounter(action, max_order)
        bad = [e for e in range(max_order + 1) if coefficient(series, e) != counter.at(e)]
        checked = max_order + 1
        # component rows read off the series must match the direct count too
        for n in range(1, max_order + 1):
            report = component_counts(action, n)
            for k in range(n // action.order + 1):
                checked += 1
                if report.count(k) != counter.at(n - action.order * k):
                    bad.append((n, k))
        detail = f"order {max_order}" if not bad else f"mismatch at {bad[:5]}"
        out.append(CheckResult(f"series=direct {action.name}", not bad, checked, detail))
    return out


def check_kummer(max_order: int = DEFAULT_KUMMER_ORDER) -> list[CheckResult]:
    """Group-ring series vs the decorated direct tally, plus augmentation vs undecorated series."""
    out = []
    for action in list_actions(ABELIAN):
        if not action.kummer:
            continue
        series = theta_series(action, max_order)
        plain = theta_series(action, max_order, decorated=False)
        counter = DirectCounter(action, max_order)
        bad = []
        for e in range(max_order + 1):
            c = coefficient(series, e)
            if c != counter.at(e):
                bad.append(e)
            elif augmentation(c) != coefficient(plain, e):
                bad.append(("augmentation", e))
        detail = f"order {max_order}" if not bad else f"mismatch at {bad[:5]}"
        out.append(CheckResult(f"kummer series=direct {action.name}", not bad, max_order + 1, detail))
    return out


def check_local(orders=range(2, 7), length: int = DEFAULT_LOCAL_LEN) -> list[CheckResult]:
    """Cyclic local models: rigidity, nonnegativity, fibre sizes, lattice vs partitions."""
    out = []
    for a in orders:
        # (i) one partition per rigid m-vector
        checked, bad = 0, []
        for size in range(length + 1):
            for m, lams in sorted(rigid_vectors(a, size).items()):
                checked += 1
                if len(lams) != 1:
                    bad.append((size, m, len(lams)))
        out.append(
            CheckResult(f"rigid uniqueness a={a}", not bad, checked, f"first: {bad[0]}" if bad else "")
        )

        # (ii) m_hat0 >= q(m)
        checked, bad = 0, []
        for size in range(length + 1):
            for lam in partitions(size):
                prof = partition_profile(lam, a)
                checked += 1
                if prof.m_hat0 < cyclic_norm(prof.m_vector):
                    bad.append(lam)
        out.append(
            CheckResult(f"nonnegativity a={a}", not bad, checked, f"first: {bad[0]}" if bad else "")
        )

        # (iii) fibre over m has the size of a Hilbert scheme of points' fixed set
        report = colored_partition_check(a, length)
        detail = "" if report.passed else f"counterexample {report.counterexample}"
        out.append(CheckResult(f"colored partitions a={a}", report.passed, report.checked, detail))

        # (iv) rigid partition counts equal the local theta factor
        local = theta_series(local_action(DynkinType("A", a - 1)), length)
        counts = local_rigid_counts(a, length)
        ok = list(local.coeffs) == counts
        detail = "" if ok else f"lattice {list(local.coeffs)} vs partitions {counts}"
        out.append(CheckResult(f"rigid counts=theta a={a}", ok, length + 1, detail))
    return out


def check_catalog(order: int = CATALOG_ORDER) -> list[CheckResult]:
    """Every row: Euler identity, rank bound, and (for computable rows) theta sanity."""
    rows = list(iter_all())
    euler_bad = [a.key for a in rows if euler_defect(a) != 0]
    rank_bad = [a.key for a in rows if a.surface == K3 and a.config.total_rank > 19]
    theta_bad, checked = [], 0
    for action in rows:
        if action.surface == ABELIAN and not action.kummer:
            continue
        checked += 1
        series = theta_series(action, order, decorated=False)
        p = p_formula(action)
        if series[0] != 1 or any(c and e % p for e, c in enumerate(series.coeffs)):
            theta_bad.append(action.key)
    return [
        CheckResult("catalog euler identity", not euler_bad, len(rows), ", ".join(euler_bad)),
        CheckResult("catalog rank <= 19", not rank_bad, len(rows), ", ".join(rank_bad)),
        CheckResult(f"catalog theta(0)=1, p | support (order {order})", not theta_bad, checked, ", ".join(theta_bad)),
    ]


def run_checks(
    admissible: bool = False,
    kummer: bool = False,
    local: bool = False,
    catalog: bool = False,
    max_order: int | None = None,
    orders=range(2, 7),
    length: int = DEFAULT_LOCAL_LEN,
) -> list[CheckResult]:
    results = []
    if admissible:
        results += check_admissible(max_order or DEFAULT_ADMISSIBLE_ORDER)
    if kummer:
        results += check_kummer(max_order or DEFAULT_KUMMER_ORDER)
    if local:
        results += check_local(orders, length)
    if catalog:
        results += check_catalog()
    return results
