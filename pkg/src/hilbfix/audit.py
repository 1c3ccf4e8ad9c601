"""Published reference values and the engine-vs-publication comparison.

Mismatches found here are reported as warnings, never as failures: several
published values are typos, and the engine's own correctness is established
by the two-path checks in :mod:`hilbfix.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from hilbfix.catalog import GroupAction, kummer_action, lookup, parse_config
from hilbfix.fixloc import support_gcd_pair
from hilbfix.qseries import coefficient
from hilbfix.theta import identity_projection, theta_series

__all__ = [
    "PUBLISHED_KUMMER",
    "PUBLISHED_SERIES",
    "PUBLISHED_TABLE2",
    "Table2Comparison",
    "audit_warnings",
    "compare_table2",
]

STAR = "*"
ELLIPSIS = "..."

# K3 expansions as {exponent: coefficient}; only printed terms are listed
PUBLISHED_SERIES = {
    "C_2": {0: 1, 1: 8, 2: 28, 3: 40},
    "C_3": {0: 1, 1: 6, 2: 27, 3: 80},
    "C_2x2": {0: 1, 2: 12, 4: 66, 6: 232, 8: 627},
    "D_8": {0: 1, 4: 2, 8: 14, 16: 93, 20: 182, 24: 406},
}

# identity-projected Kummer expansions, exponents 0..6
PUBLISHED_KUMMER = {
    "C_2": (1, 1, 0, 36, 140, 378, 1024),
    "C_3": (1, 1, 6, 12, 88, 255, 738),
    "C_4": (1, 1, 8, 13, 35, 80, 147),
    "C_6": (1, 1, 6, 12, 32, 63, 126),
}


@dataclass(frozen=True)
class PublishedRow:
    label: int
    name: str
    p: int
    top: tuple  # defect-0 cells
    below: tuple = ()  # defect-1 cells; STAR where the defect is 0


PUBLISHED_TABLE2 = (
    PublishedRow(1, "C_2", 1, (1, 8)),
    PublishedRow(2, "C_3", 1, (1, 6, 27)),
    PublishedRow(3, "C_2^2", 2, (1, 12)),
    PublishedRow(4, "C_4", 1, (1, 4, 16, 48)),
    PublishedRow(5, "C_5", 1, (1, 4, 14, 40, 105)),
    PublishedRow(7, "C_6", 1, (1, 2, 7, 16, 39)),
    PublishedRow(10, "D_8", 4, (1, 2, 14, 28)),
    PublishedRow(16, "D_10", 2, (1, 0, 2, 0, 5, 10, 16, 20, 40), (STAR, 80, STAR, 160, ELLIPSIS)),
    PublishedRow(17, "A_4", 2, (1, 0, 6, 4, 27, 24), (STAR, 108, ELLIPSIS)),
    PublishedRow(18, "D_12", 4, (1, 1, 3, 13, 18, 39)),
    PublishedRow(
        34,
        "S_4",
        2,
        (1, 0, 0, 2, 3, 0, 7, 6, 9, 14, 21, 18),
        (STAR, 42, 63, STAR, STAR, 126, ELLIPSIS),
    ),
    PublishedRow(
        55,
        "A_5",
        2,
        (1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 3, 0, 5, 0, 0, 4, 6, 0, 10, 0, 9, 8, 15, 0, 20, 12, 18, 20, 30, 0),
        (STAR, 24, 45, 40, 60, 36, STAR, 60, 90, 80, STAR, 72, STAR, 120, 180, STAR, STAR,
         180, STAR, 240, STAR, STAR, STAR, 360, ELLIPSIS, 720),
    ),
)


@dataclass(frozen=True)
class CellCheck:
    row: str  # "top" or "below"
    index: int
    exponent: int
    published: object
    computed: object
    match: bool


@dataclass(frozen=True)
class Table2Comparison:
    label: int
    name: str
    p_published: int
    p_empirical: int
    p_formula: int
    cells: tuple[CellCheck, ...]

    @property
    def mismatches(self) -> list[CellCheck]:
        return [c for c in self.cells if not c.match]

    @property
    def p_match(self) -> bool:
        return self.p_published == self.p_empirical


def compare_table2(row: PublishedRow, action: GroupAction | None = None) -> Table2Comparison:
    """Align published cells with theta coefficients at spacing ``p_empirical``.

    Defect-0 cell ``j`` is the coefficient at ``j p``; defect-1 cell ``j`` is
    the coefficient at ``j p + |G|``, and a star there should sit exactly
    where the defect-0 coefficient is nonzero.  Cells after an ellipsis have
    no position and are skipped.
    """
    action = lookup(row.label) if action is None else action
    G = action.order
    p_emp, p_form = support_gcd_pair(action)
    longest = max(len(row.top), len(row.below)) * p_emp + G
    series = theta_series(action, longest)
    cells = []
    for j, value in enumerate(row.top):
        got = coefficient(series, j * p_emp)
        cells.append(CellCheck("top", j, j * p_emp, value, got, value == got))
    for j, value in enumerate(row.below):
        if value == ELLIPSIS:
            break
        exponent = j * p_emp + G
        if value == STAR:
            defect0 = coefficient(series, j * p_emp) != 0
            cells.append(CellCheck("below", j, j * p_emp, STAR, "defect 0" if defect0 else "defect 1", defect0))
        else:
            got = coefficient(series, exponent)
            cells.append(CellCheck("below", j, exponent, value, got, value == got))
    return Table2Comparison(row.label, row.name, row.p, p_emp, p_form, tuple(cells))


def _variant(action: GroupAction, config: str) -> GroupAction:
    return replace(action, config=parse_config(config), decorations=None)


def _single_copy_variant(action: GroupAction) -> GroupAction:
    """Kummer row with repeated ``(type, decoration)`` points collapsed to one."""
    seen = []
    for point in action.points():
        if point not in seen:
            seen.append(point)
    counts: dict = {}
    for t, _ in seen:
        counts[t] = counts.get(t, 0) + 1
    config = "+".join(f"{m}{t}" for t, m in counts.items())
    return replace(action, config=parse_config(config), decorations=tuple(g for _, g in seen))


def _fmt(terms: dict) -> str:
    return " + ".join(f"{c}q^{e}" for e, c in sorted(terms.items()))


def series_warnings() -> list[str]:
    out = []
    for name, published in PUBLISHED_SERIES.items():
        action = lookup(name)
        top = max(published)
        series = theta_series(action, top)
        engine = {e: coefficient(series, e) for e in range(top + 1) if coefficient(series, e)}
        bad = {e: (c, coefficient(series, e)) for e, c in published.items() if coefficient(series, e) != c}
        if not bad:
            continue
        diffs = ", ".join(f"q^{e}: published {c}, computed {got}" for e, (c, got) in sorted(bad.items()))
        msg = f"{name} expansion differs from the published one ({diffs})"
        # published exponents may be scaled relative to |G|
        scale = _exponent_scaling(published, engine)
        if scale:
            s, missing = scale
            msg += (
                f"; the published terms equal the computed ones at exponent/{s}"
                + (f", except that computed terms {_fmt(missing)} are absent" if missing else "")
            )
        out.append(msg)
    return out


def _exponent_scaling(published: dict, engine: dict):
    for s in (2, 4):
        if any(e % s for e in published):
            continue
        if all(engine.get(e // s) == c for e, c in published.items()):
            top = max(published) // s
            missing = {e: c for e, c in engine.items() if e <= top and e * s not in published}
            return s, missing
    return None


def kummer_warnings() -> list[str]:
    out = []
    for name, published in PUBLISHED_KUMMER.items():
        action = kummer_action(name)
        computed = tuple(identity_projection(theta_series(action, len(published) - 1)))
        if computed == published:
            continue
        msg = f"Kummer {name}: [1]-series computed {computed}, published {published}"
        variant = _single_copy_variant(action)
        if variant.config != action.config:
            got = tuple(identity_projection(theta_series(variant, len(published) - 1)))
            if got == published:
                msg += (
                    f"; the published values are reproduced by {variant.config} "
                    f"(repeated decorated points taken once), which contradicts the "
                    f"catalogued {action.config}"
                )
        out.append(msg)
    return out


def table2_warnings() -> list[str]:
    out = []
    for row in PUBLISHED_TABLE2:
        action = lookup(row.label)
        cmp = compare_table2(row, action)
        if not cmp.p_match:
            out.append(
                f"Table 2 {row.name}: published p = {row.p}, support gcd {cmp.p_empirical}, "
                f"|G|/lcm(g_i) = {cmp.p_formula}"
            )
        if not cmp.mismatches:
            continue
        cells = "; ".join(
            f"{c.row}[{c.index}] (q^{c.exponent}) published {c.published} computed {c.computed}"
            for c in cmp.mismatches
        )
        msg = f"Table 2 {row.name}: {len(cmp.mismatches)} cell(s) differ: {cells}"
        alt = action.flag("table1")
        if alt:
            alt_cmp = compare_table2(row, _variant(action, alt))
            if not alt_cmp.mismatches:
                msg += f"; all cells match the alternative configuration {alt}"
        out.append(msg)
    return out


def config_warnings() -> list[str]:
    out = []
    for action in lookup_all_with_flag("table1"):
        out.append(
            f"{action.name} (label {action.label}): alternative listed configuration "
            f"{action.flag('table1')} differs from the catalogued {action.config}"
        )
    return out


def lookup_all_with_flag(flag: str) -> list[GroupAction]:
    from hilbfix.catalog import iter_all

    return [a for a in iter_all() if a.flag(flag)]


def audit_warnings() -> list[str]:
    """Every discrepancy between engine output and published values."""
    return series_warnings() + kummer_warnings() + table2_warnings() + config_warnings()
