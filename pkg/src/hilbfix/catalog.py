"""Catalog of finite symplectic group actions and singularity configurations.

The rows live in ``data/catalog.txt`` (one ``|``-separated row per line) and
are loaded once.  K3 rows follow Xiao's numbering 1-81 and his group orders
(``D_8`` has order 8).  Abelian rows are the cyclic groups with a Kummer
theta treatment plus metadata-only rows for the remaining groups.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterator

from hilbfix.dynkin import FAMILIES, DynkinType, build_root_lattice
from hilbfix.torsion import FiniteAbelianGroup

__all__ = [
    "ABELIAN",
    "K3",
    "LOCAL",
    "GroupAction",
    "NotKummerEnabledError",
    "SingularityConfig",
    "UnknownActionError",
    "catalog_text",
    "euler_defect",
    "list_actions",
    "local_action",
    "lookup",
    "parse_config",
]

K3 = "k3"
ABELIAN = "abelian"
LOCAL = "local"
SURFACES = (K3, ABELIAN)

# Euler characteristic of the surface carrying the action
_SURFACE_EULER = {K3: 24, ABELIAN: 0}


class UnknownActionError(KeyError):
    pass


class NotKummerEnabledError(ValueError):
    pass


_FAMILY_RANK = {f: i for i, f in enumerate(FAMILIES)}


@dataclass(frozen=True)
class SingularityConfig:
    """A multiset of ADE singular points, e.g. ``2A_3+9A_1``.

    ``points`` is kept in canonical order: descending rank, then A < D < E.
    """

    points: tuple[tuple[DynkinType, int], ...]

    def __post_init__(self):
        merged: Counter = Counter()
        for t, mult in self.points:
            if mult < 1:
                raise ValueError(f"multiplicity of {t} must be positive")
            merged[t] += mult
        ordered = sorted(merged.items(), key=lambda tm: (-tm[0].rank, _FAMILY_RANK[tm[0].family]))
        object.__setattr__(self, "points", tuple(ordered))

    def expanded(self) -> list[DynkinType]:
        """One entry per singular point, in canonical order."""
        return [t for t, mult in self.points for _ in range(mult)]

    def multiplicity(self, t: DynkinType) -> int:
        return dict(self.points).get(t, 0)

    @property
    def total_rank(self) -> int:
        return sum(t.rank * mult for t, mult in self.points)

    @property
    def num_points(self) -> int:
        return sum(mult for _, mult in self.points)

    def __str__(self):
        return "+".join(f"{mult if mult > 1 else ''}{t}" for t, mult in self.points)


_TERM = re.compile(r"^(\d*)([ADE])_?(\d+)$")


def parse_config(s: str) -> SingularityConfig:
    """Parse ``CONFIG := TERM ('+' TERM)*`` with ``TERM := [count] TYPE '_' rank``."""
    compact = re.sub(r"\s+", "", s)
    if not compact:
        raise ValueError("empty singularity configuration")
    points = []
    for term in compact.split("+"):
        match = _TERM.match(term)
        if match is None:
            raise ValueError(f"malformed term {term!r} in {s!r}")
        count, family, rank = match.groups()
        if count == "0":
            raise ValueError(f"zero multiplicity in {s!r}")
        points.append((DynkinType(family, int(rank)), int(count) if count else 1))
    return SingularityConfig(tuple(points))


@dataclass(frozen=True)
class GroupAction:
    """One catalog row.

    ``decorations`` (Kummer rows only) has one torsion element per singular
    point, aligned with ``config.expanded()``.
    """

    label: int
    name: str
    order: int
    surface: str
    config: SingularityConfig
    invariant_lattice: str = "-"
    admissible: bool = False
    kummer: bool = False
    torsion: FiniteAbelianGroup | None = None
    decorations: tuple | None = None
    aliases: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    extra: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    def __post_init__(self):
        for t in self.config.expanded():
            g = build_root_lattice(t).group_order
            if self.order % g:
                raise ValueError(
                    f"{self.name}: inertia order {g} of {t} does not divide |G| = {self.order}"
                )
        if self.decorations is not None:
            if self.torsion is None:
                raise ValueError(f"{self.name}: decorations without a torsion group")
            if len(self.decorations) != self.config.num_points:
                raise ValueError(
                    f"{self.name}: {len(self.decorations)} decorations for "
                    f"{self.config.num_points} points"
                )
            for g in self.decorations:
                if not self.torsion.contains(g):
                    raise ValueError(f"{self.name}: decoration {g} not in {self.torsion}")

    @property
    def key(self) -> str:
        return f"{self.surface}:{self.label}"

    def points(self) -> list[tuple[DynkinType, tuple | None]]:
        """``(type, decoration)`` for every singular point."""
        decor = self.decorations or (None,) * self.config.num_points
        return list(zip(self.config.expanded(), decor))

    def inertia_orders(self) -> list[int]:
        return [build_root_lattice(t).group_order for t in self.config.expanded()]

    def flag(self, key: str, default=None):
        return dict(self.extra).get(key, default)


def euler_defect(action: GroupAction) -> Fraction:
    """Orbifold Euler characteristic check, zero when the row is consistent.

    For ``G`` acting on ``S`` with quotient resolved by ``Y`` (a K3 surface),
    ``e(S) = |G| (24 - sum_i (r_i + 1) + sum_i 1/g_i)``.
    """
    e_y = 24 - sum(t.rank + 1 for t in action.config.expanded())
    e_y += sum(Fraction(1, g) for g in action.inertia_orders())
    return action.order * e_y - _SURFACE_EULER[action.surface]


def local_action(t: DynkinType) -> GroupAction:
    """The local model ``C^2 / G_Delta`` with its single singular point."""
    g = build_root_lattice(t).group_order
    return GroupAction(
        label=0,
        name=f"C^2/G({t})",
        order=g,
        surface=LOCAL,
        config=SingularityConfig(((t, 1),)),
    )


def _parse_flags(text: str) -> list[tuple[str, str]]:
    flags = []
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        flags.append((key.strip(), value.strip() if "=" in item else "true"))
    return flags


def _parse_decorations(spec: str, config: SingularityConfig, torsion: FiniteAbelianGroup):
    if spec == "trivial":
        return (torsion.identity,) * config.num_points
    by_type: dict[DynkinType, list] = {}
    for block in spec.split("/"):
        tname, _, elems = block.partition(":")
        t = parse_config(tname).points[0][0]
        by_type[t] = [
            torsion.element(int(r) for r in e.split(".")) for e in elems.split(",") if e
        ]
    decorations = []
    for t, mult in config.points:
        elems = by_type.get(t, [])
        if len(elems) != mult:
            raise ValueError(f"{len(elems)} decorations given for {mult} points of type {t}")
        decorations.extend(elems)
    return tuple(decorations)


def _parse_row(line: str) -> GroupAction:
    fields = line.split("|")
    if len(fields) != 6:
        raise ValueError(f"catalog row needs 6 fields: {line!r}")
    label, name, order, config_text, lattice, flag_text = (f.strip() for f in fields)
    flags = _parse_flags(flag_text)
    fd = dict(flags)
    config = parse_config(config_text)
    torsion = decorations = None
    if "torsion" in fd:
        factors = tuple(int(x) for x in fd["torsion"].split(".") if x)
        torsion = FiniteAbelianGroup(factors)
        if "decor" in fd:
            decorations = _parse_decorations(fd["decor"], config, torsion)
    return GroupAction(
        label=int(label),
        name=name,
        order=int(order),
        surface=fd.get("surface", K3),
        config=config,
        invariant_lattice=lattice,
        admissible="admissible" in fd,
        kummer="kummer" in fd,
        torsion=torsion,
        decorations=decorations,
        aliases=tuple(v for k, v in flags if k == "alias"),
        notes=tuple(v for k, v in flags if k == "note"),
        extra=tuple(flags),
    )


def catalog_text() -> str:
    """The embedded catalog file, verbatim."""
    return resources.files("hilbfix").joinpath("data/catalog.txt").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _load() -> tuple[GroupAction, ...]:
    rows = []
    for line in catalog_text().splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append(_parse_row(line))
    return tuple(rows)


def list_actions(surface: str = K3, admissible: bool | None = None) -> list[GroupAction]:
    """Catalog rows for one surface in label order, optionally filtered."""
    surface = _surface(surface)
    rows = [a for a in _load() if a.surface == surface]
    if admissible is not None:
        rows = [a for a in rows if a.admissible == admissible]
    return sorted(rows, key=lambda a: a.label)


def _surface(surface: str) -> str:
    s = surface.lower()
    if s not in SURFACES:
        raise ValueError(f"surface must be one of {SURFACES}, got {surface!r}")
    return s


def _normalize(name: str) -> str:
    return re.sub(r"[\s_{}]", "", name).lower()


def lookup(key, surface: str = K3) -> GroupAction:
    """Find a row by label number or group name (``"C_2"``, ``"C_2x2"``, ``"55"``)."""
    surface = _surface(surface)
    rows = list_actions(surface)
    if isinstance(key, int) or (isinstance(key, str) and key.strip().isdigit()):
        label = int(key)
        for a in rows:
            if a.label == label:
                return a
        raise UnknownActionError(f"no {surface} row with label {label}")
    wanted = _normalize(key)
    hits = [a for a in rows if wanted in {_normalize(a.name), *map(_normalize, a.aliases)}]
    if not hits:
        raise UnknownActionError(f"no {surface} group named {key!r}")
    if len(hits) > 1:
        labels = ", ".join(str(a.label) for a in hits)
        raise UnknownActionError(f"group name {key!r} is ambiguous (labels {labels}); use a label")
    return hits[0]


def kummer_action(key) -> GroupAction:
    """Abelian-surface row that admits the decorated theta treatment."""
    action = lookup(key, ABELIAN)
    if not action.kummer:
        raise NotKummerEnabledError(f"{action.name} has no Kummer theta treatment")
    return action


def iter_all() -> Iterator[GroupAction]:
    return iter(_load())
