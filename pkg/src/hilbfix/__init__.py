"""Fixed loci of finite symplectic actions on Hilbert schemes of points.

Counts the irreducible components of ``(S^[n])^G`` for K3 surfaces and of the
fixed loci on generalized Kummer varieties, using products of root-lattice
theta series, and checks every count along an independent enumeration path.
"""

from hilbfix.catalog import (
    GroupAction,
    SingularityConfig,
    kummer_action,
    list_actions,
    lookup,
    parse_config,
)
from hilbfix.dynkin import DynkinType, RootLatticeData, build_root_lattice
from hilbfix.fixloc import ComponentReport, component_counts, top_dimension
from hilbfix.qseries import TruncatedSeries
from hilbfix.theta import theta_series
from hilbfix.torsion import FiniteAbelianGroup, GroupRingElement

__all__ = [
    "ComponentReport",
    "DynkinType",
    "FiniteAbelianGroup",
    "GroupAction",
    "GroupRingElement",
    "RootLatticeData",
    "SingularityConfig",
    "TruncatedSeries",
    "build_root_lattice",
    "component_counts",
    "kummer_action",
    "list_actions",
    "lookup",
    "parse_config",
    "theta_series",
    "top_dimension",
]
