"""Non-cyclic graphs of finite groups, with exact invariants and checks.

The package builds finite groups from declarative specs or files, forms the
graph on the elements outside the cyclicizer (edges between pairs that
generate a non-cyclic subgroup), computes exact graph invariants with
verified certificates, and runs a registry of mechanical checks for the
structural facts these graphs satisfy.
"""

from .bundle import CliqueInfo, GroupGraphBundle, build_bundle
from .catalog import Catalog, CatalogEntry, default_catalog
from .construct import (
    ELEMENT_CAP,
    GroupBuildError,
    GroupSpec,
    build_group,
    format_spec,
    parse_spec,
    predicted_order,
    save_cayley_file,
)
from .cyclicizer import CyclicGroupError, CyclicizerData, cyclicizer_data
from .graphs import (
    CliqueBudgetError,
    Distance,
    SimpleGraph,
    clique_number,
    connected_components,
    decode_graph6,
    diameter,
    distance_matrix,
    domination_number,
    encode_graph6,
    hamiltonian_cycle,
    max_clique,
    to_dot,
)
from .groups import (
    CapExceededError,
    ElementSet,
    FiniteGroup,
    InternalCheckError,
    identify_small_quotient,
)
from .kernels import active_backend, set_backend
from .planarity import PlanarityResult, is_planar
from .properties import (
    PROPERTY_IDS,
    GroupAnalysis,
    Verdict,
    run_all_properties,
    run_property,
)
from .report import (
    SCHEMA,
    AnalysisReport,
    SweepReport,
    analyze_bundle,
    sweep_catalog,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "CapExceededError",
    "Catalog",
    "CatalogEntry",
    "CliqueBudgetError",
    "CliqueInfo",
    "CyclicGroupError",
    "CyclicizerData",
    "Distance",
    "ELEMENT_CAP",
    "ElementSet",
    "FiniteGroup",
    "GroupAnalysis",
    "GroupBuildError",
    "GroupGraphBundle",
    "GroupSpec",
    "InternalCheckError",
    "PROPERTY_IDS",
    "PlanarityResult",
    "SCHEMA",
    "SimpleGraph",
    "SweepReport",
    "Verdict",
    "active_backend",
    "analyze_bundle",
    "build_bundle",
    "build_group",
    "clique_number",
    "connected_components",
    "cyclicizer_data",
    "decode_graph6",
    "default_catalog",
    "diameter",
    "distance_matrix",
    "domination_number",
    "encode_graph6",
    "format_spec",
    "hamiltonian_cycle",
    "identify_small_quotient",
    "is_planar",
    "max_clique",
    "parse_spec",
    "predicted_order",
    "run_all_properties",
    "run_property",
    "save_cayley_file",
    "set_backend",
    "sweep_catalog",
    "to_dot",
]
