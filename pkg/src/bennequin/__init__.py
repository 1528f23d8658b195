"""Seifert statistics, HOMFLY and sl(n) polynomials, and Bennequin-type bounds for links."""

from .bounds import BoundsReport, bennequin_report, verify_mfw, verify_support
from .diagram import (
    BraidWord,
    Crossing,
    LinkDiagram,
    SeifertStats,
    braid_to_diagram,
    component_count,
    parse_braid,
    parse_diagram,
    seifert_stats,
)
from .errors import InputError, ResourceCapError
from .homfly import homfly, mfw_degrees, sln_state_sum, sln_vs_homfly_check
from .labeling import (
    Labeling,
    SplitPair,
    enumerate_labelings,
    local_interaction,
    rotation_number,
    sigma,
    split,
    total_interaction,
)
from .moy import moy, support_check, verify_composition
from .polynomial import LaurentPoly1, LaurentPoly2, adeg_range, qint, shift, support
from .resolution import (
    Resolution,
    ResolvedGraph,
    Slice,
    grading_shift,
    named_graph,
    oriented_resolution,
    resolve_all,
)

__version__ = "0.1.0"

__all__ = [
    "adeg_range",
    "bennequin_report",
    "BoundsReport",
    "braid_to_diagram",
    "BraidWord",
    "component_count",
    "Crossing",
    "enumerate_labelings",
    "grading_shift",
    "homfly",
    "InputError",
    "Labeling",
    "LaurentPoly1",
    "LaurentPoly2",
    "LinkDiagram",
    "local_interaction",
    "mfw_degrees",
    "moy",
    "named_graph",
    "oriented_resolution",
    "parse_braid",
    "parse_diagram",
    "qint",
    "Resolution",
    "resolve_all",
    "ResolvedGraph",
    "ResourceCapError",
    "rotation_number",
    "seifert_stats",
    "SeifertStats",
    "shift",
    "sigma",
    "Slice",
    "sln_state_sum",
    "sln_vs_homfly_check",
    "split",
    "SplitPair",
    "support",
    "support_check",
    "total_interaction",
    "verify_composition",
    "verify_mfw",
    "verify_support",
]
