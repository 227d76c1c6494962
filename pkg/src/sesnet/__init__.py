"""Social-ecological networks modeled as abstract simplicial complexes."""

from .complex import (
    DEFAULT_SIMPLEX_CAP,
    FacetWarning,
    Simplex,
    SimplicialComplex,
    ValidationReport,
    Vertex,
    VertexUniverse,
    Violation,
    boundary,
    canonicalize,
    f_vector,
    faces,
    facets_paper,
    from_text,
    insert_closed,
    maximal_simplices,
    p_skeleton,
    register_vertex,
    to_text,
    validate,
)
from .config import RunConfig, load_config
from .errors import ExitCode, SenError
from .evolution import GrowthRun, GrowthStep, generate_step, run_growth, step_order_class
from .projection import (
    Collision,
    LossReport,
    UnderlyingGraph,
    graphs_identical,
    loss_report,
    skeleton_collision,
    to_tgf,
    to_underlying_graph,
)
from .ses import (
    Environment,
    OrderClass,
    SenNetwork,
    SesStructure,
    UnitKind,
    build_ses,
    check_subset_dependency,
    classify_order,
    embed_in_environment,
    interaction_order,
    parse_ses_document,
    partition_interactions,
    ses_to_sen,
)

__version__ = "0.1.0"
