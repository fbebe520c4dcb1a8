"""Exact laboratory for irregular independence and irregular domination."""

from irregraph.bounds import (
    DEFAULT_RAMSEY,
    RADICAL_TOL,
    BoundInputs,
    RamseyTable,
    lb_gamma_ir_cor43,
    lb_gamma_ir_thm41,
    lb_gamma_ir_thm42,
    ub_alpha_ir_eq1,
    ub_alpha_ir_thm21,
    ub_alpha_ir_thm22,
    ub_gamma_ir_thm45,
    ub_span_thm32,
)
from irregraph.constructions import (
    FAMILIES,
    Claim,
    ConstructionError,
    ConstructionReport,
    ModStarSchedule,
    StaircaseProfile,
    build_alpha_sharp_bipartite,
    build_alpha_sharp_clique,
    build_clique_union,
    build_modstar,
    build_ng_alpha,
    build_ng_gamma,
    build_product_extremal,
    build_relation_extremal,
    build_staircase,
    build_sum_extremal,
    evaluate,
    metadata_comment,
)
from irregraph.graph import (
    DegreeClassification,
    Graph,
    Graph6Error,
    VertexSet,
    classify_degrees,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    disjoint_union_all,
    empty_graph,
    from_edge_mask,
    from_edges,
    is_isomorphic,
    join,
    matching_graph,
    parse_graph6,
    path_graph,
    star_graph,
    windmill,
    write_graph6,
)
from irregraph.harness import (
    BULK_LIMIT,
    DEFAULT_CONFIG,
    ENUMERATION_LIMIT,
    SHARPNESS_GRIDS,
    THEOREM_IDS,
    CheckConfig,
    SharpnessSummary,
    SweepSummary,
    TheoremReport,
    Verdict,
    enumerate_labeled_graphs,
    sharpness_suite,
    theorem_report,
    verify_range,
)
from irregraph.params import (
    Extremum,
    ParameterReport,
    alpha,
    alpha_ir,
    alpha_reg,
    full_report,
    gamma_ir,
    gamma_reg,
    is_dominating,
    is_independent,
    is_irregular_dominating,
    is_irregular_independent,
    is_regular_dominating,
    is_regular_independent,
    max_cut,
    naive_alpha,
    naive_alpha_ir,
    naive_alpha_reg,
    naive_gamma_ir,
    naive_gamma_reg,
    naive_max_cut,
)
from irregraph.recognizers import (
    Family,
    FamilyTag,
    classify_gamma_extremal,
    classify_outerplanar_alpha1,
    classify_planar_alpha1,
    is_outerplanar,
    is_planar,
    satisfies_lemma31,
)

__all__ = [
    "BULK_LIMIT",
    "BoundInputs",
    "CheckConfig",
    "Claim",
    "ConstructionError",
    "ConstructionReport",
    "DEFAULT_CONFIG",
    "DEFAULT_RAMSEY",
    "DegreeClassification",
    "ENUMERATION_LIMIT",
    "Extremum",
    "FAMILIES",
    "Family",
    "FamilyTag",
    "Graph",
    "Graph6Error",
    "ModStarSchedule",
    "ParameterReport",
    "RADICAL_TOL",
    "RamseyTable",
    "SHARPNESS_GRIDS",
    "SharpnessSummary",
    "StaircaseProfile",
    "SweepSummary",
    "THEOREM_IDS",
    "TheoremReport",
    "Verdict",
    "VertexSet",
    "alpha",
    "alpha_ir",
    "alpha_reg",
    "build_alpha_sharp_bipartite",
    "build_alpha_sharp_clique",
    "build_clique_union",
    "build_modstar",
    "build_ng_alpha",
    "build_ng_gamma",
    "build_product_extremal",
    "build_relation_extremal",
    "build_staircase",
    "build_sum_extremal",
    "classify_degrees",
    "classify_gamma_extremal",
    "classify_outerplanar_alpha1",
    "classify_planar_alpha1",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "disjoint_union",
    "disjoint_union_all",
    "empty_graph",
    "enumerate_labeled_graphs",
    "evaluate",
    "from_edge_mask",
    "from_edges",
    "full_report",
    "gamma_ir",
    "gamma_reg",
    "is_dominating",
    "is_independent",
    "is_irregular_dominating",
    "is_irregular_independent",
    "is_isomorphic",
    "is_outerplanar",
    "is_planar",
    "is_regular_dominating",
    "is_regular_independent",
    "join",
    "lb_gamma_ir_cor43",
    "lb_gamma_ir_thm41",
    "lb_gamma_ir_thm42",
    "matching_graph",
    "max_cut",
    "metadata_comment",
    "naive_alpha",
    "naive_alpha_ir",
    "naive_alpha_reg",
    "naive_gamma_ir",
    "naive_gamma_reg",
    "naive_max_cut",
    "parse_graph6",
    "path_graph",
    "satisfies_lemma31",
    "sharpness_suite",
    "star_graph",
    "theorem_report",
    "ub_alpha_ir_eq1",
    "ub_alpha_ir_thm21",
    "ub_alpha_ir_thm22",
    "ub_gamma_ir_thm45",
    "ub_span_thm32",
    "verify_range",
    "windmill",
    "write_graph6",
]

__version__ = "0.1.0"
