"""Links in lens spaces L(p,q) as toroidal grid diagrams.

Diagrams live on a flat torus cut into p boxes of n x n cells; moves,
diffeotopy-group actions, homology classes, covering-space lifts, bracket
polynomials, and equivalence search all operate on the same immutable
GridDiagram value type.  See the README for the text formats and the
`lensgrid` console command.
"""

from .core import (
    Cell,
    Component,
    GridDiagram,
    GridFormatError,
    LensSpace,
    Marking,
    MarkType,
    ValidationReport,
    annulus_partner,
    col_cell_to_rect,
    grid_from_rows,
    parse,
    rect_to_col_cell,
    render_ascii,
    require_valid,
    row_partner,
    serialize,
    trace_components,
    translate,
    validate,
)
from .diffeo import (
    CaseKind,
    DiffeoElement,
    DiffeotopyCase,
    apply,
    diffeo_orbit,
    diffeotopy_case,
    expected_homology_action,
    orbit_labels,
    sigma_minus,
    sigma_minus_applicable,
    sigma_plus,
    sigma_plus_applicable,
    tau,
)
from .equivalence import (
    Catalog,
    CatalogClass,
    Certificates,
    DiffeoReport,
    EquivalenceReport,
    Verdict,
    canonical_diagram,
    canonical_form,
    canonical_shift,
    certificate_witness,
    compute_certificates,
    diffeo_classify,
    isotopy_search,
    render_catalog,
    tabulate,
)
from .homology import (
    homology_class,
    homology_multiset,
    is_primitive_homologous,
    lift_component_count_formula,
    lift_grid,
)
from .invariants import (
    DEFAULT_CAP,
    CapExceeded,
    PlanarCrossing,
    PlanarDiagram,
    kauffman_bracket,
    lift_planar_diagram,
    linking_matrix,
    mirror,
    normalized_lift_poly,
    normalized_poly,
    planar_diagram,
    writhe,
)
from .kernels import BACKEND, available_backends
from .laurent import LOOP_FACTOR, LaurentPoly
from .moves import (
    CommuteCols,
    CommuteRows,
    Corner,
    Destabilize,
    InapplicableMove,
    MoveKind,
    Stabilize,
    TranslateH,
    TranslateV,
    apply_move,
    apply_moves,
    commute_cols,
    commute_rows,
    destabilize,
    invert_move,
    neighbors,
    search_edges,
    stabilize,
)
from .corpus import count_diagrams, enumerate_diagrams, random_diagram, random_move_sequence

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapExceeded",
    "CaseKind",
    "Catalog",
    "CatalogClass",
    "Cell",
    "Certificates",
    "CommuteCols",
    "CommuteRows",
    "Component",
    "Corner",
    "DEFAULT_CAP",
    "Destabilize",
    "DiffeoElement",
    "DiffeoReport",
    "DiffeotopyCase",
    "EquivalenceReport",
    "GridDiagram",
    "GridFormatError",
    "InapplicableMove",
    "LOOP_FACTOR",
    "LaurentPoly",
    "LensSpace",
    "MarkType",
    "Marking",
    "MoveKind",
    "PlanarCrossing",
    "PlanarDiagram",
    "Stabilize",
    "TranslateH",
    "TranslateV",
    "ValidationReport",
    "Verdict",
    "annulus_partner",
    "apply",
    "apply_move",
    "apply_moves",
    "available_backends",
    "canonical_diagram",
    "canonical_form",
    "canonical_shift",
    "certificate_witness",
    "col_cell_to_rect",
    "commute_cols",
    "commute_rows",
    "compute_certificates",
    "count_diagrams",
    "destabilize",
    "diffeo_classify",
    "diffeo_orbit",
    "diffeotopy_case",
    "enumerate_diagrams",
    "expected_homology_action",
    "grid_from_rows",
    "homology_class",
    "homology_multiset",
    "invert_move",
    "is_primitive_homologous",
    "isotopy_search",
    "kauffman_bracket",
    "lift_component_count_formula",
    "lift_grid",
    "lift_planar_diagram",
    "linking_matrix",
    "mirror",
    "neighbors",
    "normalized_lift_poly",
    "normalized_poly",
    "orbit_labels",
    "parse",
    "planar_diagram",
    "random_diagram",
    "random_move_sequence",
    "rect_to_col_cell",
    "render_ascii",
    "require_valid",
    "row_partner",
    "search_edges",
    "serialize",
    "sigma_minus",
    "sigma_minus_applicable",
    "sigma_plus",
    "sigma_plus_applicable",
    "stabilize",
    "tabulate",
    "tau",
    "trace_components",
    "translate",
    "validate",
]
