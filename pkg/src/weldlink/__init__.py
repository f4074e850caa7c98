"""weldlink: combinatorics of welded link diagrams and solid ribbon torus links.

The core objects are signed Gauss codes (welded diagrams modulo virtual
moves) and solid ribbon torus data (cyclic essential preimages with chambers
of contractibles, plus signs), related by the mutually inverse ``conn_map``
and ``tube_map``.  On top of those sit a complete oriented welded Reidemeister
move table, canonical forms, bounded equivalence search, a small census, and
the invariants used to certify move soundness.
"""

from .correspondence import conn_map, oc_canonicalize, tube_map
from .invariants import (
    alexander,
    fingerprint,
    fox_colorings,
    group_colorings,
    linking_matrix,
    wirtinger,
)
from .laurent import LaurentPolynomial
from .model import (
    GaussCode,
    OVER,
    Passage,
    SolidRibbonData,
    Torus,
    UNDER,
    validate_gauss_code,
    validate_solid_ribbon,
)
from .moves import (
    MoveInstance,
    MovePattern,
    apply_move,
    applicable_moves,
    generate_move_table,
    move_table,
)
from .planar import PlanarDiagram, emit_svg, realize_planar
from .search import (
    Budget,
    canonical_form,
    canonical_key,
    census,
    equivalent_within,
    replay_path,
)
from .textio import (
    emit_gauss_text,
    emit_ribbon_text,
    parse_gauss_text,
    parse_ribbon_text,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "GaussCode",
    "LaurentPolynomial",
    "MoveInstance",
    "MovePattern",
    "OVER",
    "Passage",
    "PlanarDiagram",
    "SolidRibbonData",
    "Torus",
    "UNDER",
    "alexander",
    "applicable_moves",
    "apply_move",
    "canonical_form",
    "canonical_key",
    "census",
    "conn_map",
    "emit_gauss_text",
    "emit_ribbon_text",
    "emit_svg",
    "equivalent_within",
    "fingerprint",
    "fox_colorings",
    "generate_move_table",
    "group_colorings",
    "linking_matrix",
    "move_table",
    "oc_canonicalize",
    "parse_gauss_text",
    "parse_ribbon_text",
    "realize_planar",
    "replay_path",
    "tube_map",
    "validate_gauss_code",
    "validate_solid_ribbon",
    "wirtinger",
]
