"""heptalib: structural analysis and exact 3-coloring for graphs of girth
at least 7 that have no odd holes of length 9 or more."""

from .budget import Budget
from .catalog import (
    CatalogEntry,
    are_isomorphic,
    catalog_entry,
    catalog_graph,
    catalog_names,
    cycle_graph,
    find_induced_copy,
    lcf_graph,
)
from .cutsets import (
    CutsetCertificate,
    EarCertificate,
    find_clique_cutset,
    find_ear,
    find_p3_cutset,
    find_parity_star_cutset,
    verify_cutset,
)
from .decomposer import (
    Coloring,
    StructureReport,
    UncolorableReport,
    brute_force_chromatic,
    classify_structure,
    three_color,
    verify_coloring,
)
from .errors import (
    BudgetExceededError,
    CapExceededError,
    HeptalibError,
    InputError,
    SearchExhaustedError,
)
from .generators import GenSpec, attach_path, enumerate_members, random_member
from .graph import (
    Graph,
    Hole,
    VertexSeq,
    degree_profile,
    from_edge_list,
    girth,
    induced_subgraph,
    is_bipartite,
    parse_graph_text,
    to_edge_list_text,
    validate_sequence,
)
from .jumps import (
    BigOddHole,
    InducedP,
    InducedPprime,
    Jump,
    JumpInteriorIndex,
    PairOutcome,
    SevenHoleContext,
    ShortCycleFound,
    ShortJump,
    analyze_jump_pair,
    classify_jump,
    list_jumps,
    localize_jump,
    seven_holes,
    short_jump_interiors,
)
from .recognizer import (
    MembershipVerdict,
    enumerate_holes,
    find_big_odd_hole,
    membership,
)

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
