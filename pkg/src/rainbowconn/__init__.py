"""Exact rainbow (vertex) connection numbers and minimal rc = 2 / rvc = d graphs on small orders."""
from .bounds import BoundsRow, lemma1_upper, lemma2_lower, ratio_table, sandwich_check
from .canonical import CanonicalForm, canonical_form
from .coloring import (
    EdgeColoring,
    RainbowWitness,
    VertexColoring,
    verify_rc_coloring,
    verify_rvc_coloring,
)
from .constructions import (
    Lemma1Family,
    MinimalRvcTree,
    bipartite_code_coloring,
    lemma1_family,
    minimal_rvc_tree,
    tree_rvc_coloring,
)
from .enumerate import enumerate_connected_graphs, enumerate_graphs, enumerate_trees
from .errors import CapacityError, InfeasibleError, InvalidInputError, ParseError
from .graph import (
    DegreeProfile,
    Graph,
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree_profile,
    diameter,
    path_graph,
    star_graph,
)
from .graph6 import edgelist_decode, edgelist_encode, graph6_decode, graph6_encode
from .search import (
    Claim1Report,
    SearchReport,
    characterize_minimal_rvc,
    claim1_verify,
    compute_e2,
    compute_e_prime,
    delta_prune_bound,
)
from .solver import rc2_decide, rc_exact, rc_leq, rvc_exact, rvc_leq

__version__ = "0.1.0"
