"""Finite Moufang loops, their power graphs, and classification checks."""

from .canon import are_isomorphic, canonical_form, loop_isomorphic
from .constructions import (
    CheinParams,
    CorpusEntry,
    build_corpus,
    chein_double,
    chein_recognize,
    cyclic,
    dihedral,
    direct_product,
    generalized_octonion,
    generalized_quaternion,
)
from .core import CayleyTable, Loop, Subloop, validate_table
from .octonion import (
    NumericLoopWitness,
    Octon,
    generate_octonion_subloop,
    oct_exp_e2,
    oct_mul,
)
from .powergraph import (
    Digraph,
    Graph,
    closed_twin_classes,
    directed_power_graph,
    max_clique,
    underlying,
    undirected_power_graph,
    universal_vertices,
)
from .verify import (
    LoopClass,
    VerificationReport,
    classify_unique_p_loop,
    genoct_equivalence_items,
    identify_from_graph,
    reconstruct_directed,
    verify_genoct_equivalences,
    verify_main_theorem,
    verify_order_lemma,
    verify_unique_subloop_classification,
)

__all__ = [
    "CayleyTable",
    "CheinParams",
    "CorpusEntry",
    "Digraph",
    "Graph",
    "Loop",
    "LoopClass",
    "NumericLoopWitness",
    "Octon",
    "Subloop",
    "VerificationReport",
    "are_isomorphic",
    "build_corpus",
    "canonical_form",
    "chein_double",
    "chein_recognize",
    "classify_unique_p_loop",
    "closed_twin_classes",
    "cyclic",
    "dihedral",
    "direct_product",
    "directed_power_graph",
    "generalized_octonion",
    "generalized_quaternion",
    "generate_octonion_subloop",
    "genoct_equivalence_items",
    "identify_from_graph",
    "loop_isomorphic",
    "max_clique",
    "oct_exp_e2",
    "oct_mul",
    "reconstruct_directed",
    "underlying",
    "undirected_power_graph",
    "universal_vertices",
    "validate_table",
    "verify_genoct_equivalences",
    "verify_main_theorem",
    "verify_order_lemma",
    "verify_unique_subloop_classification",
]

__version__ = "0.1.0"
