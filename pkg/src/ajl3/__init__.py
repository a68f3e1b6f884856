"""Three-strand Jones-polynomial quantum algorithm: path model, Kauffman-bracket
oracle, pure and mixed Hadamard-test simulation, and bipartite entanglement
of the pre-measurement state."""

__version__ = "0.1.0"

from .braid import BraidWord, Generator, parse_braid, word
from .jones import jones_at_root, jones_both_methods
from .pathmodel import make_params, markov_trace
from .entanglement import classify_bipartitions

__all__ = [
    "BraidWord",
    "Generator",
    "classify_bipartitions",
    "jones_at_root",
    "jones_both_methods",
    "make_params",
    "markov_trace",
    "parse_braid",
    "word",
]
