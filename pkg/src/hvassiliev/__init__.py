"""Braids and singular braids in handlebodies, Markov traces from enhanced
Yang-Baxter operators, and the finite-type invariants they induce."""

__version__ = "0.1.0"

from .braid import BraidWord, artin_signature, embed_handlebody, words_equal  # noqa: E402
from .eyb import EYBOperator, eyb_axioms_check, jones_operator, load_operator  # noqa: E402
from .invariants import link_invariant, trace_Ti  # noqa: E402
from .singular import SingularWord, singular_words_equal  # noqa: E402
from .syntax import parse_word, print_word  # noqa: E402
from .trace import trace_TS, trace_TSi  # noqa: E402
from .vassiliev import AlgebraElement, expand  # noqa: E402

__all__ = [
    "AlgebraElement",
    "BraidWord",
    "EYBOperator",
    "SingularWord",
    "artin_signature",
    "embed_handlebody",
    "expand",
    "eyb_axioms_check",
    "jones_operator",
    "link_invariant",
    "load_operator",
    "parse_word",
    "print_word",
    "singular_words_equal",
    "trace_TS",
    "trace_TSi",
    "trace_Ti",
    "words_equal",
]
