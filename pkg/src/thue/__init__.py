"""String-rewriting systems: decision procedures, null sequences and completion.

Words are tuples of symbol indices over an :class:`Alphabet`.  The
submodules cover combinatorics on words (:mod:`thue.core`), rewriting and
the decidable word problems (:mod:`thue.rewrite`), null sequences
(:mod:`thue.nullseq`), the completion fixpoint (:mod:`thue.completion`)
and the worked examples (:mod:`thue.corpus`).
"""

from .core import Alphabet
from .rewrite import (
    DecisionOutcome,
    Derivation,
    Equation,
    EquationSystem,
    Step,
    Verdict,
    decide_bounded,
    decide_fixed_length,
    decide_reducing,
    reduce_to_normal_form,
)
from .nullseq import NullSystem, decide_problem_two
from .completion import complete, minimize, verify_epsilon_theorems
from .corpus import example
from .fileformat import load_system, parse_system, format_system

__all__ = [
    "Alphabet",
    "DecisionOutcome",
    "Derivation",
    "Equation",
    "EquationSystem",
    "NullSystem",
    "Step",
    "Verdict",
    "complete",
    "decide_bounded",
    "decide_fixed_length",
    "decide_problem_two",
    "decide_reducing",
    "example",
    "format_system",
    "load_system",
    "minimize",
    "parse_system",
    "reduce_to_normal_form",
    "verify_epsilon_theorems",
]
