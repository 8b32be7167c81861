"""Null sequences and homogeneous transformations.

A null sequence ``R`` may be deleted from or inserted into any word.  A
length-preserving system whose equations hold modulo ``R`` lets us move
words around without changing their length; two words related that way
are *parallel*.  When the system is complete (``zR ∥ Rz`` for every
symbol) and perfect (``RA ∥ RB ⇒ A ∥ B``) the word problem modulo ``R``
reduces to comparing R-free parallel classes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import NamedTuple, Optional

from .core import Alphabet, Word, border_lengths, find_occurrences
from .rewrite import (
    NULL_RULE,
    ClassIndex,
    DecisionOutcome,
    Derivation,
    Direction,
    Equation,
    EquationSystem,
    FragmentError,
    Step,
    Verdict,
    check_cancellation_condition,
    decide_fixed_length,
)

EMPTY = ()


@dataclass(frozen=True)
class NullSystem:
    alphabet: Alphabet
    r: Word
    eqs: EquationSystem

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        if not self.r:
            raise ValueError("the null sequence must be non-empty")
        if not self.alphabet.contains(self.r):
            raise ValueError("null sequence uses symbols outside the alphabet")
        if self.eqs.alphabet != self.alphabet:
            raise ValueError("equation system is over a different alphabet")
        for i, eq in enumerate(self.eqs.equations):
            if Counter(eq.lhs) != Counter(eq.rhs):
                raise ValueError(f"equation {i} does not permute its symbols")

    @classmethod
    def build(cls, alphabet, r, pairs):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        eqs = EquationSystem.from_pairs(alphabet, pairs)
        return cls(alphabet, alphabet.parse(r), eqs)

    def word(self, text):
        return self.alphabet.parse(text)

    def fmt(self, word):
        return self.alphabet.format(word)

    def classes(self) -> ClassIndex:
        return _class_index(self.eqs)


@lru_cache(maxsize=64)
def _class_index(eqs):
    return ClassIndex(eqs)


class NullMove(NamedTuple):
    word: Word
    position: int
    action: str  # "delete" or "insert"

    @property
    def boundary(self):
        """Deleting the whole word leaves the empty word."""
        return not self.word


def similar_null(w: Word, r: Word, max_length=None) -> list:
    """Words one deletion or insertion of ``r`` away from ``w``.

    Deletions come first (ascending position), then insertions at
    positions ``0 … |w|`` when the result fits ``max_length``.
    """
    w, r = tuple(w), tuple(r)
    out = [NullMove(w[:i] + w[i + len(r):], i, "delete") for i in find_occurrences(w, r)] \
        if len(w) >= len(r) else []
    if max_length is None or len(w) + len(r) <= max_length:
        out.extend(NullMove(w[:i] + r + w[i:], i, "insert") for i in range(len(w) + 1))
    return out


def parallel(p: Word, q: Word, ns: NullSystem) -> DecisionOutcome:
    """Whether ``p`` and ``q`` are related by homogeneous transformations."""
    p, q = tuple(p), tuple(q)
    if len(p) != len(q) or Counter(p) != Counter(q):
        return DecisionOutcome(Verdict.NOT_EQUIVALENT, None, 0, max(len(p), len(q)),
                               "symbol counts differ")
    return decide_fixed_length(p, q, ns.eqs)


@dataclass(frozen=True)
class CompletenessReport:
    results: dict  # symbol index -> DecisionOutcome for zR ∥ Rz

    @property
    def failing(self):
        return [z for z, out in self.results.items() if not out.equivalent]

    @property
    def ok(self):
        return not self.failing

    def __bool__(self):
        return self.ok


def check_complete(ns: NullSystem) -> CompletenessReport:
    results = {z: parallel((z,) + ns.r, ns.r + (z,), ns) for z in ns.alphabet}
    return CompletenessReport(results)


@dataclass(frozen=True)
class PerfectionReport:
    max_len: int
    counterexample: Optional[tuple] = None  # (A, B)
    pairs_checked: int = 0

    @property
    def ok(self):
        return self.counterexample is None

    def __bool__(self):
        return self.ok


def check_perfect_bounded(ns: NullSystem, max_len: int) -> PerfectionReport:
    """Verify ``RA ∥ RB ⇒ A ∥ B`` for all ``|RA| = |RB| ≤ max_len``.

    A pass only means no counterexample exists up to the bound.
    """
    r = ns.r
    if max_len < len(r) + 1:
        raise ValueError("max_len must leave room for at least one symbol after R")
    idx = ns.classes()
    checked = 0
    for length in range(1, max_len - len(r) + 1):
        done = set()
        for a in product(range(len(ns.alphabet)), repeat=length):
            if a in done:
                continue
            ra = r + a
            # every B with RB ∥ RA, read off the class of RA
            partners = sorted(w[len(r):] for w in idx.members(ra) if w[: len(r)] == r)
            done.update(partners)
            for b in partners:
                checked += 1
                if not idx.same(a, b):
                    return PerfectionReport(max_len, (a, b), checked)
    return PerfectionReport(max_len, None, checked)


def check_perfect_syntactic(ns: NullSystem):
    """Certificate of perfection from the distinct-initial-symbol condition.

    Under that condition ``CM = DN`` and ``C = D`` give ``M = N``; taking
    ``C ≡ D ≡ R`` yields perfection outright.  Returns the
    :class:`~thue.rewrite.CancellationCheck` when it holds, else ``None``.
    """
    check = check_cancellation_condition(ns.eqs, orient=True)
    return check if check.ok else None


@dataclass(frozen=True)
class IrreducibleSystem:
    """Layers ``N_0 … N_r`` of parallel words, each obtained from the previous
    by deleting one occurrence of ``R``; the last layer is R-free."""

    r: Word
    layers: tuple  # of frozensets of words; EMPTY marks the empty-word boundary

    @property
    def terminal(self) -> frozenset:
        return self.layers[-1]

    @property
    def reaches_empty(self):
        return EMPTY in self.terminal

    def validate(self, ns: NullSystem):
        idx = ns.classes()
        for p, layer in enumerate(self.layers):
            lengths = {len(w) for w in layer}
            if len(lengths) != 1:
                raise AssertionError(f"layer {p} mixes lengths {sorted(lengths)}")
            words = sorted(layer)
            if words != [EMPTY]:
                rep = words[0]
                for w in words:
                    if not idx.same(rep, w):
                        raise AssertionError(f"layer {p} is not a single parallel class")
                if set(idx.members(rep)) != set(layer):
                    raise AssertionError(f"layer {p} is not closed under parallelism")
            if p:
                prev = self.layers[p - 1]
                for w in layer:
                    if not any(w in _deletions(v, self.r) for v in prev):
                        raise AssertionError(f"{w} in layer {p} is no deletion of layer {p - 1}")
        for w in self.terminal:
            if w and find_occurrences(w, self.r):
                raise AssertionError("terminal layer contains the null sequence")
        return True


def _deletions(w, r):
    if len(w) < len(r):
        return set()
    return {w[:i] + w[i + len(r):] for i in find_occurrences(w, r)}


def _require_decidable(ns, max_len):
    report = check_complete(ns)
    if not report:
        names = [ns.alphabet.name(z) for z in report.failing]
        raise FragmentError(f"system is not complete: zR ∥ Rz fails for {names}", report)
    if check_perfect_syntactic(ns) is None:
        perf = check_perfect_bounded(ns, max(max_len, len(ns.r) + 1))
        if not perf:
            raise FragmentError(f"system is not perfect: counterexample {perf.counterexample}",
                                perf)


def irreducible_system(s: Word, ns: NullSystem, max_len=None, check=True) -> IrreducibleSystem:
    """Build the layers ``N_0 … N_r`` for ``s``.

    ``N_0`` is the parallel class of ``s``; ``N_{p+1}`` is the parallel
    closure of all single R-deletions from ``N_p``.  Deleting ``R`` from
    ``R`` itself gives the empty word, which is kept as the marker
    :data:`EMPTY` and not expanded.  ``max_len`` is the bound used when
    perfection has to be checked by enumeration (default ``|s|``).
    """
    s = tuple(s)
    if not s:
        raise ValueError("word must be non-empty")
    if check:
        _require_decidable(ns, max_len if max_len is not None else max(len(s), len(ns.r) + 1))
    idx = ns.classes()
    r = ns.r
    layer = frozenset(idx.members(s))
    layers = [layer]
    while any(w and find_occurrences(w, r) for w in layer):
        nxt = set()
        for w in layer:
            for v in _deletions(w, r):
                if v:
                    nxt |= idx.members(v)
                else:
                    nxt.add(EMPTY)
        layer = frozenset(nxt)
        layers.append(layer)
    return IrreducibleSystem(r, tuple(layers))


def _class_path(idx, eqs, a, b):
    if a == b:
        return Derivation(a)
    out = decide_fixed_length(a, b, eqs)
    assert out.equivalent
    return out.witness


def _reduction(s, ns, idx):
    """Derivation from ``s`` down to an R-free word (or to ``R`` itself when
    the next deletion would leave the empty word)."""
    r = ns.r
    d = Derivation(s)
    cur = s
    while True:
        target = None
        for w in sorted(idx.members(cur)):
            if find_occurrences(w, r):
                target = w
                break
        if target is None or target == r:
            if target == r:
                d = d.then(_class_path(idx, ns.eqs, cur, r))
            return d
        d = d.then(_class_path(idx, ns.eqs, cur, target))
        i = find_occurrences(target, r)[0]
        nxt = target[:i] + target[i + len(r):]
        d = d.then(Derivation(target, (Step(NULL_RULE, Direction.FORWARD, i),), nxt))
        cur = nxt


def decide_problem_two(p: Word, q: Word, ns: NullSystem, max_len=None) -> DecisionOutcome:
    """Equivalence modulo ``R`` through irreducible sequence systems.

    The witness mixes homogeneous steps with null steps; replay it with
    ``witness.replay(ns.eqs, null=ns.r)``.
    """
    p, q = tuple(p), tuple(q)
    bound = max_len if max_len is not None else max(len(p), len(q), len(ns.r) + 1)
    _require_decidable(ns, bound)
    ip = irreducible_system(p, ns, check=False)
    iq = irreducible_system(q, ns, check=False)
    maxlen = max(len(p), len(q))
    if ip.terminal != iq.terminal:
        return DecisionOutcome(Verdict.NOT_EQUIVALENT, None, 0, maxlen,
                               "distinct irreducible sequence systems")
    idx = ns.classes()
    dp = _reduction(p, ns, idx)
    dq = _reduction(q, ns, idx)
    witness = dp.then(_class_path(idx, ns.eqs, dp.end, dq.end)).then(dq.reversed())
    witness.replay(ns.eqs, null=ns.r)
    states = sum(len(layer) for layer in ip.layers + iq.layers)
    return DecisionOutcome(Verdict.EQUIVALENT, witness, states, maxlen)


def overlap_equation(r: Word) -> list:
    """``C = D`` for every border ``U`` of ``r`` with ``r ≡ CU ≡ UD``, longest ``U`` first."""
    r = tuple(r)
    if len(r) < 2:
        raise ValueError("null sequence must have at least two symbols")
    return [Equation(r[: len(r) - k], r[k:]) for k in border_lengths(r)]
