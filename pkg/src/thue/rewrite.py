"""Thue and semi-Thue systems: one-step similarity, derivations and the
decision procedures for the length-preserving and the length-reducing
fragments, plus a budgeted search for everything else.

Searches run on ``bytes`` copies of the words (every alphabet has at most
255 symbols), which keeps substring matching and hashing in C.
"""

from __future__ import annotations

import enum
import random
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .core import Alphabet, Word, find_occurrences

NULL_RULE = -1
DEFAULT_MAX_STATES = 10**6


class Direction(str, enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"

    def flipped(self):
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


class Verdict(str, enum.Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not-equivalent"
    UNKNOWN = "unknown"


class DerivationError(ValueError):
    pass


class FragmentError(ValueError):
    """A system lies outside the fragment a decision procedure is exact for."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Equation:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if not self.lhs or not self.rhs:
            raise ValueError("both sides of an equation must be non-empty")

    @property
    def length_preserving(self):
        return len(self.lhs) == len(self.rhs)

    def sides(self):
        return self.lhs, self.rhs

    def flipped(self):
        return Equation(self.rhs, self.lhs)

    def canonical(self):
        """Unordered-pair form with the smaller side (by length, then lexicographically) first."""
        a, b = self.lhs, self.rhs
        return self if (len(a), a) <= (len(b), b) else Equation(b, a)

    @property
    def size(self):
        return len(self.lhs) + len(self.rhs)


@dataclass(frozen=True)
class EquationSystem:
    alphabet: Alphabet
    equations: tuple = ()
    mode: str = "thue"

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        if self.mode not in ("thue", "semi"):
            raise ValueError(f"mode must be 'thue' or 'semi', not {self.mode!r}")
        for eq in self.equations:
            for side in eq.sides():
                if not self.alphabet.contains(side):
                    raise ValueError(f"equation side {side} uses symbols outside the alphabet")

    @classmethod
    def from_pairs(cls, alphabet, pairs, mode="thue"):
        """Build from ``(lhs, rhs)`` pairs given as word literals or tuples."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        eqs = [Equation(alphabet.parse(a), alphabet.parse(b)) for a, b in pairs]
        return cls(alphabet, tuple(eqs), mode)

    def __len__(self):
        return len(self.equations)

    def __iter__(self):
        return iter(self.equations)

    def __getitem__(self, i):
        return self.equations[i]

    @property
    def length_preserving(self):
        return all(eq.length_preserving for eq in self.equations)

    @property
    def length_reducing(self):
        return all(len(eq.lhs) > len(eq.rhs) for eq in self.equations)

    @property
    def max_side(self):
        return max((len(s) for eq in self.equations for s in eq.sides()), default=0)

    def lhs_words(self):
        return [eq.lhs for eq in self.equations]

    def with_equations(self, equations, mode=None):
        return EquationSystem(self.alphabet, tuple(equations), mode or self.mode)

    def word(self, text):
        return self.alphabet.parse(text)

    def fmt(self, word):
        return self.alphabet.format(word)


@dataclass(frozen=True)
class Step:
    """Rewrite ``A_rule → B_rule`` (forward) or ``B_rule → A_rule`` at ``position``.

    ``rule == NULL_RULE`` stands for deleting (forward) or inserting
    (backward) the null sequence.
    """

    rule: int
    direction: Direction
    position: int

    def inverse(self):
        return Step(self.rule, self.direction.flipped(), self.position)

    def shifted(self, offset):
        return Step(self.rule, self.direction, self.position + offset)

    def describe(self):
        if self.rule == NULL_RULE:
            verb = "delete" if self.direction is Direction.FORWARD else "insert"
            return f"{verb} null at pos {self.position}"
        return f"rule {self.rule} {self.direction.value} at pos {self.position}"


def _step_sides(system, step, null):
    if step.rule == NULL_RULE:
        if null is None:
            raise DerivationError("null step without a null sequence")
        src, dst = tuple(null), ()
    else:
        if not 0 <= step.rule < len(system.equations):
            raise DerivationError(f"rule index {step.rule} out of range")
        eq = system.equations[step.rule]
        src, dst = eq.lhs, eq.rhs
    if step.direction is Direction.BACKWARD:
        src, dst = dst, src
    return src, dst


def apply_step(word: Word, system: EquationSystem, step: Step, null=None) -> Word:
    src, dst = _step_sides(system, step, null)
    i = step.position
    if i < 0 or i > len(word) or tuple(word[i: i + len(src)]) != src:
        raise DerivationError(f"{step.describe()} does not match {word}")
    return tuple(word[:i]) + dst + tuple(word[i + len(src):])


@dataclass(frozen=True)
class Derivation:
    start: Word
    steps: tuple = ()
    end: Word = None

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.end is None:
            if self.steps:
                raise ValueError("end word required for a non-empty derivation")
            object.__setattr__(self, "end", self.start)

    def __len__(self):
        return len(self.steps)

    def replay(self, system: EquationSystem, null=None) -> list:
        """The words ``C_0 … C_{r+1}``; raises :class:`DerivationError` on mismatch."""
        words = [tuple(self.start)]
        for step in self.steps:
            words.append(apply_step(words[-1], system, step, null))
        if words[-1] != tuple(self.end):
            raise DerivationError(f"derivation ends at {words[-1]}, not {self.end}")
        return words

    def verify(self, system, null=None) -> bool:
        try:
            self.replay(system, null)
        except DerivationError:
            return False
        return True

    def reversed(self):
        return Derivation(self.end, tuple(s.inverse() for s in reversed(self.steps)), self.start)

    def then(self, other):
        if tuple(self.end) != tuple(other.start):
            raise ValueError("derivations do not meet")
        return Derivation(self.start, self.steps + other.steps, other.end)

    def in_context(self, prefix=(), suffix=()):
        prefix, suffix = tuple(prefix), tuple(suffix)
        return Derivation(
            prefix + tuple(self.start) + suffix,
            tuple(s.shifted(len(prefix)) for s in self.steps),
            prefix + tuple(self.end) + suffix,
        )

    def describe(self, system, null=None, fmt=None):
        fmt = fmt or system.alphabet.format
        words = self.replay(system, null)
        lines = [f"start: {fmt(words[0])}"]
        for k, (step, w) in enumerate(zip(self.steps, words[1:]), 1):
            lines.append(f"step {k}: {step.describe()}: {fmt(w)}")
        return lines


@dataclass(frozen=True)
class DecisionOutcome:
    verdict: Verdict
    witness: Optional[Derivation] = None
    states: int = 0
    max_length: int = 0
    note: str = ""

    def __post_init__(self):
        if self.verdict is Verdict.EQUIVALENT and self.witness is None:
            raise ValueError("an 'equivalent' verdict needs a witness")

    def __bool__(self):
        return self.verdict is Verdict.EQUIVALENT

    @property
    def equivalent(self):
        return self.verdict is Verdict.EQUIVALENT


# -- move generation -------------------------------------------------------


class _Moves:
    """Precomputed byte patterns for fast one-step neighbour enumeration."""

    def __init__(self, system, both=True, null=None, max_length=None):
        pats = []
        for i, eq in enumerate(system.equations):
            pats.append((bytes(eq.lhs), bytes(eq.rhs), Step(i, Direction.FORWARD, 0)))
            if both:
                pats.append((bytes(eq.rhs), bytes(eq.lhs), Step(i, Direction.BACKWARD, 0)))
        self.pats = pats
        self.null = bytes(null) if null is not None else None
        self.max_length = max_length
        self.truncated = False

    def __call__(self, w: bytes):
        for src, dst, proto in self.pats:
            grow = len(dst) - len(src)
            if self.max_length is not None and len(w) + grow > self.max_length:
                if w.find(src) >= 0:
                    self.truncated = True
                continue
            i = w.find(src)
            while i >= 0:
                yield w[:i] + dst + w[i + len(src):], Step(proto.rule, proto.direction, i)
                i = w.find(src, i + 1)
        r = self.null
        if r is not None:
            i = w.find(r)
            while i >= 0:
                if len(w) > len(r):
                    yield w[:i] + w[i + len(r):], Step(NULL_RULE, Direction.FORWARD, i)
                i = w.find(r, i + 1)
            if self.max_length is not None and len(w) + len(r) > self.max_length:
                self.truncated = True
            else:
                for i in range(len(w) + 1):
                    yield w[:i] + r + w[i:], Step(NULL_RULE, Direction.BACKWARD, i)


def similar_steps(w: Word, system: EquationSystem) -> list:
    """Every word one step away from ``w``, with the step that produced it.

    Ordered by (rule, direction, position); semi-Thue systems only rewrite
    forward.
    """
    if not w:
        raise ValueError("word must be non-empty")
    moves = _Moves(system, both=system.mode == "thue")
    return [(tuple(v), step) for v, step in moves(bytes(w))]


def _path(parents, w):
    steps = []
    while True:
        prev, step = parents[w]
        if prev is None:
            break
        steps.append(step)
        w = prev
    steps.reverse()
    return steps


def _search(p: bytes, q: bytes, moves, max_states):
    """Bidirectional breadth-first search over a symmetric move relation.

    Returns ``(steps or None, states, saturated, maxlen)``; ``saturated`` is
    true when one side's component was explored completely without hitting
    the state cap or the length bound.
    """
    if p == q:
        return [], 1, True, len(p)
    parents = [{p: (None, None)}, {q: (None, None)}]
    frontiers = [[p], [q]]
    trunc = [False, False]
    maxlen = max(len(p), len(q))
    states = 2
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = parents[side], parents[1 - side]
        nxt = []
        moves.truncated = False
        for w in frontiers[side]:
            for v, step in moves(w):
                if v in mine:
                    continue
                mine[v] = (w, step)
                if v in other:
                    left = _path(parents[0], v)
                    right = _path(parents[1], v)
                    steps = left + [s.inverse() for s in reversed(right)]
                    return steps, states + 1, False, max(maxlen, len(v))
                states += 1
                maxlen = max(maxlen, len(v))
                if states >= max_states:
                    return None, states, False, maxlen
                nxt.append(v)
        trunc[side] = trunc[side] or moves.truncated
        frontiers[side] = nxt
        if not nxt and not trunc[side]:
            return None, states, True, maxlen
    return None, states, False, maxlen


# -- fragment (a): length-preserving systems --------------------------------


def decide_fixed_length(p: Word, q: Word, system: EquationSystem) -> DecisionOutcome:
    """Exact equivalence for length-preserving systems.

    Every word equivalent to ``p`` has length ``|p|``, so the closure is
    finite (at most ``|Σ|^|p|`` words) and is explored lazily from both ends.
    """
    if not system.length_preserving:
        raise FragmentError("decide_fixed_length needs a length-preserving system")
    p, q = tuple(p), tuple(q)
    if len(p) != len(q):
        return DecisionOutcome(Verdict.NOT_EQUIVALENT, None, 0, max(len(p), len(q)),
                               "lengths differ")
    steps, states, saturated, maxlen = _search(bytes(p), bytes(q), _Moves(system), float("inf"))
    if steps is None:
        return DecisionOutcome(Verdict.NOT_EQUIVALENT, None, states, maxlen)
    return DecisionOutcome(Verdict.EQUIVALENT, Derivation(p, tuple(steps), q), states, maxlen)


def closure(words, system: EquationSystem, null=None, max_length=None, max_states=None):
    """Breadth-first closure of ``words`` under the (symmetric) system.

    Returns ``(words, saturated)`` with ``words`` a set of tuples.
    """
    moves = _Moves(system, both=True, null=null, max_length=max_length)
    seen = {bytes(w) for w in words}
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        for v, _ in moves(w):
            if v not in seen:
                seen.add(v)
                if max_states is not None and len(seen) >= max_states:
                    return {tuple(x) for x in seen}, False
                queue.append(v)
    return {tuple(x) for x in seen}, not moves.truncated


class ClassIndex:
    """Memoised partition of words into equivalence classes of a
    length-preserving system (the parallel classes of the homogeneous
    transformations)."""

    def __init__(self, system: EquationSystem):
        if not system.length_preserving:
            raise FragmentError("class index needs a length-preserving system")
        self.system = system
        self._moves = _Moves(system)
        self._cls = {}
        self._members = []

    def class_id(self, w) -> int:
        b = bytes(w)
        cid = self._cls.get(b)
        if cid is not None:
            return cid
        cid = len(self._members)
        seen = {b}
        queue = deque([b])
        while queue:
            u = queue.popleft()
            for v, _ in self._moves(u):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        for u in seen:
            self._cls[u] = cid
        self._members.append(frozenset(seen))
        return cid

    def members(self, w) -> frozenset:
        """All words parallel to ``w`` (as tuples)."""
        return frozenset(tuple(u) for u in self._members[self.class_id(w)])

    def same(self, p, q) -> bool:
        if len(p) != len(q):
            return False
        return self.class_id(p) == self.class_id(q)

    def representative(self, w) -> Word:
        """Lexicographically least word of the class."""
        return tuple(min(self._members[self.class_id(w)]))


# -- fragment (b): length-reducing systems without overlaps -----------------


@dataclass(frozen=True)
class Violation:
    kind: str  # "contains" or "overlap"
    first: int
    second: int
    position: int
    length: int

    def describe(self, words=None, fmt=str):
        if self.kind == "contains":
            return (f"A_{self.first} occurs inside A_{self.second} at position {self.position}")
        return (f"suffix of A_{self.first} of length {self.length} is a prefix of "
                f"A_{self.second}")


@dataclass(frozen=True)
class OverlapReport:
    words: tuple
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def describe(self):
        return [v.describe() for v in self.violations]


def check_non_overlapping(lhs_set) -> OverlapReport:
    """Check that no left-hand side contains another and no two (or one with
    itself) share a proper suffix/prefix."""
    words = tuple(tuple(w) for w in lhs_set)
    if not words or any(not w for w in words):
        raise ValueError("need a non-empty list of non-empty words")
    out = []
    for p, a in enumerate(words):
        for q, b in enumerate(words):
            if p != q and len(a) <= len(b):
                for pos in find_occurrences(b, a):
                    out.append(Violation("contains", p, q, pos, len(a)))
    for p, a in enumerate(words):
        for q, b in enumerate(words):
            for k in range(1, min(len(a), len(b))):
                if a[len(a) - k:] == b[:k]:
                    out.append(Violation("overlap", p, q, len(a) - k, k))
    return OverlapReport(words, tuple(out))


def _require_reducing(system):
    bad = [i for i, eq in enumerate(system.equations) if len(eq.lhs) <= len(eq.rhs)]
    if bad:
        raise FragmentError(f"equations {bad} are not strictly length-decreasing")


def reduce_to_normal_form(w: Word, system: EquationSystem, strategy="leftmost", seed=None):
    """Rewrite ``A_k → B_k`` until no left-hand side occurs.

    ``strategy`` picks the redex: ``"leftmost"``, ``"rightmost"`` or
    ``"random"`` (seeded by ``seed``).  Returns ``(normal_form, derivation)``.
    """
    _require_reducing(system)
    if strategy not in ("leftmost", "rightmost", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rng = random.Random(seed) if strategy == "random" else None
    pats = [(bytes(eq.lhs), bytes(eq.rhs)) for eq in system.equations]
    cur = bytes(w)
    steps = []
    while True:
        redexes = []
        for rule, (src, _) in enumerate(pats):
            i = cur.find(src)
            while i >= 0:
                redexes.append((i, rule))
                i = cur.find(src, i + 1)
        if not redexes:
            break
        if strategy == "leftmost":
            pos, rule = min(redexes)
        elif strategy == "rightmost":
            pos, rule = max(redexes, key=lambda r: (r[0], -r[1]))
        else:
            pos, rule = rng.choice(redexes)
        src, dst = pats[rule]
        cur = cur[:pos] + dst + cur[pos + len(src):]
        steps.append(Step(rule, Direction.FORWARD, pos))
    nf = tuple(cur)
    return nf, Derivation(tuple(w), tuple(steps), nf)


def decide_reducing(p: Word, q: Word, system: EquationSystem) -> DecisionOutcome:
    """Exact equivalence for length-reducing systems whose left-hand sides
    never overlap: equivalent iff the normal forms coincide."""
    _require_reducing(system)
    report = check_non_overlapping(system.lhs_words())
    if not report.ok:
        raise FragmentError("left-hand sides overlap: " + "; ".join(report.describe()), report)
    np_, dp = reduce_to_normal_form(p, system)
    nq, dq = reduce_to_normal_form(q, system)
    states = len(dp) + len(dq) + 2
    maxlen = max(len(p), len(q))
    if np_ != nq:
        return DecisionOutcome(Verdict.NOT_EQUIVALENT, None, states, maxlen,
                               "distinct normal forms")
    return DecisionOutcome(Verdict.EQUIVALENT, dp.then(dq.reversed()), states, maxlen)


# -- general case -----------------------------------------------------------


def default_max_length(p, q, system, null=None):
    longest = max(system.max_side, len(null) if null is not None else 0)
    return max(len(p), len(q)) + 2 * longest


def decide_bounded(p: Word, q: Word, system: EquationSystem, max_length=None,
                   max_states=DEFAULT_MAX_STATES, null=None) -> DecisionOutcome:
    """Budgeted two-sided search of the equivalence closure.

    Only words of length ``≤ max_length`` are visited and at most
    ``max_states`` of them.  ``not-equivalent`` is only reported when one
    side's component was exhausted without touching either limit; any other
    failure is ``unknown``.  With ``null`` set, deleting or inserting that
    word counts as a step too (rule index ``NULL_RULE``).
    """
    p, q = tuple(p), tuple(q)
    if max_length is None:
        max_length = default_max_length(p, q, system, null)
    # search from the canonically smaller end so (p, q) and (q, p) agree
    swap = (len(q), q) < (len(p), p)
    a, b = (q, p) if swap else (p, q)
    moves = _Moves(system, both=True, null=null, max_length=max_length)
    if len(a) > max_length or len(b) > max_length:
        return DecisionOutcome(Verdict.UNKNOWN, None, 0, max(len(a), len(b)),
                               "input longer than max_length")
    steps, states, saturated, maxlen = _search(bytes(a), bytes(b), moves, max_states)
    if steps is not None:
        d = Derivation(a, tuple(steps), b)
        if swap:
            d = d.reversed()
        return DecisionOutcome(Verdict.EQUIVALENT, d, states, maxlen)
    if saturated:
        return DecisionOutcome(Verdict.NOT_EQUIVALENT, None, states, maxlen, "closure saturated")
    note = "state budget exhausted" if states >= max_states else "length bound reached"
    return DecisionOutcome(Verdict.UNKNOWN, None, states, maxlen, note)


# -- left cancellation --------------------------------------------------------


@dataclass(frozen=True)
class CancellationEntry:
    x: int
    p: Word
    y: int
    q: Word
    flipped: bool = False


@dataclass(frozen=True)
class CancellationCheck:
    """Outcome of the distinct-initial-symbol test.

    ``entries`` gives ``A_p ≡ x_p P_p``, ``B_p ≡ y_p Q_p`` per equation
    (``flipped`` when the equation had to be read right-to-left).
    """

    entries: Optional[tuple]
    violation: str = ""

    @property
    def ok(self):
        return self.entries is not None

    def __bool__(self):
        return self.ok


def _orientation_violation(sides):
    xs = [a[0] for a, _ in sides]
    ys = [b[0] for _, b in sides]
    for i, y in enumerate(ys):
        for j, x in enumerate(xs):
            if y == x:
                return f"initial symbol of B_{i} equals initial symbol of A_{j}"
        for j in range(i):
            if ys[j] == y:
                return f"B_{j} and B_{i} start with the same symbol"
    return ""


def check_cancellation_condition(system: EquationSystem, orient=False) -> CancellationCheck:
    """Check that every equation reads ``x_p P_p = y_p Q_p`` with every ``y``
    different from all other ``y`` and from every ``x``.

    The equations are taken as written.  With ``orient`` set, the sides of
    any equation may also be swapped (equations are symmetric, so a swapped
    reading proves the same cancellations); up to 16 equations are searched
    exhaustively.
    """
    eqs = system.equations
    given = [(eq.lhs, eq.rhs) for eq in eqs]
    first = _orientation_violation(given)
    if not first:
        return CancellationCheck(tuple(
            CancellationEntry(a[0], a[1:], b[0], b[1:]) for a, b in given))
    if orient and len(eqs) <= 16:
        for flips in product((False, True), repeat=len(eqs)):
            if not any(flips):
                continue
            sides = [(b, a) if f else (a, b) for (a, b), f in zip(given, flips)]
            if not _orientation_violation(sides):
                return CancellationCheck(tuple(
                    CancellationEntry(a[0], a[1:], b[0], b[1:], f)
                    for (a, b), f in zip(sides, flips)))
    return CancellationCheck(None, first)


def _cancel_symbol(system, words, steps):
    """Given ``words[0] ≡ zM``, ``words[-1] ≡ zN`` and the steps between them,
    return ``(words', steps')`` for a derivation ``M = N`` that is no longer."""
    z = words[0][0]
    k = len(steps)
    if k == 0:
        return [words[0][1:]], []
    for r in range(1, k):
        if words[r][0] == z:
            w1, s1 = _cancel_symbol(system, words[: r + 1], steps[:r])
            w2, s2 = _cancel_symbol(system, words[r:], steps[r:])
            return w1 + w2[1:], s1 + s2
    first, last = steps[0], steps[-1]
    if first.position != 0:
        # the first symbol survives the first step, so k == 1 here
        assert k == 1
        return [w[1:] for w in words], [first.shifted(-1)]
    src0, dst0 = _step_sides(system, first, None)
    if last.position != 0 or last.rule != first.rule or last.direction is first.direction:
        raise DerivationError("derivation violates the distinct-initial-symbol condition")
    if src0[0] == dst0[0]:
        raise DerivationError("an equation starts with the same symbol on both sides")
    tail = src0[1:]
    m_rest = words[0][len(src0):]
    n_rest = words[-1][len(src0):]
    # middle derivation: dst0·M' = ... = dst0·N', peel dst0 one symbol at a time
    mid_words, mid_steps = list(words[1:-1]), list(steps[1:-1])
    if mid_words[0][: len(dst0)] != dst0 or mid_words[-1][: len(dst0)] != dst0:
        raise DerivationError("inner derivation does not keep the replaced prefix")
    for _ in range(len(dst0)):
        mid_words, mid_steps = _cancel_symbol(system, mid_words, mid_steps)
    assert mid_words[0] == m_rest and mid_words[-1] == n_rest
    lifted_words = [tail + w for w in mid_words]
    lifted_steps = [s.shifted(len(tail)) for s in mid_steps]
    return lifted_words, lifted_steps


def cancel_symbol(z, m: Word, n: Word, system: EquationSystem, proof: Derivation) -> Derivation:
    """Turn a derivation ``zM = zN`` into one for ``M = N`` with no more steps."""
    m, n = tuple(m), tuple(n)
    if tuple(proof.start) != (z,) + m or tuple(proof.end) != (z,) + n:
        raise ValueError("proof does not relate zM and zN")
    words = proof.replay(system)
    out_words, out_steps = _cancel_symbol(system, words, list(proof.steps))
    d = Derivation(m, tuple(out_steps), n)
    d.replay(system)
    return d


def cancel_left(c: Word, m: Word, d: Word, n: Word, system: EquationSystem,
                proof: Derivation, cproof: Derivation) -> Derivation:
    """From ``CM = DN`` and ``C = D`` derive ``M = N``.

    The system must satisfy :func:`check_cancellation_condition` in some
    orientation of its equations.  The
    result never has more steps than ``proof`` and ``cproof`` together.
    """
    c, m, d, n = (tuple(x) for x in (c, m, d, n))
    check = check_cancellation_condition(system, orient=True)
    if not check:
        raise FragmentError("system fails the cancellation condition: " + check.violation)
    if tuple(proof.start) != c + m or tuple(proof.end) != d + n:
        raise ValueError("proof must relate C·M and D·N")
    if tuple(cproof.start) != c or tuple(cproof.end) != d:
        raise ValueError("cproof must relate C and D")
    proof.replay(system)
    cproof.replay(system)
    # C·M = D·N = C·N
    full = proof.then(cproof.reversed().in_context(suffix=n))
    words = full.replay(system)
    steps = list(full.steps)
    for _ in range(len(c)):
        words, steps = _cancel_symbol(system, words, steps)
    out = Derivation(m, tuple(steps), n)
    out.replay(system)
    return out


# -- rotations ---------------------------------------------------------------


@dataclass(frozen=True)
class ShiftReport:
    word: Word
    commutes: dict  # symbol -> Verdict for zT = Tz
    members: tuple  # words equivalent to ``word`` found within budget
    rotations: dict  # (member, rotation) -> Verdict
    saturated: bool

    @property
    def all_equivalent(self):
        return all(v is Verdict.EQUIVALENT for v in self.rotations.values())

    @property
    def unknown(self):
        return [k for k, v in self.rotations.items() if v is Verdict.UNKNOWN]


def cyclic_shift_family(t: Word, system: EquationSystem, max_length=None,
                        max_states=DEFAULT_MAX_STATES) -> ShiftReport:
    """Check that every rotation of every word equivalent to ``t`` is
    equivalent to ``t`` (expected when ``zT = Tz`` for every symbol ``z``)."""
    t = tuple(t)
    if max_length is None:
        max_length = len(t) + 2 * system.max_side
    commutes = {}
    for z in system.alphabet:
        out = decide_bounded((z,) + t, t + (z,), system, max_length + 1, max_states)
        commutes[z] = out.verdict
    members, saturated = closure([t], system, max_length=max_length, max_states=max_states)
    rotations = {}
    for w in sorted(members):
        for i in range(len(w)):
            rot = w[i:] + w[:i]
            if (w, rot) in rotations:
                continue
            if rot in members:
                verdict = Verdict.EQUIVALENT
            elif saturated:
                verdict = Verdict.NOT_EQUIVALENT
            else:
                verdict = decide_bounded(rot, t, system, max_length, max_states).verdict
            rotations[(w, rot)] = verdict
    return ShiftReport(t, commutes, tuple(sorted(members)), rotations, saturated)
