"""Generating an equation system from a null sequence.

Starting from ``S_1 = {R}`` the procedure alternates two moves until
nothing changes:

* every overlap ``R_p ≡ CU``, ``UD ≡ R_q`` between two null sequences found
  so far yields the equation ``C = D``;
* every word reachable from a known null sequence with those equations is
  itself a null sequence.

The final null sequences are the γ-words and the final equations the
δ-system.  :func:`minimize` then picks a smallest subset ε from which
every δ-equation still follows, and :func:`verify_epsilon_theorems`
checks the structural properties such a subset must have.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Optional

from .core import Alphabet, Word
from .rewrite import (
    ClassIndex,
    Equation,
    EquationSystem,
    closure,
    decide_fixed_length,
)

EXACT_MINIMIZE_LIMIT = 20


def _overlaps(words):
    """Yield ``(Equation C = D, (R_p, R_q, U))`` for every overlap, self-pairs included."""
    words = sorted(words)
    for rp, rq in product(words, repeat=2):
        for k in range(1, min(len(rp), len(rq))):
            if rp[len(rp) - k:] == rq[:k]:
                c, d = rp[: len(rp) - k], rq[k:]
                if c != d:
                    yield Equation(c, d).canonical(), (rp, rq, rq[:k])


def _sort_key(eq):
    return (eq.size, eq.lhs, eq.rhs)


def generate_equations(words, alphabet: Alphabet) -> EquationSystem:
    """All equations ``C = D`` read off overlaps ``R_p ≡ CU``, ``UD ≡ R_q``.

    Pairs are taken over every ordered ``(R_p, R_q)`` including ``p = q``;
    identities ``C ≡ D`` are dropped and unordered duplicates merged.
    """
    words = {tuple(w) for w in words}
    lengths = {len(w) for w in words}
    if len(lengths) > 1:
        raise ValueError("null sequences must all have the same length")
    if lengths and min(lengths) < 2:
        raise ValueError("null sequences must have at least two symbols")
    eqs = sorted({eq for eq, _ in _overlaps(words)}, key=_sort_key)
    return EquationSystem(alphabet, tuple(eqs))


@dataclass(frozen=True)
class CompletionState:
    """The series ``S_1 ⊆ S_2 ⊆ …`` and ``E_1 ⊆ E_2 ⊆ …``.

    ``e_layers[θ]`` is generated from ``s_layers[θ]``; ``s_layers[θ+1]`` is
    the closure of ``s_layers[θ]`` under ``e_layers[θ]``.
    """

    alphabet: Alphabet
    seed: Word
    s_layers: tuple
    e_layers: tuple
    fixpoint: bool = False
    trace: tuple = ()

    @property
    def gamma(self) -> frozenset:
        return self.s_layers[-1]

    @property
    def delta(self) -> EquationSystem:
        if self.e_layers:
            return self.e_layers[-1]
        return EquationSystem(self.alphabet, ())

    @property
    def iterations(self):
        return len(self.e_layers)

    @cached_property
    def witnesses(self) -> dict:
        """First overlap ``(R_p, R_q, U)`` found for each δ-equation."""
        out = {}
        for eq, wit in _overlaps(self.gamma):
            out.setdefault(eq, wit)
        return out

    @cached_property
    def index(self) -> ClassIndex:
        """Parallel classes of the δ-system."""
        return ClassIndex(self.delta)

    def derivable(self, p, q) -> bool:
        return len(p) == len(q) and self.index.same(p, q)

    def check_invariants(self):
        if self.s_layers[0] != frozenset({self.seed}):
            raise AssertionError("S_1 must be the seed alone")
        n = len(self.seed)
        for theta, layer in enumerate(self.s_layers):
            if any(len(w) != n for w in layer):
                raise AssertionError(f"S_{theta + 1} has words of the wrong length")
            if theta and not self.s_layers[theta - 1] <= layer:
                raise AssertionError(f"S_{theta} is not contained in S_{theta + 1}")
        for theta, eqs in enumerate(self.e_layers):
            for eq in eqs:
                if not eq.length_preserving or len(eq.lhs) >= n:
                    raise AssertionError(f"E_{theta + 1} has a malformed equation")
            if theta and not set(self.e_layers[theta - 1]) <= set(eqs):
                raise AssertionError(f"E_{theta} is not contained in E_{theta + 1}")
        if self.fixpoint:
            again = expand_null_sequences(self)
            if again != self.gamma:
                raise AssertionError("state is flagged as a fixpoint but still grows")
        return True


def expand_null_sequences(state: CompletionState) -> frozenset:
    """Closure of the current null sequences under the current equations."""
    if not state.s_layers:
        raise ValueError("empty completion state")
    if not state.e_layers:
        return frozenset(state.s_layers[-1])
    words, saturated = closure(state.s_layers[-1], state.e_layers[-1])
    assert saturated
    return frozenset(words)


def complete(r, alphabet: Optional[Alphabet] = None, max_iterations=None) -> CompletionState:
    """Run the fixpoint from the seed ``r`` (a word literal or index tuple).

    Terminates because every word involved has the length of ``r``.
    """
    if alphabet is None:
        if not isinstance(r, str):
            raise ValueError("an alphabet is needed for a tuple seed")
        alphabet = Alphabet.from_text("".join(r.split()))
    seed = alphabet.parse(r)
    if len(seed) < 2:
        raise ValueError("the seed must have at least two symbols")
    s_layers = [frozenset({seed})]
    e_layers = []
    trace = []
    known = set()
    while True:
        eqs = generate_equations(s_layers[-1], alphabet)
        fresh = [eq for eq in eqs if eq not in known]
        known.update(eqs)
        e_layers.append(eqs)
        state = CompletionState(alphabet, seed, tuple(s_layers), tuple(e_layers))
        nxt = expand_null_sequences(state)
        trace.append({
            "theta": len(e_layers),
            "s_size": len(s_layers[-1]),
            "e_size": len(eqs),
            "new_equations": [f"{alphabet.format(e.lhs)} = {alphabet.format(e.rhs)}"
                              for e in fresh],
        })
        if nxt == s_layers[-1]:
            return CompletionState(alphabet, seed, tuple(s_layers), tuple(e_layers),
                                   True, tuple(trace))
        if max_iterations is not None and len(e_layers) >= max_iterations:
            return CompletionState(alphabet, seed, tuple(s_layers), tuple(e_layers),
                                   False, tuple(trace))
        s_layers.append(nxt)


# -- minimization ------------------------------------------------------------


@dataclass(frozen=True)
class MinimizedSystem:
    epsilon: EquationSystem
    provenance: dict  # δ-equation not in ε -> Derivation of it from ε
    certified_minimum: bool = True

    def __iter__(self):
        return iter(self.epsilon)

    def __len__(self):
        return len(self.epsilon)


def _covers(eqs, targets, alphabet):
    if not eqs:
        return all(t.lhs == t.rhs for t in targets)
    idx = ClassIndex(EquationSystem(alphabet, tuple(eqs)))
    return all(idx.same(t.lhs, t.rhs) for t in targets)


def minimize(state: CompletionState) -> MinimizedSystem:
    """A smallest subset ε of δ from which every δ-equation follows.

    Exhaustive over subsets of increasing size when δ has at most
    ``EXACT_MINIMIZE_LIMIT`` equations; among the smallest covers the one
    with the fewest symbols (then lexicographically first) wins.  Larger
    systems fall back to greedy removal of the longest equations and the
    result is flagged as not certified.
    """
    if not state.fixpoint:
        raise ValueError("minimize needs a state at its fixpoint")
    delta = sorted(state.delta, key=_sort_key)
    alphabet = state.alphabet
    if len(delta) <= EXACT_MINIMIZE_LIMIT:
        chosen = None
        for k in range(len(delta) + 1):
            covers = [combo for combo in combinations(delta, k)
                      if _covers(combo, delta, alphabet)]
            if covers:
                chosen = min(covers, key=lambda c: (sum(e.size for e in c),
                                                    [_sort_key(e) for e in c]))
                break
        certified = True
    else:
        chosen = list(delta)
        for eq in sorted(delta, key=_sort_key, reverse=True):
            rest = [e for e in chosen if e != eq]
            if _covers(rest, delta, alphabet):
                chosen = rest
        certified = False
    eps = EquationSystem(alphabet, tuple(sorted(chosen, key=_sort_key)))
    provenance = {}
    for eq in delta:
        if eq in eps.equations:
            continue
        out = decide_fixed_length(eq.lhs, eq.rhs, eps)
        assert out.equivalent
        provenance[eq] = out.witness
    return MinimizedSystem(eps, provenance, certified)


# -- structural theorems -----------------------------------------------------


@dataclass(frozen=True)
class EpsilonReport:
    checks: dict  # name -> tuple of counterexample descriptions

    @property
    def ok(self):
        return not any(self.checks.values())

    def __bool__(self):
        return self.ok

    @property
    def failing(self):
        return [name for name, bad in self.checks.items() if bad]


def _prefixes(words):
    return {w[:k] for w in words for k in range(1, len(w))}


def _suffixes(words):
    return {w[len(w) - k:] for w in words for k in range(1, len(w))}


def _common_prefix(a, b):
    k = 0
    while k < min(len(a), len(b)) and a[k] == b[k]:
        k += 1
    return k


def _factor_checks(state, eqs, fmt):
    """Common left (or right) factors of an ε-equation that the structural
    theorems forbid."""
    gamma = state.gamma
    pre, suf = _prefixes(gamma), _suffixes(gamma)
    prefix_bad, suffix_bad = [], []
    for eq in eqs:
        a, b = eq.lhs, eq.rhs
        name = f"{fmt(a)} = {fmt(b)}"
        # T X = T Y with X or Y starting a null sequence; mirrored: X T = Y T
        for k in range(1, _common_prefix(a, b) + 1):
            if a[k:] in pre or b[k:] in pre:
                prefix_bad.append(f"{name}: common left factor {fmt(a[:k])}")
                break
        ra, rb = a[::-1], b[::-1]
        for k in range(1, _common_prefix(ra, rb) + 1):
            if a[: len(a) - k] in suf or b[: len(b) - k] in suf:
                prefix_bad.append(f"{name}: common right factor {fmt(a[len(a) - k:])}")
                break
        # S X = S Y with S ending a null sequence; mirrored: X S = Y S with S starting one
        for k in range(1, _common_prefix(a, b) + 1):
            if a[:k] in suf:
                suffix_bad.append(f"{name}: common left factor {fmt(a[:k])} ends a null sequence")
                break
        for k in range(1, _common_prefix(ra, rb) + 1):
            if a[len(a) - k:] in pre:
                suffix_bad.append(
                    f"{name}: common right factor {fmt(a[len(a) - k:])} starts a null sequence")
                break
    return tuple(prefix_bad), tuple(suffix_bad)


def verify_epsilon_theorems(ms: MinimizedSystem, state: CompletionState) -> EpsilonReport:
    """Check a minimized system against the properties ε must have.

    * ``coverage``: every δ-equation follows from ε;
    * ``independence``: no ε-equation follows from the others;
    * ``identity`` / ``duplicate``: no ``A ≡ B`` and no repeated pair;
    * ``prefix``: no ``TX = TY`` with ``X`` (or ``Y``) starting a null
      sequence, and the mirror image ``XT = YT`` with ``X`` ending one;
    * ``suffix``: no ``SX = SY`` with ``S`` ending a null sequence, and the
      mirror image ``XS = YS`` with ``S`` starting one;
    * ``commutation``: ``PR = RP``, ``QR = RQ`` and ``UR = RU`` for every
      overlap ``R_x ≡ PU``, ``UQ ≡ R_y`` behind a δ-equation and every
      null sequence ``R``;
    * ``factor``: ``NR = RN`` and ``MR = RM`` whenever a δ-side is ``NM``
      with ``M`` starting a null sequence.
    """
    fmt = state.alphabet.format
    eps = list(ms.epsilon)
    delta = list(state.delta)
    checks = {}

    checks["coverage"] = tuple(
        f"{fmt(e.lhs)} = {fmt(e.rhs)}" for e in delta if not _covers(eps, [e], state.alphabet))
    checks["independence"] = tuple(
        f"{fmt(e.lhs)} = {fmt(e.rhs)}" for i, e in enumerate(eps)
        if _covers(eps[:i] + eps[i + 1:], [e], state.alphabet))
    checks["identity"] = tuple(f"{fmt(e.lhs)}" for e in eps if e.lhs == e.rhs)
    seen = Counter(frozenset((e.lhs, e.rhs)) for e in eps)
    checks["duplicate"] = tuple(
        " = ".join(fmt(w) for w in sorted(pair)) for pair, n in seen.items() if n > 1)
    checks["prefix"], checks["suffix"] = _factor_checks(state, eps, fmt)

    gamma = sorted(state.gamma)
    bad = []
    for eq in delta:
        p, q, u = _oriented_witness(state, eq)
        for r in gamma:
            for w in (p, q, u):
                if not state.derivable(w + r, r + w):
                    bad.append(f"{fmt(w)}·{fmt(r)} ≠ {fmt(r)}·{fmt(w)}")
    checks["commutation"] = tuple(bad)

    pre = _prefixes(gamma)
    bad = []
    for eq in delta:
        for side in (eq.lhs, eq.rhs):
            for k in range(1, len(side)):
                n_part, m_part = side[:k], side[k:]
                if m_part not in pre:
                    continue
                for r in gamma:
                    for w in (n_part, m_part):
                        if not state.derivable(w + r, r + w):
                            bad.append(f"{fmt(w)}·{fmt(r)} ≠ {fmt(r)}·{fmt(w)}")
    checks["factor"] = tuple(bad)
    return EpsilonReport(checks)


def _oriented_witness(state, eq):
    """``(P, Q, U)`` with ``PU`` and ``UQ`` null sequences and ``{P, Q}`` the equation."""
    rp, rq, u = state.witnesses[eq]
    p, q = rp[: len(rp) - len(u)], rq[len(u):]
    assert {p, q} == {eq.lhs, eq.rhs}
    return p, q, u


# -- the insertion-overlap theorem ------------------------------------------


@dataclass(frozen=True)
class InsertionOverlapCase:
    """How ``M ≡ aR_zb`` and ``N ≡ cR_μd`` overlap in ``M ≡ CU``, ``UD ≡ N``.

    ``case`` is 1–8; ``mirrored`` marks the left-right mirror image of
    case 2 (``R_z`` cut by the start of ``U`` while ``R_μ`` lies inside it).
    ``bindings`` holds the named sub-words, ``lemmas`` the equal-length
    pairs the argument needs (each derivable from δ).  Cases 1–5 conclude
    ``C = D``; cases 6–8 conclude that removing one null sequence from a
    word equivalent to ``C`` and one from a word equivalent to ``D`` leaves
    equivalent words, recorded in ``reductions`` as
    ``((C', position, removed, C''), (D', position, removed, D''))``.
    """

    case: int
    mirrored: bool
    m: Word
    n: Word
    c: Word
    u: Word
    d: Word
    bindings: dict
    lemmas: tuple
    equation: Optional[tuple] = None
    reductions: Optional[tuple] = None
    verified: bool = False

    @property
    def label(self):
        return f"{self.case}'" if self.mirrored else str(self.case)


def overlap_profile(l, s, z0, m0):
    """Involvement of ``a, R_z, b`` and ``c, R_μ, d`` in ``U``: ``A`` (all),
    ``P`` (part), ``N`` (none) or ``-`` (empty part).

    ``l`` is the null-sequence length, ``s = |C|``, ``z0 = |a|`` and
    ``m0 = s + |c|``; ``U`` occupies ``[s, 2l)``.
    """
    def status(lo, hi, u_lo, u_hi):
        if lo == hi:
            return "-"
        inside = max(0, min(hi, u_hi) - max(lo, u_lo))
        return "A" if inside == hi - lo else ("N" if inside == 0 else "P")

    m_parts = [(0, z0), (z0, z0 + l), (z0 + l, 2 * l)]
    n_parts = [(s, m0), (m0, m0 + l), (m0 + l, s + 2 * l)]
    return ("".join(status(lo, hi, s, 2 * l) for lo, hi in m_parts),
            "".join(status(lo, hi, s, 2 * l) for lo, hi in n_parts))


def _case_of(l, s, z0, m0):
    z_inside = s <= z0
    z_outside = z0 + l <= s
    if z_outside and s > z0 + l and m0 + l <= 2 * l:
        raise AssertionError("R_μ would lie inside b while R_z misses U entirely")
    if z_inside:
        if m0 <= l:
            return (1 if z0 <= m0 else 3), False
        return 2, False
    if not z_outside:
        if m0 <= l:
            return 2, True
        if m0 < 2 * l:
            return (4 if m0 <= z0 + l else 5), False
        return 6, False
    return (7 if m0 < 2 * l else 8), False


def classify_insertion_overlap(state: CompletionState, r_x, r_y, r_z, r_mu, a, b, c, d, u
                               ) -> InsertionOverlapCase:
    """Classify one overlap between ``a·R_z·b`` and ``c·R_μ·d`` and verify its conclusion."""
    r_x, r_y, r_z, r_mu, a, b, c, d, u = (tuple(w) for w in (r_x, r_y, r_z, r_mu, a, b, c, d, u))
    gamma = state.gamma
    for name, w in (("R_x", r_x), ("R_y", r_y), ("R_z", r_z), ("R_mu", r_mu)):
        if w not in gamma:
            raise ValueError(f"{name} is not one of the null sequences")
    if a + b != r_x or c + d != r_y:
        raise ValueError("a·b must be R_x and c·d must be R_y")
    m, n = a + r_z + b, c + r_mu + d
    l = len(r_x)
    if not 0 < len(u) < len(m) or m[len(m) - len(u):] != u or n[: len(u)] != u:
        raise ValueError("u is not a proper overlap of M and N")
    s = len(m) - len(u)
    z0, m0 = len(a), s + len(c)
    case, mirrored = _case_of(l, s, z0, m0)
    line = m + n[len(u):]

    def w(lo, hi):
        assert 0 <= lo <= hi <= len(line)
        return line[lo:hi]

    big_c, big_d = line[:s], line[2 * l:]
    equation = reductions = None
    if case == 1:
        e, f, g, h, i = w(s, z0), w(z0, m0), w(m0, z0 + l), w(z0 + l, m0 + l), w(m0 + l, 2 * l)
        bind = dict(e=e, f=f, g=g, h=h, i=i)
        lemmas = ((f, h), (r_x, big_c + e + f + i), (r_y, e + f + i + big_d))
        equation = (big_c, big_d)
    elif case == 3:
        cc, e, f, g = w(s, m0), w(m0, z0), w(z0, m0 + l), w(m0 + l, z0 + l)
        bind = dict(c=cc, e=e, f=f, g=g)
        lemmas = ((e, g), (r_x, big_c + cc + g + b), (r_y, cc + g + b + big_d))
        equation = (big_c, big_d)
    elif case == 2 and not mirrored:
        e, f, g, h = w(s, z0), w(z0, m0), w(m0, z0 + l), w(2 * l, m0 + l)
        bind = dict(e=e, f=f, g=g, h=h)
        lemmas = ((f, b + h), (r_x, big_c + e + b), (r_y, e + b + big_d))
        equation = (big_c, big_d)
    elif case == 2:
        e, cc, g, h, i = w(z0, s), w(s, m0), w(m0, z0 + l), w(z0 + l, m0 + l), w(m0 + l, 2 * l)
        bind = dict(e=e, c=cc, g=g, h=h, i=i)
        lemmas = ((e + cc, h), (r_x, big_c + cc + i), (r_y, cc + i + big_d))
        equation = (big_c, big_d)
    elif case == 4:
        e, cc, f, g = w(z0, s), w(s, m0), w(m0, z0 + l), w(2 * l, m0 + l)
        bind = dict(e=e, c=cc, f=f, g=g)
        lemmas = ((e + cc, b + g), (a, g + f), (f + e, d))
        equation = (big_c, big_d)
    elif case == 5:
        e, f, g, h, i = w(z0, s), w(s, z0 + l), w(z0 + l, m0), w(m0, 2 * l), w(2 * l, m0 + l)
        bind = dict(e=e, f=f, g=g, h=h, i=i)
        lemmas = ((e, g + d), (a + g, i))
        equation = (big_c, big_d)
    elif case == 6:
        e, f, g = w(z0, s), w(s, z0 + l), w(2 * l, m0)
        bind = dict(e=e, f=f, g=g)
        lemmas = ((e, b + g + d),)
        reductions = ((r_x + g + d, 0, r_x, g + d), (big_d, len(g), r_mu, g + d))
    elif case == 7:
        e, cc, f, g = w(z0 + l, s), w(s, m0), w(m0, 2 * l), w(2 * l, m0 + l)
        bind = dict(e=e, c=cc, f=f, g=g)
        lemmas = ((a + e + cc, g),)
        reductions = ((big_c, len(a), r_z, a + e), (a + e + r_y, len(a + e), r_y, a + e))
    else:
        e, f, g = w(z0 + l, s), w(s, 2 * l), w(2 * l, m0)
        bind = dict(e=e, f=f, g=g)
        lemmas = ((a + e, g + d),)
        reductions = ((big_c, len(a), r_z, a + e), (big_d, len(g), r_mu, g + d))
    ok = all(len(p) == len(q) and state.derivable(p, q) for p, q in lemmas)
    if equation is not None:
        ok = ok and state.derivable(*equation)
    else:
        (c1, i1, rc, c2), (d1, i2, rd, d2) = reductions
        ok = (ok and state.derivable(big_c, c1) and state.derivable(big_d, d1)
              and c1[i1:i1 + len(rc)] == rc and c1[:i1] + c1[i1 + len(rc):] == c2
              and d1[i2:i2 + len(rd)] == rd and d1[:i2] + d1[i2 + len(rd):] == d2
              and state.derivable(c2, d2))
    bind.update(a=a, b=b, c_=c, d_=d, R_x=r_x, R_y=r_y, R_z=r_z, R_mu=r_mu)
    return InsertionOverlapCase(case, mirrored, m, n, big_c, u, big_d, bind, lemmas,
                                equation, reductions, ok)


def insertion_overlaps(state: CompletionState):
    """Every ``(R_x, R_y, R_z, R_μ, a, b, c, d, U)`` configuration of the
    insertion-overlap theorem over the state's null sequences."""
    gamma = sorted(state.gamma)
    for r_x, r_y, r_z, r_mu in product(gamma, repeat=4):
        for i, j in product(range(len(r_x) + 1), range(len(r_y) + 1)):
            a, b, c, d = r_x[:i], r_x[i:], r_y[:j], r_y[j:]
            m, n = a + r_z + b, c + r_mu + d
            for k in range(1, len(m)):
                if m[len(m) - k:] == n[:k]:
                    yield r_x, r_y, r_z, r_mu, a, b, c, d, n[:k]


@dataclass(frozen=True)
class CaseCensus:
    counts: Counter  # case label -> number of configurations
    profiles: Counter  # (M profile, N profile) -> number
    failures: tuple  # configurations whose conclusion did not verify

    @property
    def total(self):
        return sum(self.counts.values())


def classify_all(state: CompletionState) -> CaseCensus:
    counts, profiles, failures = Counter(), Counter(), []
    l = len(state.seed)
    for conf in insertion_overlaps(state):
        res = classify_insertion_overlap(state, *conf)
        counts[res.label] += 1
        s = len(res.c)
        profiles[overlap_profile(l, s, len(conf[4]), s + len(conf[6]))] += 1
        if not res.verified:
            failures.append(conf)
    return CaseCensus(counts, profiles, tuple(failures))
