"""The five worked examples of null sequences and their equation systems.

Each generator returns an :class:`ExampleSpec` holding the null system,
the closed forms the null sequence must match, and any displayed chains
of equivalences that should replay.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .core import Alphabet, Word, max_self_overlap
from .nullseq import NullSystem
from .rewrite import (
    Derivation,
    DerivationError,
    EquationSystem,
    check_non_overlapping,
    decide_fixed_length,
    similar_steps,
)


class Chain(NamedTuple):
    """Displayed words linked by single steps (``"similar"``) or by
    homogeneous transformations of any length (``"parallel"``)."""

    words: tuple
    relation: str = "similar"


@dataclass(frozen=True)
class ExampleSpec:
    example: int
    params: dict
    ns: NullSystem
    closed_forms: tuple = ()
    chains: tuple = ()
    extra: dict = field(default_factory=dict)

    @property
    def r(self) -> Word:
        return self.ns.r

    @property
    def alphabet(self) -> Alphabet:
        return self.ns.alphabet

    def check(self):
        for form in self.closed_forms:
            if form != self.ns.r:
                raise AssertionError(f"closed form {form} differs from R = {self.ns.r}")
        return True


def chain_derivation(chain: Chain, system: EquationSystem) -> Derivation:
    """A derivation through every displayed word of ``chain``."""
    words = [tuple(w) for w in chain.words]
    out = Derivation(words[0])
    for prev, nxt in zip(words, words[1:]):
        if chain.relation == "similar":
            steps = [s for v, s in similar_steps(prev, system) if v == nxt]
            if not steps:
                raise DerivationError(f"no single step leads from {prev} to {nxt}")
            link = Derivation(prev, (steps[0],), nxt)
        else:
            res = decide_fixed_length(prev, nxt, system)
            if not res.equivalent:
                raise DerivationError(f"{prev} and {nxt} are not parallel")
            link = res.witness
        out = out.then(link)
    out.replay(system)
    return out


def _power(w, n):
    return tuple(w) * n


def example1(n, extra=(), names=None) -> ExampleSpec:
    """Nested null sequence ``R ≡ X_0`` with ``X_{k-1} ≡ (X_k Y_k)^{n_k} X_k``.

    ``n`` is the list ``[n_1, …, n_r]``.  ``X_r`` is the symbol ``x``; ``Y_k`` is
    ``y`` when ``r = 1`` and ``y1 … yr`` otherwise (override with ``names``
    as ``(x_name, [y names])``).  ``extra`` lists further symbols ``δ``, each
    contributing ``Rδ = δR`` to the system ``H``.
    """
    ns_ = [int(k) for k in n]
    r = len(ns_)
    if r < 1 or any(k < 1 for k in ns_):
        raise ValueError("need r >= 1 and every n_k >= 1")
    if names is None:
        names = ("x", ["y"] if r == 1 else [f"y{k}" for k in range(1, r + 1)])
    x_name, y_names = names
    extra = list(extra)
    alphabet = Alphabet([x_name, *y_names, *extra])
    x_r = (alphabet.index(x_name),)
    y = [None] + [(alphabet.index(name),) for name in y_names]
    xs = [None] * (r + 1)
    xs[r] = x_r
    for k in range(r, 0, -1):
        xs[k - 1] = _power(xs[k] + y[k], ns_[k - 1]) + xs[k]
    big_r = xs[0]

    def left(q):  # (X_1 Y_1)^{n_1} … (X_q Y_q)^{n_q}
        return sum((_power(xs[i] + y[i], ns_[i - 1]) for i in range(1, q + 1)), ())

    def right(q):  # (Y_q X_q)^{n_q} … (Y_1 X_1)^{n_1}
        return sum((_power(y[i] + xs[i], ns_[i - 1]) for i in range(q, 0, -1)), ())

    # one equation per nesting level: the overlap of R with itself at depth q
    base = [(left(q - 1) + xs[q] + y[q], y[q] + xs[q] + right(q - 1)) for q in range(1, r + 1)]
    h = base + [(big_r + (alphabet.index(d),), (alphabet.index(d),) + big_r) for d in extra]
    system = EquationSystem.from_pairs(alphabet, h)
    forms = [xs[1] + right(1)]
    for p in range(1, r + 1):
        forms.append(left(p) + xs[p])
        forms.append(xs[p] + right(p))

    def ladder(q, m):
        """Both sides of ``(X_1Y_1)^{n_1}…(X_qY_q)^{n_q}(X_{q+1}Y_{q+1})^m ∥
        (Y_{q+1}X_{q+1})^m(Y_qX_q)^{n_q}…(Y_1X_1)^{n_1}``."""
        if not 0 <= q < r:
            raise ValueError(f"q must lie in 0..{r - 1}")
        return (left(q) + _power(xs[q + 1] + y[q + 1], m),
                _power(y[q + 1] + xs[q + 1], m) + right(q))

    base_sys = EquationSystem.from_pairs(alphabet, base)
    spec = ExampleSpec(1, {"n": tuple(ns_), "extra": tuple(extra)},
                       NullSystem(alphabet, big_r, system), tuple(forms), (),
                       {"X": tuple(xs), "Y": tuple(y[1:]), "base": base_sys, "ladder": ladder})
    spec.check()
    return spec


def example2() -> ExampleSpec:
    """``R ≡ abbcab`` with ``abbc = bcab`` and ``abbca = cabab``."""
    alphabet = Alphabet("abc")
    p = alphabet.parse
    ns = NullSystem.build(alphabet, "abbcab", [("abbc", "bcab"), ("abbca", "cabab")])
    chains = (
        Chain(tuple(map(p, ["aabbcab", "abcabab", "ababbca", "abbcaba"]))),
        Chain(tuple(map(p, ["babbcab", "bcababb", "abbcabb"]))),
        Chain(tuple(map(p, ["cabbcab", "cababbc", "abbcabc"]))),
    )
    return ExampleSpec(2, {}, ns, (p("ab") + p("bc") + p("ab"),), chains)


def example3(a="a", c="c", n=3) -> ExampleSpec:
    """``R ≡ ABABA`` with ``ABA ≡ U^n`` and ``U ≡ ACA``; the system is ``AC = CA``.

    ``A`` and ``C`` are word literals over single-character symbols and may
    not overlap (neither inside the other nor sharing a border).
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    alphabet = Alphabet.from_text(a, c)
    wa, wc = alphabet.parse(a), alphabet.parse(c)
    if not wa or not wc or wa == wc:
        raise ValueError("A and C must be distinct non-empty words")
    report = check_non_overlapping([wa, wc])
    if not report.ok:
        raise ValueError("A and C overlap: " + "; ".join(report.describe()))
    u = wa + wc + wa
    x, yy = u[len(wa):], u[: len(u) - len(wa)]
    b = x + _power(u, n - 2) + yy
    aba = _power(u, n)
    assert wa + b + wa == aba
    big_r = wa + b + wa + b + wa
    so = max_self_overlap(big_r)
    if so is None or so.u != aba:
        raise ValueError("ABA is not the longest border of R for these A, C")
    ns = NullSystem(alphabet, big_r, EquationSystem.from_pairs(alphabet, [(wa + wc, wc + wa)]))
    return ExampleSpec(3, {"a": a, "c": c, "n": n}, ns, (wa + b + wa + b + wa,), (),
                       {"U": u, "X": x, "Y": yy, "B": b, "ABA": aba})


def example4(n=2) -> ExampleSpec:
    """``R ≡ x^n y x^n`` with the sufficient system ``xy = yx``."""
    if n < 1:
        raise ValueError("n must be positive")
    alphabet = Alphabet("xy")
    x, y = (0,), (1,)
    big_r = _power(x, n) + y + _power(x, n)
    ns = NullSystem(alphabet, big_r, EquationSystem.from_pairs(alphabet, [(x + y, y + x)]))
    derived = EquationSystem.from_pairs(alphabet, [(_power(x, n) + y, y + _power(x, n))])
    return ExampleSpec(4, {"n": n}, ns, (big_r,), (), {"derived": derived})


def example5(n=2, p=2) -> ExampleSpec:
    """``R ≡ x^n (y x^n)^p`` with the system ``x^n y = y x^n``, ``y^p x = x y^p``."""
    if n < 2 or p < 2:
        raise ValueError("need n > 1 and p > 1")
    alphabet = Alphabet("xy")
    x, y = (0,), (1,)
    xn = _power(x, n)
    big_r = xn + _power(y + xn, p)
    k = [(xn + y, y + xn), (_power(y, p) + x, x + _power(y, p))]
    ns = NullSystem(alphabet, big_r, EquationSystem.from_pairs(alphabet, k))
    body = _power(x, (p + 1) * n) + _power(y, p)
    ybody = _power(y, p) + _power(x, (p + 1) * n)
    chains = (
        Chain((x + big_r, x + body, body + x, big_r + x), "parallel"),
        Chain((y + big_r, y + ybody, ybody + y, big_r + y), "parallel"),
    )
    return ExampleSpec(5, {"n": n, "p": p}, ns, (big_r, _power(xn + y, p) + xn), chains)


def example(number: int, **params) -> ExampleSpec:
    gens = {1: example1, 2: example2, 3: example3, 4: example4, 5: example5}
    if number not in gens:
        raise ValueError("examples are numbered 1 to 5")
    return gens[number](**params)
