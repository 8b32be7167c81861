"""Alphabets, words and combinatorics on words.

Words inside equation systems are tuples of symbol indices into an
:class:`Alphabet`.  The combinatorial helpers in this module only rely on
slicing, concatenation and equality, so they accept any sequence type and
return slices of the same type; ``borders("abbcab")`` works as well as
``borders((0, 1, 1, 2, 0, 1))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple, Optional, Sequence, TypeVar

Word = tuple  # tuple[int, ...]
S = TypeVar("S", bound=Sequence)


class Alphabet:
    """An ordered, immutable list of distinct symbol names."""

    __slots__ = ("_symbols", "_index")

    def __init__(self, symbols):
        if isinstance(symbols, str):
            symbols = symbols.split() if any(ch.isspace() for ch in symbols) else list(symbols)
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("an alphabet needs at least one symbol")
        for name in symbols:
            if not isinstance(name, str) or not name or any(ch.isspace() for ch in name):
                raise ValueError(f"invalid symbol name {name!r}")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbol names in {symbols}")
        if len(symbols) > 255:
            raise ValueError("at most 255 symbols are supported")
        self._symbols = symbols
        self._index = {name: i for i, name in enumerate(symbols)}

    @property
    def symbols(self):
        return self._symbols

    def __len__(self):
        return len(self._symbols)

    def __iter__(self):
        return iter(range(len(self._symbols)))

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self._symbols == other._symbols

    def __hash__(self):
        return hash(self._symbols)

    def __repr__(self):
        return f"Alphabet({' '.join(self._symbols)!r})"

    @property
    def single_char(self):
        return all(len(name) == 1 for name in self._symbols)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown symbol {name!r}") from None

    def name(self, index):
        return self._symbols[index]

    def parse(self, text) -> Word:
        """Parse a word literal.

        Symbols are whitespace separated (``"X1 Y1 X1"``).  When every symbol
        name is a single character the compact form ``"abbcab"`` is accepted
        too.  A tuple of indices is validated and passed through.
        """
        if isinstance(text, tuple):
            for i in text:
                if not isinstance(i, int) or not 0 <= i < len(self._symbols):
                    raise ValueError(f"symbol index {i!r} outside the alphabet")
            return text
        tokens = text.split()
        out = []
        for tok in tokens:
            if tok in self._index:
                out.append(self._index[tok])
            elif self.single_char:
                out.extend(self.index(ch) for ch in tok)
            else:
                raise ValueError(f"unknown symbol {tok!r}")
        return tuple(out)

    def format(self, word, sep=None) -> str:
        if sep is None:
            sep = "" if self.single_char else " "
        return sep.join(self._symbols[i] for i in word)

    def contains(self, word) -> bool:
        return all(isinstance(i, int) and 0 <= i < len(self._symbols) for i in word)

    @classmethod
    def from_text(cls, *texts):
        """Alphabet of the distinct characters of ``texts`` in sorted order."""
        return cls(sorted(set("".join(texts))))


@dataclass(frozen=True)
class OverlapWitness:
    """``C·U`` is the first source word and ``U·D`` the second."""

    c: Sequence
    u: Sequence
    d: Sequence
    sources: tuple = (0, 0)

    def __post_init__(self):
        if not (len(self.c) and len(self.u) and len(self.d)):
            raise ValueError("overlap witness parts must be non-empty")

    @property
    def left(self):
        return self.c + self.u

    @property
    def right(self):
        return self.u + self.d


@dataclass(frozen=True)
class SelfOverlap(OverlapWitness):
    """Longest self-overlap of ``s`` with ``s ≡ (αβ)^n α``, ``C ≡ αβ``, ``D ≡ βα``."""

    alpha: Sequence = field(default=(), kw_only=True)
    beta: Sequence = field(default=(), kw_only=True)
    n: int = field(default=1, kw_only=True)

    def __post_init__(self):
        super().__post_init__()
        if self.left != self.right:
            raise ValueError("C·U and U·D must spell the same word")

    @property
    def word(self):
        return self.c + self.u


class ChainStage(NamedTuple):
    u: Sequence
    c: Sequence
    d: Sequence


@dataclass(frozen=True)
class OverlapChain:
    start: Sequence
    stages: tuple

    def __len__(self):
        return len(self.stages)

    def __iter__(self):
        return iter(self.stages)

    def validate(self):
        prev = self.start
        for stage in self.stages:
            if stage.c + stage.u != prev or stage.u + stage.d != prev:
                raise AssertionError(f"stage {stage} does not factor {prev!r}")
            if not borders(prev) or len(stage.u) != len(borders(prev)[0]):
                raise AssertionError(f"stage {stage} is not the longest border of {prev!r}")
            prev = stage.u
        if borders(prev):
            raise AssertionError(f"chain stops at {prev!r}, which still overlaps itself")
        return True


@dataclass(frozen=True)
class RootDecomposition:
    root: Sequence
    exponent: int

    def expand(self):
        return self.root * self.exponent


class Extension(NamedTuple):
    t: Sequence
    x: Sequence
    y: Sequence


def failure_function(w: Sequence) -> list:
    """``f[i]`` is the length of the longest proper border of ``w[:i+1]``."""
    f = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = f[k - 1]
        if w[i] == w[k]:
            k += 1
        f[i] = k
    return f


def find_occurrences(haystack: Sequence, needle: Sequence) -> list:
    """All start offsets of ``needle`` in ``haystack``, overlaps included."""
    if not len(needle):
        raise ValueError("needle must be non-empty")
    f = failure_function(needle)
    m = len(needle)
    out = []
    k = 0
    for i, sym in enumerate(haystack):
        while k and sym != needle[k]:
            k = f[k - 1]
        if sym == needle[k]:
            k += 1
        if k == m:
            out.append(i - m + 1)
            k = f[k - 1]
    return out


def contains(haystack: Sequence, needle: Sequence) -> bool:
    return len(needle) <= len(haystack) and bool(find_occurrences(haystack, needle))


def border_lengths(w: Sequence) -> list:
    if not len(w):
        return []
    f = failure_function(w)
    out = []
    k = f[-1]
    while k:
        out.append(k)
        k = f[k - 1]
    return out


def borders(w: S) -> list:
    """Every non-empty proper prefix of ``w`` that is also a suffix, longest first."""
    if not len(w):
        raise ValueError("borders of the empty word are undefined")
    return [w[:k] for k in border_lengths(w)]


def primitive_root(w: S) -> RootDecomposition:
    """The primitive ``θ`` and exponent ``n`` with ``w ≡ θ^n``."""
    n = len(w)
    if not n:
        raise ValueError("the empty word has no primitive root")
    period = n - failure_function(w)[-1]
    if n % period:
        return RootDecomposition(w, 1)
    return RootDecomposition(w[:period], n // period)


def commute_root(x: S, y: S) -> Optional[tuple]:
    """Shared root of two commuting words, or ``None`` when ``xy ≢ yx``.

    Follows the descent ``X ≡ YZ  ⇒  YZ ≡ ZY`` until both parts have equal
    length; the common part is then a (not necessarily primitive) root,
    which is reduced to its primitive root at the end.
    """
    if not len(x) or not len(y):
        raise ValueError("both words must be non-empty")
    if x + y != y + x:
        return None
    a, b = x, y
    while len(a) != len(b):
        if len(a) < len(b):
            a, b = b, a
        # a ≡ b·z with b·z ≡ z·b
        a = a[len(b):]
    theta = primitive_root(a).root
    k = len(theta)
    assert k and gcd(len(x), len(y)) % k == 0
    return RootDecomposition(theta, len(x) // k), RootDecomposition(theta, len(y) // k)


def max_self_overlap(s: S) -> Optional[SelfOverlap]:
    """Longest border of ``s`` with the ``(αβ)^n α`` decomposition, or ``None``."""
    if len(s) < 2:
        return None
    lengths = border_lengths(s)
    if not lengths:
        return None
    k = lengths[0]
    c, u, d = s[: len(s) - k], s[:k], s[k:]
    period = len(c)
    n = len(s) // period
    alpha = s[n * period:]
    beta = c[len(alpha):]
    if len(alpha):
        assert alpha + beta != beta + alpha, "αβ ≡ βα would contradict maximality of U"
    return SelfOverlap(c, u, d, alpha=alpha, beta=beta, n=n)


def overlap_chain(u0: S) -> OverlapChain:
    """Repeatedly factor ``U_{p-1} ≡ C_p U_p ≡ U_p D_p`` with ``U_p`` maximal."""
    if not len(u0):
        raise ValueError("overlap chain of the empty word is undefined")
    stages = []
    u = u0
    while True:
        lengths = border_lengths(u)
        if not lengths:
            break
        k = lengths[0]
        stage = ChainStage(u[:k], u[: len(u) - k], u[k:])
        assert stage.c + stage.u == u and stage.u + stage.d == u
        stages.append(stage)
        u = stage.u
    return OverlapChain(u0, tuple(stages))


def overlap_factorization(s: S) -> list:
    """Self-overlap decomposition of every word along the overlap chain of ``s``.

    Stage ``q`` decomposes ``U_{q-1}`` (with ``U_0 = s``) as
    ``α_q (β_q α_q)^{n_q}``; the list stops at the first border-free word.
    """
    out = []
    u = s
    while True:
        so = max_self_overlap(u)
        if so is None:
            return out
        out.append(so)
        u = so.u


def intermediate_overlaps(s: S) -> list:
    """Self-overlaps ``s ≡ P N ≡ N Q`` whose border ``N`` is at least ``|αβ|`` long.

    Each such ``N`` is checked to be ``α(βα)^m`` for some ``0 ≤ m < n``.
    Longest first.
    """
    so = max_self_overlap(s)
    if so is None:
        raise ValueError("word has no non-empty border")
    period = len(so.c)
    out = []
    for k in border_lengths(s):
        if k < period:
            break
        m = power_index(so, s[:k])
        if m is None:
            raise AssertionError(f"border {s[:k]!r} is not of the form α(βα)^m")
        out.append(OverlapWitness(s[: len(s) - k], s[:k], s[k:]))
    return out


def power_index(so: SelfOverlap, word: Sequence) -> Optional[int]:
    """The ``m`` with ``word ≡ α(βα)^m ≡ (αβ)^m α``, if ``0 ≤ m < n`` exists."""
    rest = len(word) - len(so.alpha)
    period = len(so.c)
    if rest < 0 or rest % period:
        return None
    m = rest // period
    if m >= so.n:
        return None
    if word != so.alpha + (so.beta + so.alpha) * m or word != so.c * m + so.alpha:
        return None
    return m


def minimal_extension(m: S) -> Extension:
    """Shortest ``T ≡ XM ≡ MY`` whose longest border is ``M``.

    With ``N`` the longest border of ``M`` and ``M ≡ XN ≡ NY``, ``T ≡ XNY``.
    """
    if not len(m):
        raise ValueError("minimal extension of the empty word is undefined")
    lengths = border_lengths(m)
    k = lengths[0] if lengths else 0
    x = m[: len(m) - k]
    y = m[k:]
    t = x + m
    assert t == m + y
    assert border_lengths(t)[0] == len(m)
    return Extension(t, x, y)
