import pytest
from hypothesis import given, strategies as st

from thue.core import (
    Alphabet,
    ChainStage,
    OverlapChain,
    OverlapWitness,
    SelfOverlap,
    border_lengths,
    borders,
    commute_root,
    contains,
    failure_function,
    find_occurrences,
    intermediate_overlaps,
    max_self_overlap,
    minimal_extension,
    overlap_chain,
    overlap_factorization,
    power_index,
    primitive_root,
)

import oracles

binary = st.text(alphabet="ab", min_size=1, max_size=14)


# -- alphabets ---------------------------------------------------------------


def test_alphabet_parse_and_format():
    ab = Alphabet("abc")
    assert ab.parse("abbcab") == (0, 1, 1, 2, 0, 1)
    assert ab.parse("a b  c") == (0, 1, 2)
    assert ab.format((2, 0)) == "ca"
    multi = Alphabet(["x", "y1", "y2"])
    assert not multi.single_char
    assert multi.parse("x y2 x") == (0, 2, 0)
    assert multi.format((0, 2, 0)) == "x y2 x"


def test_alphabet_rejects_bad_input():
    with pytest.raises(ValueError):
        Alphabet([])
    with pytest.raises(ValueError):
        Alphabet(["a", "a"])
    with pytest.raises(ValueError):
        Alphabet("ab").parse("abc")
    with pytest.raises(ValueError):
        Alphabet(["x", "y1"]).parse("xy1")
    with pytest.raises(ValueError):
        Alphabet("ab").parse((0, 2))


def test_alphabet_from_text_sorts():
    assert Alphabet.from_text("cab", "d").symbols == ("a", "b", "c", "d")


def test_alphabet_equality_and_hash():
    assert Alphabet("ab") == Alphabet(["a", "b"])
    assert len({Alphabet("ab"), Alphabet("a b")}) == 1
    assert Alphabet("ab") != Alphabet("ba")


# -- occurrences -------------------------------------------------------------


def test_find_occurrences_examples():
    assert find_occurrences("abbcab", "ab") == [0, 4]
    assert find_occurrences("aaa", "aa") == [0, 1]
    assert find_occurrences("abc", "d") == []
    assert find_occurrences("a", "ab") == []
    with pytest.raises(ValueError):
        find_occurrences("abc", "")


@given(binary, st.text(alphabet="ab", min_size=1, max_size=4))
def test_find_occurrences_matches_naive_scan(h, n):
    assert find_occurrences(h, n) == oracles.occurrences(h, n)
    assert contains(h, n) == (n in h)


@given(binary)
def test_failure_function_is_longest_border_of_each_prefix(w):
    f = failure_function(w)
    for i in range(len(w)):
        bs = oracles.borders(w[: i + 1])
        assert f[i] == (len(bs[0]) if bs else 0)


# -- borders and roots -------------------------------------------------------


def test_borders_examples():
    assert borders("abbcab") == ["ab"]
    assert borders("aaaa") == ["aaa", "aa", "a"]
    assert borders("abc") == []
    assert border_lengths("") == []
    with pytest.raises(ValueError):
        borders("")


def test_borders_work_on_tuples():
    assert borders((0, 1, 0)) == [(0,)]


def test_primitive_root_examples():
    r = primitive_root("ababab")
    assert (r.root, r.exponent) == ("ab", 3)
    assert (primitive_root("a").root, primitive_root("a").exponent) == ("a", 1)
    assert primitive_root("aabaa").exponent == 1
    assert primitive_root("ababab").expand() == "ababab"
    with pytest.raises(ValueError):
        primitive_root("")


def test_concatenation_commuting_with_factor_shares_root():
    x, y = "abab" + "ab", "ab"
    assert x + y == y + x
    assert primitive_root(x).root == primitive_root(y).root == "ab"


def test_commute_root_examples():
    rx, ry = commute_root("abab", "ab")
    assert (rx.root, rx.exponent) == ("ab", 2)
    assert (ry.root, ry.exponent) == ("ab", 1)
    assert commute_root("a", "b") is None
    assert commute_root("aa", "aaa")[0].root == "a"
    with pytest.raises(ValueError):
        commute_root("", "a")


@given(binary, binary)
def test_commute_root_agrees_with_concatenation(x, y):
    res = commute_root(x, y)
    assert (res is not None) == (x + y == y + x)
    if res is not None:
        rx, ry = res
        assert rx.root == ry.root
        assert rx.root * rx.exponent == x and ry.root * ry.exponent == y
        assert oracles.is_primitive(rx.root)


# -- self-overlaps -----------------------------------------------------------


def test_max_self_overlap_ababa():
    so = max_self_overlap("ababa")
    assert (so.u, so.c, so.d) == ("aba", "ab", "ba")
    assert (so.alpha, so.beta, so.n) == ("a", "b", 2)


def test_max_self_overlap_abbcab():
    so = max_self_overlap("abbcab")
    assert (so.u, so.c, so.d) == ("ab", "abbc", "bcab")
    assert (so.alpha, so.beta, so.n) == ("ab", "bc", 1)


def test_max_self_overlap_absent():
    assert max_self_overlap("ab") is None
    assert max_self_overlap("a") is None


def test_self_overlap_rejects_inconsistent_parts():
    with pytest.raises(ValueError):
        SelfOverlap("ab", "a", "ab")
    with pytest.raises(ValueError):
        OverlapWitness("", "a", "b")


@given(binary)
def test_self_overlap_decomposition(s):
    so = max_self_overlap(s)
    bs = oracles.borders(s)
    if not bs:
        assert so is None
        return
    assert so.u == bs[0]
    assert so.c + so.u == s == so.u + so.d
    assert so.c == so.alpha + so.beta and so.d == so.beta + so.alpha
    assert (so.alpha + so.beta) * so.n + so.alpha == s
    assert len(so.alpha) < len(so.c)
    if so.alpha:
        # αβ and βα differ, otherwise U would not be the longest border
        assert so.alpha + so.beta != so.beta + so.alpha
    # with α non-empty, βαβ and αβα each hold a single αβ and a single βα
    if so.alpha:
        a, b = so.alpha, so.beta
        for host in (b + a + b, a + b + a):
            assert len(oracles.occurrences(host, a + b)) == 1
            assert len(oracles.occurrences(host, b + a)) == 1


# -- overlap chains ----------------------------------------------------------


def test_overlap_chain_aabaa():
    chain = overlap_chain("aabaa")
    assert list(chain) == [ChainStage("aa", "aab", "baa"), ChainStage("a", "a", "a")]
    assert chain.validate()


def test_overlap_chain_examples():
    assert len(overlap_chain("abc")) == 0
    assert [st_.u for st_ in overlap_chain("ababa")] == ["aba", "a"]
    with pytest.raises(ValueError):
        overlap_chain("")


def test_overlap_chain_validate_catches_tampering():
    bad = OverlapChain("aabaa", (ChainStage("a", "aaba", "abaa"),))
    with pytest.raises(AssertionError):
        bad.validate()


@given(binary)
def test_overlap_chain_follows_longest_borders(w):
    chain = overlap_chain(w)
    chain.validate()
    u = w
    for stage in chain:
        assert stage.u == oracles.borders(u)[0]
        assert stage.c + stage.u == u == stage.u + stage.d
        u = stage.u
    assert oracles.borders(u) == []


@given(binary)
def test_overlap_factorization_tracks_chain(w):
    facts = overlap_factorization(w)
    assert [f.u for f in facts] == [s.u for s in overlap_chain(w)]


# -- intermediate overlaps -----------------------------------------------------


def test_intermediate_overlaps_ababa():
    out = intermediate_overlaps("ababa")
    assert [(o.c, o.u, o.d) for o in out] == [("ab", "aba", "ba")]


def test_intermediate_overlaps_unary():
    assert [o.u for o in intermediate_overlaps("aaaa")] == ["aaa", "aa", "a"]
    so = max_self_overlap("aaaa")
    assert so.alpha == "" and so.beta == "a"


def test_intermediate_overlaps_needs_a_border():
    with pytest.raises(ValueError):
        intermediate_overlaps("ab")


def test_power_index():
    so = max_self_overlap("ababa")
    assert power_index(so, "a") == 0
    assert power_index(so, "aba") == 1
    assert power_index(so, "ababa") is None
    assert power_index(so, "ab") is None


# -- minimal extension ---------------------------------------------------------


@pytest.mark.parametrize("m, n, x, y, t", [
    ("aba", "a", "ab", "ba", "ababa"),
    ("ab", "", "ab", "ab", "abab"),
    ("aa", "a", "a", "a", "aaa"),
])
def test_minimal_extension_examples(m, n, x, y, t):
    ext = minimal_extension(m)
    assert (ext.x, ext.y, ext.t) == (x, y, t)
    assert ext.t == ext.x + n + ext.y
    assert borders(ext.t)[0] == m


def _shortest_extension(m, symbols="ab"):
    for j in range(1, len(m) + 1):
        for tail in oracles.all_words(len(symbols), j, j):
            t = m + "".join(symbols[i] for i in tail)
            bs = oracles.borders(t)
            if bs and bs[0] == m:
                return t
    return None


@given(st.text(alphabet="ab", min_size=1, max_size=7))
def test_minimal_extension_is_shortest(m):
    ext = minimal_extension(m)
    assert ext.t == ext.x + m == m + ext.y
    assert len(ext.t) == len(_shortest_extension(m))
