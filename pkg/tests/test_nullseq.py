import pytest
from hypothesis import given, settings, strategies as st

from thue.core import Alphabet
from thue.corpus import example2, example4, example5
from thue.nullseq import (
    EMPTY,
    IrreducibleSystem,
    NullSystem,
    check_complete,
    check_perfect_bounded,
    check_perfect_syntactic,
    decide_problem_two,
    irreducible_system,
    overlap_equation,
    parallel,
    similar_null,
)
from thue.rewrite import EquationSystem, FragmentError, Verdict, decide_bounded

import oracles


def ex2():
    return example2().ns


def test_null_system_requires_permuting_equations():
    with pytest.raises(ValueError):
        NullSystem.build("axy", "a", [("ax", "ay")])
    with pytest.raises(ValueError):
        NullSystem.build("ab", "", [])
    ns = NullSystem.build("xy", "xyx", [("xy", "yx")])
    assert ns.r == (0, 1, 0) and ns.fmt(ns.word("yx")) == "yx"


def test_similar_null_examples():
    r = (0, 1)
    moves = similar_null((2, 0, 1, 2, 3), r)
    deletes = [m for m in moves if m.action == "delete"]
    assert [(m.word, m.position) for m in deletes] == [((2, 2, 3), 1)]
    assert len([m for m in moves if m.action == "insert"]) == 6
    boundary = similar_null((0, 1), r)
    assert boundary[0].boundary and boundary[0].word == ()
    none = similar_null((0, 0), (1,))
    assert all(m.action == "insert" for m in none) and len(none) == 3
    assert [m.action for m in similar_null((0, 1), r, max_length=3)] == ["delete"]


@given(st.lists(st.integers(0, 1), max_size=7), st.lists(st.integers(0, 1), min_size=1, max_size=3))
def test_similar_null_matches_oracle(w, r):
    w, r = tuple(w), tuple(r)
    got = {(m.word, m.action) for m in similar_null(w, r)}
    want = {(w[:i] + w[i + len(r):], "delete") for i in oracles.occurrences(w, r)}
    want |= {(w[:i] + r + w[i:], "insert") for i in range(len(w) + 1)}
    assert got == want


def test_parallel_examples():
    ns = NullSystem.build("xy", "xyx", [("xy", "yx")])
    assert parallel(ns.word("xy"), ns.word("yx"), ns).equivalent
    assert parallel(ns.word("xy"), ns.word("xy"), ns).equivalent
    out = parallel(ns.word("xxy"), ns.word("xyy"), ns)
    assert out.verdict is Verdict.NOT_EQUIVALENT and "counts" in out.note


def test_check_complete_examples():
    assert check_complete(ex2()).ok
    assert check_complete(example5(2, 2).ns).ok
    empty = NullSystem.build("ab", "ab", [])
    rep = check_complete(empty)
    assert not rep and 0 in rep.failing


def test_check_complete_witnesses_replay():
    ns = ex2()
    for z, out in check_complete(ns).results.items():
        out.witness.replay(ns.eqs)
        assert out.witness.start == (z,) + ns.r and out.witness.end == ns.r + (z,)


def test_check_perfect_bounded_examples():
    ns = example5(2, 2).ns
    assert check_perfect_bounded(ns, 9).ok
    assert check_perfect_bounded(NullSystem.build("ab", "ab", []), 5).ok
    with pytest.raises(ValueError):
        check_perfect_bounded(ns, len(ns.r))


def test_check_perfect_bounded_finds_counterexample():
    # R·xy ∥ R·yx through axy = ayx, yet xy and yx are not parallel
    ns = NullSystem.build("axy", "a", [("axy", "ayx")])
    rep = check_perfect_bounded(ns, 3)
    assert not rep.ok
    a, b = rep.counterexample
    assert {ns.fmt(a), ns.fmt(b)} == {"xy", "yx"}


def _perfect_oracle(ns, max_len):
    eqs = [(e.lhs, e.rhs) for e in ns.eqs]
    k = len(ns.alphabet)
    for a in oracles.all_words(k, max_len - len(ns.r)):
        for w in oracles.bfs_closure(ns.r + a, eqs):
            if w[: len(ns.r)] == ns.r and w[len(ns.r):] not in oracles.bfs_closure(a, eqs):
                return False
    return True


@settings(max_examples=40, deadline=None)
@given(st.lists(st.text("ab", min_size=2, max_size=3), max_size=2),
       st.text("ab", min_size=1, max_size=2))
def test_check_perfect_bounded_matches_oracle(lhs_words, r):
    # reversing a side keeps every symbol count
    eq_pairs = [(w, w[::-1]) for w in lhs_words if w != w[::-1]]
    ns = NullSystem.build("ab", r, eq_pairs)
    bound = len(ns.r) + 3
    assert check_perfect_bounded(ns, bound).ok == _perfect_oracle(ns, bound)


def test_check_perfect_syntactic():
    assert check_perfect_syntactic(NullSystem.build("ab", "aba", [("ab", "ba")]))
    assert check_perfect_syntactic(example5(2, 2).ns) is None


def test_irreducible_system_of_r_reaches_empty():
    ns = example4(2).ns
    irr = irreducible_system(ns.r, ns)
    assert irr.reaches_empty and irr.terminal == frozenset({EMPTY})
    assert irr.validate(ns)


def test_irreducible_system_two_layers():
    ns = example4(2).ns
    irr = irreducible_system(ns.word("x") + ns.r, ns)
    assert len(irr.layers) == 2
    assert irr.terminal == frozenset({ns.word("x")})
    assert irr.validate(ns)


def test_irreducible_system_r_free_word():
    ns = ex2()
    irr = irreducible_system(ns.word("cc"), ns)
    assert irr.layers == (frozenset({ns.word("cc")}),)


def test_irreducible_system_validate_catches_bad_layers():
    ns = example4(2).ns
    bad = IrreducibleSystem(ns.r, (frozenset({ns.word("xy"), ns.word("xx")}),))
    with pytest.raises(AssertionError):
        bad.validate(ns)


def test_irreducible_system_refuses_incomplete_system():
    ns = NullSystem.build("ab", "ab", [])
    with pytest.raises(FragmentError):
        irreducible_system(ns.word("aab"), ns)


def test_decide_problem_two_examples():
    ns = ex2()
    out = decide_problem_two(ns.word("abbcabc"), ns.word("c"), ns)
    assert out.equivalent
    out.witness.replay(ns.eqs, null=ns.r)
    assert decide_problem_two(ns.word("ab"), ns.word("ab"), ns).equivalent
    assert decide_problem_two(ns.word("a"), ns.word("b"), ns).verdict is Verdict.NOT_EQUIVALENT


def test_decide_problem_two_agrees_with_bounded_search():
    ns = example4(1).ns  # R = xyx with xy = yx
    words = [w for w in oracles.all_words(2, 5)]
    for p in words[:20]:
        for q in words[:20]:
            exact = decide_problem_two(p, q, ns)
            if exact.equivalent:
                exact.witness.replay(ns.eqs, null=ns.r)
            bounded = decide_bounded(p, q, ns.eqs, max_length=8, null=ns.r)
            if bounded.verdict is not Verdict.UNKNOWN:
                assert bounded.equivalent == exact.equivalent


def test_problem_two_equivalence_is_symbol_count_mod_r():
    # with xy = yx and R = xyx, words are equivalent iff their x and y counts
    # agree after removing as many copies of (2 x, 1 y) as possible
    ns = example4(1).ns

    def residue(w):
        x, y = w.count(0), w.count(1)
        k = min(x // 2, y)
        return x - 2 * k, y - k

    words = list(oracles.all_words(2, 6))
    for p in words[::7]:
        for q in words[::11]:
            assert decide_problem_two(p, q, ns).equivalent == (residue(p) == residue(q))


def test_overlap_equation_examples():
    al = Alphabet("abc")
    eqs = overlap_equation(al.parse("abbcab"))
    assert [(al.format(e.lhs), al.format(e.rhs)) for e in eqs] == [("abbc", "bcab")]
    xy = Alphabet("xy")
    eqs = overlap_equation(xy.parse("xxyxx"))
    assert [(xy.format(e.lhs), xy.format(e.rhs)) for e in eqs] == [("xxy", "yxx"), ("xxyx", "xyxx")]
    assert overlap_equation(xy.parse("xy")) == []
    with pytest.raises(ValueError):
        overlap_equation((0,))


def test_null_system_classes_are_cached():
    ns = ex2()
    assert ns.classes() is ns.classes()
    assert isinstance(ns.eqs, EquationSystem)
