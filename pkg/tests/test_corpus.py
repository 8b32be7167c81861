import pytest

from thue.core import borders
from thue.corpus import (
    Chain,
    chain_derivation,
    example,
    example1,
    example2,
    example3,
    example4,
    example5,
)
from thue.nullseq import check_complete, check_perfect_bounded, check_perfect_syntactic
from thue.rewrite import DerivationError, decide_fixed_length


def fmt_eqs(spec):
    f = spec.alphabet.format
    return [(f(e.lhs), f(e.rhs)) for e in spec.ns.eqs]


def expand(n, k=0):
    """Direct recursive expansion of X_k for example 1 (oracle)."""
    r = len(n)
    if k == r:
        return ["x"]
    inner = expand(n, k + 1)
    y = ["y"] if r == 1 else [f"y{k + 1}"]
    return (inner + y) * n[k] + inner


def test_example1_single_level():
    spec = example1([1])
    assert spec.alphabet.format(spec.r) == "xyx"
    assert fmt_eqs(spec) == [("xy", "yx")]
    spec = example1([2])
    assert spec.alphabet.format(spec.r) == "xyxyx"
    assert fmt_eqs(spec) == [("xy", "yx")]


def test_example1_two_levels():
    spec = example1([1, 1])
    assert spec.alphabet.format(spec.r).split() == expand([1, 1])
    assert len(spec.ns.eqs) == 2
    x1 = spec.extra["X"][1]
    assert spec.alphabet.format(x1) == "x y2 x"


@pytest.mark.parametrize("n", [[1], [2], [1, 1], [1, 2], [2, 1], [2, 2]])
def test_example1_matches_expansion_and_closed_forms(n):
    spec = example1(n)
    assert spec.alphabet.format(spec.r, sep=" ").split() == expand(n)
    assert spec.check()


def test_example1_extra_symbols_commute_with_r():
    spec = example1([1], extra=["d"])
    f = spec.alphabet.format
    assert ("xyxd", "dxyx") in fmt_eqs(spec)
    assert check_perfect_syntactic(spec.ns)
    assert f(spec.extra["base"].equations[0].lhs) == "xy"


def test_example1_ladder():
    spec = example1([1, 2])
    lhs, rhs = spec.extra["ladder"](0, 2)
    assert decide_fixed_length(lhs, rhs, spec.ns.eqs).equivalent
    with pytest.raises(ValueError):
        spec.extra["ladder"](2, 1)


def test_example1_rejects_bad_parameters():
    with pytest.raises(ValueError):
        example1([])
    with pytest.raises(ValueError):
        example1([0])


def test_example2():
    spec = example2()
    assert spec.alphabet.format(spec.r) == "abbcab"
    assert fmt_eqs(spec) == [("abbc", "bcab"), ("abbca", "cabab")]
    assert [spec.alphabet.format(b) for b in borders(spec.r)] == ["ab"]
    for chain in spec.chains:
        d = chain_derivation(chain, spec.ns.eqs)
        assert len(d) == len(chain.words) - 1
        assert d.start == (chain.words[0][0],) + spec.r and d.end == spec.r + (chain.words[0][0],)


def test_example3_default():
    spec = example3()
    f = spec.alphabet.format
    assert f(spec.extra["U"]) == "aca"
    assert f(spec.extra["ABA"]) == "acaacaaca"
    assert f(spec.extra["B"]) == "caacaac"
    assert f(spec.extra["X"]) == "ca" and f(spec.extra["Y"]) == "ac"
    assert f(spec.r) == "a" + "caacaac" + "a" + "caacaac" + "a"
    assert fmt_eqs(spec) == [("ac", "ca")]
    assert check_complete(spec.ns).ok


def test_example3_rejects_overlapping_words():
    with pytest.raises(ValueError):
        example3("ab", "ba")
    with pytest.raises(ValueError):
        example3(n=2)
    with pytest.raises(ValueError):
        example3("a", "a")


@pytest.mark.parametrize("n, r", [(1, "xyx"), (2, "xxyxx"), (3, "xxxyxxx")])
def test_example4(n, r):
    spec = example4(n)
    assert spec.alphabet.format(spec.r) == r
    assert fmt_eqs(spec) == [("xy", "yx")]
    derived = spec.extra["derived"].equations[0]
    assert decide_fixed_length(derived.lhs, derived.rhs, spec.ns.eqs).equivalent
    assert check_complete(spec.ns).ok


def test_example5():
    spec = example5(2, 2)
    assert spec.alphabet.format(spec.r) == "xxyxxyxx"
    assert fmt_eqs(spec) == [("xxy", "yxx"), ("yyx", "xyy")]
    assert spec.check()
    assert check_complete(spec.ns).ok
    assert check_perfect_bounded(spec.ns, len(spec.r) + 2).ok
    for chain in spec.chains:
        assert chain.relation == "parallel"
        chain_derivation(chain, spec.ns.eqs).replay(spec.ns.eqs)
    with pytest.raises(ValueError):
        example5(1, 2)


def test_chain_derivation_rejects_broken_chains():
    spec = example2()
    w = spec.chains[0].words
    with pytest.raises(DerivationError):
        chain_derivation(Chain((w[0], w[2])), spec.ns.eqs)


def test_example_dispatch():
    assert example(4, n=2).r == example4(2).r
    with pytest.raises(ValueError):
        example(6)


@pytest.mark.parametrize("spec", [example1([1]), example1([2, 1]), example2(), example3(),
                                  example4(2), example5(2, 2)], ids=lambda s: str(s.example))
def test_every_example_is_complete(spec):
    assert check_complete(spec.ns).ok
