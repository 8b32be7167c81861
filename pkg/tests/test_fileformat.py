import json

import pytest
from hypothesis import given, strategies as st

from thue.corpus import example1, example2, example5
from thue.fileformat import (
    FormatError,
    derivation_from_json,
    derivation_to_json,
    dumps,
    format_system,
    load_system,
    outcome_to_json,
    parse_system,
    system_from_json,
    system_to_json,
)
from thue.nullseq import decide_problem_two
from thue.rewrite import EquationSystem

EX2 = """\
# example 2
alphabet: a b c
null: abbcab
abbc <-> bcab
abbca <-> cabab   # second equation
"""


def test_parse_example_file():
    sf = parse_system(EX2)
    assert sf.system.mode == "thue"
    assert sf.alphabet.format(sf.null) == "abbcab"
    assert len(sf.system) == 2
    assert sf.null_system().r == example2().r


def test_parse_semi_mode_from_arrows():
    sf = parse_system("alphabet: a b c\nab -> c\n")
    assert sf.system.mode == "semi" and sf.null is None
    with pytest.raises(ValueError):
        sf.null_system()


def test_parse_multi_character_symbols():
    sf = parse_system("alphabet: x y1 y2\nx y1 <-> y1 x\n")
    assert sf.system.equations[0].lhs == (0, 1)


@pytest.mark.parametrize("text, line", [
    ("ab <-> ba\n", 1),
    ("alphabet: a b\nab <-> ba\nab -> a\n", None),
    ("alphabet: a b\nmode: semi\nab <-> ba\n", None),
    ("alphabet: a b\nmode: fast\n", 2),
    ("alphabet: a b\nab = ba\n", 2),
    ("alphabet: a b\nac <-> ca\n", 2),
    ("alphabet: a b\nalphabet: a\n", 2),
    ("mode: thue\n", None),
    ("alphabet: a b\nnull: c\n", 2),
    ("alphabet: a a\n", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(FormatError) as err:
        parse_system(text)
    assert err.value.line == line


def test_format_round_trip(tmp_path):
    spec = example1([1, 1], extra=["d"])
    text = format_system(spec.ns.eqs, spec.r, comment="nested")
    path = tmp_path / "ex1.txt"
    path.write_text(text)
    sf = load_system(path)
    assert sf.system == spec.ns.eqs and sf.null == spec.r
    assert format_system(sf.system, sf.null, comment="nested") == text


def test_json_round_trip_is_byte_stable():
    spec = example5(2, 2)
    data = system_to_json(spec.ns.eqs, spec.r)
    text = dumps(data)
    back = system_from_json(json.loads(text))
    assert back.system == spec.ns.eqs and back.null == spec.r
    assert dumps(system_to_json(back.system, back.null)) == text


def test_derivation_json_round_trip():
    ns = example2().ns
    out = decide_problem_two(ns.word("abbcabc"), ns.word("c"), ns)
    data = derivation_to_json(out.witness, ns.eqs, ns.r)
    assert data["steps"][0]["word"] == "c"
    back = derivation_from_json(json.loads(dumps(data)), ns.alphabet)
    assert back == out.witness
    full = outcome_to_json(out, ns.eqs, ns.r)
    assert full["verdict"] == "equivalent" and full["witness"] == data


@given(st.lists(st.tuples(st.text("abc", min_size=1, max_size=4),
                          st.text("abc", min_size=1, max_size=4)), max_size=4),
       st.sampled_from(["thue", "semi"]))
def test_text_format_round_trip(pairs, mode):
    system = EquationSystem.from_pairs("abc", pairs, mode)
    sf = parse_system(format_system(system))
    assert sf.system == system
