# coding: utf-8

# # Deciding equivalence
#
# Three procedures cover the decidable fragments, and a bounded search
# covers the rest with an honest "unknown".

from thue.core import Alphabet
from thue.rewrite import (
    EquationSystem,
    check_non_overlapping,
    decide_bounded,
    decide_fixed_length,
    decide_reducing,
    reduce_to_normal_form,
)

# ## Fixed-length systems
#
# When every equation keeps the length, each class is finite and can be
# enumerated.  The answer comes with a derivation that replays.

xy = Alphabet("xy")
swap = EquationSystem.from_pairs(xy, [("xy", "yx")])
out = decide_fixed_length(xy.parse("xxy"), xy.parse("yxx"), swap)
print(out.verdict.value)
print("\n".join(out.witness.describe(swap)))

# ## Length-reducing systems
#
# If every rule shortens the word and no two left-hand sides overlap,
# every reduction order reaches the same normal form.

abc = Alphabet("abc")
rules = EquationSystem.from_pairs(abc, [("ab", "c")], mode="semi")
print(check_non_overlapping(rules.lhs_words()).ok)
for strategy in ("leftmost", "rightmost", "random"):
    nf, d = reduce_to_normal_form(abc.parse("ababab"), rules, strategy, seed=3)
    print(strategy, abc.format(nf), len(d))
print(decide_reducing(abc.parse("abab"), abc.parse("cc"), rules).verdict.value)

# An overlapping left-hand side breaks this: `aba → b` sends `ababa`
# to two different normal forms.

bad = EquationSystem.from_pairs(Alphabet("ab"), [("aba", "b")], mode="semi")
print(check_non_overlapping(bad.lhs_words()).describe())

# ## Everything else
#
# The bounded search explores both sides up to a length cap and a state
# budget.  It only answers "not equivalent" when the whole class fit.

growing = EquationSystem.from_pairs(Alphabet("ab"), [("a", "aa"), ("b", "bb")])
print(decide_bounded((0,), (1,), growing, max_length=6).verdict.value)
