# coding: utf-8

# # Null sequences and completion
#
# A null sequence `R` may be inserted or deleted anywhere.  Equivalence
# modulo `R` is decidable when the system is complete and perfect.

from thue.completion import classify_all, complete, minimize, verify_epsilon_theorems
from thue.corpus import example2, example5
from thue.nullseq import check_complete, check_perfect_bounded, decide_problem_two

# ## A complete system
#
# With `R ≡ abbcab`, every symbol `z` satisfies `zR ∥ Rz`.

spec = example2()
ns = spec.ns
print(check_complete(ns).ok)
out = decide_problem_two(ns.word("abbcabc"), ns.word("c"), ns)
print(out.verdict.value)
print("\n".join(out.witness.describe(ns.eqs, null=ns.r)))

# Perfection can be checked exhaustively up to a length.

k = example5(2, 2).ns
print(check_perfect_bounded(k, len(k.r) + 3).ok)

# ## Completion
#
# Starting from a single null sequence, completion adds every equation
# forced by overlaps until nothing new appears.  `γ` collects the null
# sequences, `δ` the equations, and `ε` is a minimal generating subset.

state = complete("xxyxx")
print(sorted(state.alphabet.format(w) for w in state.gamma))
ms = minimize(state)
print([(state.alphabet.format(e.lhs), state.alphabet.format(e.rhs)) for e in ms.epsilon])
print(verify_epsilon_theorems(ms, state).ok)

# ## Insertion overlaps
#
# Two insertions that overlap fall into one of eight shapes, each with a
# checked conclusion.

census = classify_all(complete("xyx"))
print(census.total, dict(census.counts))
