# coding: utf-8

# # Words and their overlaps
#
# Everything in the package rests on a few facts about single words:
# borders, primitive roots and the way a word overlaps itself.
# Words can be strings or tuples of symbol indices.

from thue.core import (
    borders,
    commute_root,
    intermediate_overlaps,
    max_self_overlap,
    minimal_extension,
    overlap_chain,
    primitive_root,
)

# ## Borders and roots
#
# A border is a proper prefix that is also a suffix.  `abbcab` has one.

print(borders("abbcab"))
print(borders("aaaa"))

# Every word is a power of a primitive root.

r = primitive_root("ababab")
print(r.root, r.exponent)

# Two words commute exactly when they are powers of the same root.

print(commute_root("abab", "ab"))
print(commute_root("ab", "ba"))

# ## Self-overlap
#
# With `U` the longest border, `S ≡ CU ≡ UD`, and `S` splits as
# `(αβ)^n α` with `C ≡ αβ` and `D ≡ βα`.

so = max_self_overlap("ababa")
print("C =", so.c, " U =", so.u, " D =", so.d)
print("alpha =", so.alpha, " beta =", so.beta, " n =", so.n)

# The shorter borders that are still at least one period long are the
# words `α(βα)^m` for smaller `m`.

for o in intermediate_overlaps("abababa"):
    print(o.c, o.u, o.d)

# Repeating the factorization on each border gives the overlap chain,
# which ends at a border-free word.

for stage in overlap_chain("aabaa"):
    print(stage)

# ## Minimal extension
#
# The shortest `T ≡ XM ≡ MY` whose longest border is `M` itself.

ext = minimal_extension("aba")
print(ext.x, ext.y, ext.t)
