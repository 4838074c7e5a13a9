"""Steinberg words over a group ring: relations, w-elements, PD forms.

The Steinberg group is generated by symbols x(i,j; lam) for i != j and a
group-ring coefficient lam, mapping to the elementary matrix I + lam*E_ij.
Its defining relations become matrix identities under that map, so every
relator word lies in the kernel K2.  The w-elements

    w(i,j; g) = x(i,j; +g) x(j,i; -g^-1) x(i,j; +g)

evaluate to PD matrices: a permutation swapping i,j times a diagonal with
entries +-g.  These are the terminal shapes of the slide-word bookkeeping.
"""

from whdetect.catalog import dicyclic
from whdetect.coset import realize_presentation
from whdetect.steinberg import (
    GroupRingElement,
    evaluate,
    k2_membership,
    parse_steinberg_word,
    pd_decompose,
    st_commutator,
    symbol,
    w_element,
)

G = realize_presentation(dicyclic(2), 1000)  # quaternion group Q8
a, x = G.generator_images
ga = GroupRingElement.of_element(G, a)
gx = GroupRingElement.of_element(G, x)

# Relation (3): [x(1,2; a), x(2,3; x)] = x(1,3; a*x)
lhs = st_commutator(symbol(1, 2, ga), symbol(2, 3, gx))
rhs = symbol(1, 3, ga * gx)
print("chained commutator relation as 3x3 matrices:")
print(evaluate(lhs, 3, G).display())
assert evaluate(lhs, 3, G).entries == evaluate(rhs, 3, G).entries
rel = lhs * rhs.inverse()
print(f"relator word in K2: {k2_membership(rel, 3, G)}\n")

# A w-element and its PD decomposition
w = w_element(1, 2, G, a, 1)
M = evaluate(w, 2, G)
print("w(1,2; a) evaluates to:")
print(M.display())
pd = pd_decompose(M)
print(f"PD form: perm {pd.perm}, diagonal {pd.diagonal}\n")

# The same word from its text format
parsed = parse_steinberg_word("x(1,2;+a) x(2,1;-a^-1) x(1,2;+a)", G)
assert evaluate(parsed, 2, G).entries == M.entries
print("text form 'x(1,2;+a) x(2,1;-a^-1) x(1,2;+a)' parses to the same matrix")
