"""Compute Wh1(pi; Gamma) two ways and walk the duality bookkeeping.

Route 1 (general): build the integer relation matrix of the quotient
Gamma[pi] / (twisted conjugation, identity coordinate) and read the
cokernel off a certified Smith normal form.

Route 2 (fast, Gamma = Z/2 trivial): the quotient is the Z/2-vector space
on the nontrivial conjugacy classes.  The class-inversion involution
induces the duality map; the detection quotient has dimension equal to the
number of inversion-swapped class pairs.
"""

from whdetect.analysis import conjugacy_classes
from whdetect.catalog import binary_polyhedral, cyclic, dicyclic
from whdetect.coset import realize_presentation
from whdetect.whitehead import (
    CoefficientSystem,
    detection_rank,
    involution_space,
    wh1_general,
    wh1_z2_fast,
)

for name, pres in [
    ("cyclic_5", cyclic(5)),
    ("dicyclic_8 (quaternion)", dicyclic(2)),
    ("dicyclic_12", dicyclic(3)),
    ("binary_icosahedral_120", binary_polyhedral(5)),
]:
    G = realize_presentation(pres, 10_000)
    prof = conjugacy_classes(G)
    fast = wh1_z2_fast(prof)
    general = wh1_general(G, CoefficientSystem.z2_trivial())
    assert fast.invariant_factors == general.invariant_factors
    sp = involution_space(prof)
    print(f"{name}: |pi| = {G.order}, {prof.n_classes} classes")
    print(f"  Wh1(pi; Z/2) = (Z/2)^{sp.dim}   [both routes agree]")
    print(f"  s = {prof.self_inverse_count} self-inverse classes, "
          f"p = {prof.paired_count} swapped pairs")
    print(f"  dim Z4 = s + p = {sp.z4_dim}, "
          f"detection rank = p = {detection_rank(prof)}\n")

# An integer coefficient system with a sign action:
from whdetect.whitehead import wh1_general as wh1  # noqa: E402

G = realize_presentation(cyclic(2), 100)
res = wh1(G, CoefficientSystem((0,), (((-1,),),)))
print(f"Gamma = Z with sign action over Z/2: invariant factors "
      f"{res.invariant_factors}")
