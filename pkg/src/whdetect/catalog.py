"""Named 3-manifold group constructors and Seifert-invariant machinery.

Covers the finite (elliptic) families -- cyclic, dicyclic, binary
tetrahedral/octahedral/icosahedral -- plus dihedral cross-check groups,
and Seifert invariant data with the orientable-base and
nonorientable-base presentation families.  A one-directional
non-ambivalence checker handles the infinite Seifert groups: when the
regular fiber class is central and has order greater than two, the centre
(hence the group) cannot be ambivalent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .coset import (
    DEFAULT_MAX_COSETS,
    EnumerationBudgetExceeded,
    FiniteGroupRealization,
    element_order,
    realize_presentation,
)
from .words import Generator, Presentation, Word, commutator, make_presentation


class SeifertError(ValueError):
    pass


class Epsilon(str, enum.Enum):
    """Base-orbifold type of a Seifert fibration (o = orientable base)."""

    O1 = "o1"
    O2 = "o2"
    N1 = "n1"
    N2 = "n2"
    N3 = "n3"
    N4 = "n4"

    @property
    def orientable_base(self) -> bool:
        return self in (Epsilon.O1, Epsilon.O2)

    @property
    def fiber_central(self) -> bool:
        return self in (Epsilon.O1, Epsilon.N1)


@dataclass(frozen=True)
class SeifertInvariants:
    """The tuple (b; (eps, g); (alpha_1, beta_1), ..., (alpha_r, beta_r))."""

    b: int
    epsilon: Epsilon
    genus: int
    exceptional: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise SeifertError("genus must be nonnegative")
        if not self.epsilon.orientable_base and self.genus < 1:
            raise SeifertError("nonorientable base types require genus >= 1")
        for alpha, beta in self.exceptional:
            if alpha < 2:
                raise SeifertError(f"exceptional fiber order alpha={alpha} < 2")
            if gcd(alpha, beta) != 1:
                raise SeifertError(f"({alpha},{beta}) not coprime")

    def display(self) -> str:
        fibers = ",".join(f"({a}:{b})" for a, b in self.exceptional)
        return f"Y(b={self.b}; ({self.epsilon.value},g={self.genus}); {fibers or '-'})"


def _epsilon_exponents(eps: Epsilon, genus: int) -> list[int]:
    """Conjugation exponent of the fiber under each base generator."""
    if eps in (Epsilon.O1, Epsilon.N1):
        return [1] * genus
    if eps in (Epsilon.O2, Epsilon.N2):
        return [-1] * genus
    if eps is Epsilon.N3:
        return [1] + [-1] * (genus - 1)
    return [1, 1][:genus] + [-1] * max(0, genus - 2)


def seifert_presentation(s: SeifertInvariants) -> Presentation:
    """Fundamental group presentation from Seifert invariants.

    Orientable base: generators a_i, b_i (i <= g), q_j (j <= r), h; relators
    a_i h a_i^-1 h^-eps_i, b_i h b_i^-1 h^-eps_i, [q_j, h], q_j^alpha_j
    h^beta_j, and q_1...q_r [a_1,b_1]...[a_g,b_g] h^-b.  Nonorientable base:
    v_i replace the a_i, b_i pairs and the long relator ends v_1^2...v_g^2.
    """
    g, r = s.genus, len(s.exceptional)
    eps = _epsilon_exponents(s.epsilon, g)
    if s.epsilon.orientable_base:
        names = [x for i in range(1, g + 1) for x in (f"a{i}", f"b{i}")]
    else:
        names = [f"v{i}" for i in range(1, g + 1)]
    names += [f"q{j}" for j in range(1, r + 1)] + ["h"]
    gens_by_name = {n: i for i, n in enumerate(names)}
    h = gens_by_name["h"]

    def w(idx: int, e: int = 1) -> Word:
        return Word(((idx, 1 if e > 0 else -1),) * abs(e))

    relators: list[Word] = []
    if s.epsilon.orientable_base:
        base_gens = [
            (gens_by_name[f"a{i}"], gens_by_name[f"b{i}"]) for i in range(1, g + 1)
        ]
        for i, (a, b) in enumerate(base_gens):
            relators.append(w(a) * w(h) * w(a, -1) * w(h, -eps[i]))
            relators.append(w(b) * w(h) * w(b, -1) * w(h, -eps[i]))
    else:
        for i in range(1, g + 1):
            v = gens_by_name[f"v{i}"]
            relators.append(w(v) * w(h) * w(v, -1) * w(h, -eps[i - 1]))
    for j, (alpha, beta) in enumerate(s.exceptional, start=1):
        q = gens_by_name[f"q{j}"]
        relators.append(commutator(w(q), w(h)))
        relators.append(w(q, alpha) * w(h, beta))
    long_rel = Word()
    for j in range(1, r + 1):
        long_rel = long_rel * w(gens_by_name[f"q{j}"])
    if s.epsilon.orientable_base:
        for a, b in base_gens:
            long_rel = long_rel * commutator(w(a), w(b))
    else:
        for i in range(1, g + 1):
            long_rel = long_rel * w(gens_by_name[f"v{i}"], 2)
    long_rel = long_rel * w(h, -s.b)
    relators.append(long_rel)
    gens = tuple(Generator(i, n) for i, n in enumerate(names))
    return Presentation(gens, tuple(r for r in relators if r))


def orbifold_euler_characteristic(s: SeifertInvariants) -> Fraction:
    """chi of the base orbifold: 2-2g (orientable) or 2-g, minus cone defects."""
    base = 2 - 2 * s.genus if s.epsilon.orientable_base else 2 - s.genus
    return Fraction(base) - sum(
        1 - Fraction(1, alpha) for alpha, _ in s.exceptional
    )


def euler_number(s: SeifertInvariants) -> Fraction:
    """Rational Euler number -(b + sum beta_i/alpha_i)."""
    return -(Fraction(s.b) + sum(Fraction(b, a) for a, b in s.exceptional))


class FiberOrder(enum.Enum):
    INFINITE = "infinite"
    FINITE = "finite"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class FiberOrderResult:
    kind: FiberOrder
    order: Optional[int] = None  # order of the fiber class h when finite
    group: Optional[FiniteGroupRealization] = None


def fiber_order_rule(
    s: SeifertInvariants, budget: int = DEFAULT_MAX_COSETS
) -> FiberOrderResult:
    """Decide whether the fiber class h has infinite order.

    Nonpositive orbifold Euler characteristic, or positive characteristic
    with zero Euler number, forces an infinite group with h of infinite
    order.  Otherwise the group is finite: enumerate it and measure the
    order of h directly rather than trusting any formula.
    """
    chi = orbifold_euler_characteristic(s)
    e = euler_number(s)
    if chi <= 0 or (chi > 0 and e == 0):
        return FiberOrderResult(FiberOrder.INFINITE)
    p = seifert_presentation(s)
    try:
        G = realize_presentation(p, budget)
    except EnumerationBudgetExceeded:
        return FiberOrderResult(FiberOrder.UNDETERMINED)
    h_img = G.generator_images[p.rank - 1]  # h is the last generator
    return FiberOrderResult(FiberOrder.FINITE, element_order(G, h_img), G)


class Lemma74Verdict(enum.Enum):
    NOT_AMBIVALENT = "not_ambivalent"
    INCONCLUSIVE = "inconclusive"


def lemma74_check(
    s: SeifertInvariants, budget: int = DEFAULT_MAX_COSETS
) -> Lemma74Verdict:
    """Central-fiber criterion: fiber central and of order > 2 rules out
    ambivalence.  One-directional; anything else is inconclusive."""
    if not s.epsilon.fiber_central:
        return Lemma74Verdict.INCONCLUSIVE
    res = fiber_order_rule(s, budget)
    if res.kind is FiberOrder.INFINITE:
        return Lemma74Verdict.NOT_AMBIVALENT
    if res.kind is FiberOrder.FINITE and res.order is not None and res.order > 2:
        return Lemma74Verdict.NOT_AMBIVALENT
    return Lemma74Verdict.INCONCLUSIVE


class Goodness(str, enum.Enum):
    GOOD = "good"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CatalogEntry:
    """A named group with expectations used by the classification tests.

    ``three_manifold``: whether the group belongs to the finite 3-manifold
    group families (the classification table covers exactly those).
    """

    name: str
    presentation: Presentation
    known_order: Optional[int] = None
    k1_trivial: bool = True
    goodness: Goodness = Goodness.GOOD
    expected_ambivalent: Optional[bool] = None
    three_manifold: bool = True


def cyclic(m: int) -> Presentation:
    return make_presentation(["a"], [f"a^{m}"])


def dicyclic(ell: int) -> Presentation:
    """Order 4*ell: <a, x | a^(2 ell) = 1, x^2 = a^ell, x^-1 a x = a^-1>."""
    if ell < 1:
        raise ValueError("dicyclic parameter must be >= 1")
    return make_presentation(
        ["a", "x"], [f"a^{2 * ell}", f"x^2 a^{-ell}", "x^-1 a x a"]
    )


def dihedral(k: int) -> Presentation:
    """Order 2k: <r, s | r^k, s^2, (rs)^2>."""
    return make_presentation(["r", "s"], [f"r^{k}", "s^2", "s r s r"])


def binary_polyhedral(p: int) -> Presentation:
    """<a, b | a^p = b^3 = (ab)^2>, p in {3, 4, 5}: the binary
    tetrahedral (24), octahedral (48), icosahedral (120) groups."""
    if p not in (3, 4, 5):
        raise ValueError("binary polyhedral parameter must be 3, 4 or 5")
    return make_presentation(
        ["a", "b"], [f"a^{p} b^-3", f"a^{p} b^-1 a^-1 b^-1 a^-1"]
    )


def binary_tetrahedral() -> Presentation:
    return binary_polyhedral(3)


def binary_octahedral() -> Presentation:
    return binary_polyhedral(4)


def binary_icosahedral() -> Presentation:
    return binary_polyhedral(5)


def builtin_groups(max_order: int) -> list[CatalogEntry]:
    """Catalog entries up to the given order, expectations prefilled.

    Ambivalent finite 3-manifold groups are exactly: the cyclic groups of
    order 1 and 2, the dicyclic groups of order divisible by 8, the binary
    octahedral group and the binary icosahedral group.  Dihedral groups are
    included as non-3-manifold cross-checks (all of them are ambivalent).
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    entries: list[CatalogEntry] = []
    for m in range(1, max_order + 1):
        entries.append(
            CatalogEntry(
                name=f"cyclic_{m}",
                presentation=cyclic(m),
                known_order=m,
                expected_ambivalent=m <= 2,
            )
        )
    ell = 1
    while 4 * ell <= max_order:
        entries.append(
            CatalogEntry(
                name=f"dicyclic_{4 * ell}",
                presentation=dicyclic(ell),
                known_order=4 * ell,
                expected_ambivalent=ell % 2 == 0,
            )
        )
        ell += 1
    for name, p, order, amb in (
        ("binary_tetrahedral_24", 3, 24, False),
        ("binary_octahedral_48", 4, 48, True),
        ("binary_icosahedral_120", 5, 120, True),
    ):
        if order <= max_order:
            entries.append(
                CatalogEntry(
                    name=name,
                    presentation=binary_polyhedral(p),
                    known_order=order,
                    expected_ambivalent=amb,
                )
            )
    k = 2
    while 2 * k <= max_order and k <= 12:
        entries.append(
            CatalogEntry(
                name=f"dihedral_{2 * k}",
                presentation=dihedral(k),
                known_order=2 * k,
                expected_ambivalent=True,
                three_manifold=False,
            )
        )
        k += 1
    return entries


def get_preset(name: str) -> CatalogEntry:
    """Look up a builtin group by catalog name, e.g. ``dicyclic_12``."""
    for entry in builtin_groups(240):
        if entry.name == name:
            return entry
    raise KeyError(f"unknown preset {name!r}")


def seifert_goodness(s: SeifertInvariants) -> Goodness:
    """Conservative goodness flag for a Seifert group.

    Finite groups are good; so are the nonnegative-curvature base cases
    with genus at most 1 (extensions of good groups by good groups).
    Everything else stays unknown, never silently good.
    """
    chi = orbifold_euler_characteristic(s)
    if chi > 0 and euler_number(s) != 0:
        return Goodness.GOOD  # finite group
    if s.genus <= 1 and chi >= 0:
        return Goodness.GOOD
    return Goodness.UNKNOWN


def seifert_k1_trivial(s: SeifertInvariants) -> Optional[bool]:
    """k1 flag for the Seifert families the detection theorem covers.

    Circle bundles over orientable surfaces of genus <= 1 and the elliptic
    (finite) cases have trivial first k-invariant; elsewhere the flag is
    left undetermined (None) and the pipeline refuses a verdict.
    """
    chi = orbifold_euler_characteristic(s)
    if chi > 0 and euler_number(s) != 0:
        return True
    if s.epsilon is Epsilon.O1 and s.genus <= 1:
        return True
    return None
