import itertools

import pytest

from whdetect.coset import (
    EnumerationBudgetExceeded,
    element_order,
    enumerate_cosets,
    realize,
    realize_presentation,
)
from whdetect.words import make_presentation

from conftest import (
    binary_polyhedral_group,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    group,
)


def quaternion_oracle():
    """Direct multiplication table of Q8 over {1,-1,i,-i,j,-j,k,-k}.

    Independent of coset enumeration: quaternion arithmetic on symbols.
    """
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def neg(u):
        return u[1:] if u.startswith("-") else "-" + u

    base = {
        ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
        ("i", "1"): "i", ("j", "1"): "j", ("k", "1"): "k",
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def mul(u, v):
        sign = 1
        if u.startswith("-"):
            sign, u = -sign, u[1:]
        if v.startswith("-"):
            sign, v = -sign, v[1:]
        w = base[(u, v)]
        return w if sign == 1 else neg(w)

    return units, mul


def test_cyclic_5():
    p = make_presentation(["a"], ["a^5"])
    t = enumerate_cosets(p, 100)
    assert t.n_cosets == 5
    G = realize(t, p)
    assert element_order(G, G.generator_images[0]) == 5


def test_q8_order_and_structure():
    G = dicyclic_group(2)
    assert G.order == 8
    a, x = G.generator_images
    x2 = G.mul[x][x]
    a2 = G.mul[a][a]
    assert x2 == a2 != 0
    assert G.mul[x2][x2] == 0


def test_q8_isomorphic_to_quaternion_oracle():
    """The enumerated group matches literal quaternion arithmetic."""
    G = dicyclic_group(2)
    units, mul = quaternion_oracle()
    # map generators a -> i, x -> j and extend via the BFS structure
    a, x = G.generator_images
    images = {0: "1", a: "i", x: "j"}
    frontier = [0, a, x]
    while frontier:
        nxt = []
        for g in frontier:
            for gen, unit in ((a, "i"), (x, "j")):
                h = G.mul[g][gen]
                if h not in images:
                    images[h] = mul(images[g], unit)
                    nxt.append(h)
        frontier = nxt
    assert len(images) == 8 and len(set(images.values())) == 8
    for g in range(8):
        for h in range(8):
            assert images[G.mul[g][h]] == mul(images[g], images[h])


def test_binary_icosahedral_order_and_classes():
    G = binary_polyhedral_group(5)
    assert G.order == 120
    from whdetect.analysis import conjugacy_classes

    assert conjugacy_classes(G).n_classes == 9


def test_trivial_presentation():
    G = group((), ())
    assert G.order == 1
    assert element_order(G, 0) == 1


def test_catalog_orders():
    assert dicyclic_group(1).order == 4
    assert dicyclic_group(3).order == 12
    assert dicyclic_group(4).order == 16
    assert binary_polyhedral_group(3).order == 24
    assert binary_polyhedral_group(4).order == 48
    assert dihedral_group(6).order == 12


@pytest.mark.parametrize("ell", range(1, 8))
def test_dicyclic_x_has_order_4(ell):
    G = dicyclic_group(ell)
    assert element_order(G, G.generator_images[1]) == 4


def test_budget_exceeded_on_infinite_group():
    p = make_presentation(["a"], [])  # infinite cyclic
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_cosets(p, 50)


def test_bad_budget():
    with pytest.raises(ValueError):
        enumerate_cosets(make_presentation(["a"], ["a^2"]), 0)


@pytest.mark.parametrize(
    "G",
    [cyclic_group(12), dicyclic_group(2), dicyclic_group(3), binary_polyhedral_group(3),
     binary_polyhedral_group(4), dihedral_group(5)],
    ids=["Z12", "Q8", "Dic3", "T24", "O48", "D10"],
)
def test_group_axioms_full_triple_loop(G):
    """Associativity, identity and inverse laws over every triple."""
    n = G.order
    assert n <= 48
    mul, inv = G.mul, G.inv
    for g in range(n):
        assert mul[g][0] == g == mul[0][g]
        assert mul[g][inv[g]] == 0 == mul[inv[g]][g]
    for g, h, k in itertools.product(range(n), repeat=3):
        assert mul[mul[g][h]][k] == mul[g][mul[h][k]]


@pytest.mark.parametrize("m", [1, 2, 3, 7, 12, 30])
def test_lagrange_on_cyclic(m):
    G = cyclic_group(m)
    for g in range(G.order):
        assert G.order % element_order(G, g) == 0


def test_lagrange_on_binary_octahedral():
    G = binary_polyhedral_group(4)
    for g in range(G.order):
        assert G.order % element_order(G, g) == 0


def test_enumeration_deterministic():
    p = make_presentation(["a", "x"], ["a^6", "x^2 a^-3", "x^-1 a x a"])
    t1 = enumerate_cosets(p, 1000)
    t2 = enumerate_cosets(p, 1000)
    assert t1.rows == t2.rows


def test_coset_table_csv_dump():
    p = make_presentation(["a"], ["a^3"])
    csv = enumerate_cosets(p, 100).to_csv()
    lines = csv.strip().splitlines()
    assert lines[0] == "coset,g0,g0_inv"
    assert len(lines) == 4


def test_word_evaluation():
    G = dicyclic_group(2)
    p = G.source
    rel = p.relators[0]  # a^4
    assert G.evaluate_word(rel) == 0
