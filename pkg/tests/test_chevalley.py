import itertools
import random
from fractions import Fraction

import pytest

from toroidal.chevalley import (
    NotInBigCell,
    Pinning,
    random_element,
)
from toroidal.linalg import Matrix
from toroidal.rootdata import RootDatum


def pinning(rank: int) -> Pinning:
    return Pinning(RootDatum.of_type("A", rank))


def test_root_positions_sl3():
    pin = pinning(2)
    rd = pin.rd
    a0, a1 = rd.simple_root(0), rd.simple_root(1)
    high = tuple(x + y for x, y in zip(a0, a1))
    assert pin.root_position(a0) == (0, 1)
    assert pin.root_position(a1) == (1, 2)
    assert pin.root_position(high) == (0, 2)
    assert pin.root_position(tuple(-x for x in high)) == (2, 0)


def test_root_element_additivity_up_to_sl5():
    for rank in range(1, 5):
        pin = pinning(rank)
        for beta in pin.rd.roots:
            x, y = Fraction(3, 2), Fraction(-5)
            lhs = pin.root_element(beta, x) @ pin.root_element(beta, y)
            assert lhs == pin.root_element(beta, x + y)


def test_weyl_representative_frozen_sl2():
    pin = pinning(1)
    n = pin.simple_reflection_element(0)
    assert n == Matrix([[0, 1], [-1, 0]])
    assert pin.weyl_representative(()) == pin.identity()
    assert pin.weyl_representative((0,)) == n


def test_reflection_fourth_power_up_to_sl5():
    for rank in range(1, 5):
        pin = pinning(rank)
        for i in range(rank):
            n = pin.simple_reflection_element(i)
            assert n @ n @ n @ n == pin.identity()
            assert n @ n != pin.identity()  # order exactly 4


def test_torus_element_roundtrip():
    pin = pinning(2)
    coords = (Fraction(2), Fraction(3))
    t = pin.torus_element(coords)
    assert t == Matrix.diagonal([Fraction(2), Fraction(3, 2), Fraction(1, 3)])
    assert pin.torus_coordinates_of(t) == coords


def test_torus_element_rejects_bad_input():
    pin = pinning(2)
    with pytest.raises(ValueError):
        pin.torus_element((Fraction(1),))
    with pytest.raises(ValueError):
        pin.torus_element((Fraction(0), Fraction(1)))
    with pytest.raises(ValueError):
        pin.torus_coordinates_of(Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))


def test_big_cell_factor_frozen():
    pin = pinning(1)
    triple = pin.big_cell_factor(Matrix([[2, 1], [1, 1]]))
    assert triple.neg_coords == (Fraction(1, 2),)
    assert triple.torus == (Fraction(2),)
    assert triple.pos_coords == (Fraction(1, 2),)
    assert pin.assemble(triple) == Matrix([[2, 1], [1, 1]])


def test_big_cell_factor_identity():
    pin = pinning(2)
    triple = pin.big_cell_factor(pin.identity())
    assert all(c == 0 for c in triple.neg_coords)
    assert all(c == 0 for c in triple.pos_coords)
    assert triple.torus == (Fraction(1), Fraction(1))


def test_big_cell_factor_rejects_antidiagonal():
    pin = pinning(1)
    with pytest.raises(NotInBigCell):
        pin.big_cell_factor(Matrix([[0, 1], [-1, 0]]))


def test_big_cell_roundtrip_random():
    for rank in (1, 2, 3):
        pin = pinning(rank)
        rng = random.Random(100 + rank)
        done = 0
        while done < 60:
            g = random_element(pin, rng)
            try:
                triple = pin.big_cell_factor(g)
            except NotInBigCell:
                continue
            assert pin.assemble(triple) == g
            done += 1


def leading_minors_nonzero(g: Matrix) -> bool:
    n = g.nrows
    for k in range(1, n + 1):
        sub = Matrix([[g[i, j] for j in range(k)] for i in range(k)])
        if sub.det() == 0:
            return False
    return True


def test_membership_iff_leading_minors():
    pin = pinning(2)
    rng = random.Random(7)
    seen_out = 0
    for _ in range(250):
        g = random_element(pin, rng)
        member = True
        try:
            pin.big_cell_factor(g)
        except NotInBigCell:
            member = False
            seen_out += 1
        assert member == leading_minors_nonzero(g)
    # engineered failures: left-translating by a Weyl representative
    # pushes elements out of the big cell
    n = pin.simple_reflection_element(0)
    misses = 0
    for _ in range(50):
        g = n @ random_element(pin, rng)
        if not leading_minors_nonzero(g):
            with pytest.raises(NotInBigCell):
                pin.big_cell_factor(g)
            misses += 1
    assert misses > 0


def test_refactor_frozen_sl3():
    pin = pinning(2)
    rd = pin.rd
    a0, a1 = rd.simple_root(0), rd.simple_root(1)
    high = tuple(x + y for x, y in zip(a0, a1))
    u = pin.root_element(a0, Fraction(1)) @ pin.root_element(a1, Fraction(1))
    order = (a1, a0, high)
    assert pin.unipotent_refactor(u, order) == (
        Fraction(1),
        Fraction(1),
        Fraction(1),
    )


def test_refactor_identity_and_sl2():
    pin2 = pinning(2)
    zeros = pin2.unipotent_refactor(pin2.identity(), pin2.positive_order)
    assert all(c == 0 for c in zeros)
    pin1 = pinning(1)
    u = Matrix([[1, Fraction(7, 3)], [0, 1]])
    assert pin1.unipotent_refactor(u, pin1.positive_order) == (Fraction(7, 3),)


def test_refactor_order_independent_in_group():
    pin = pinning(2)
    rng = random.Random(21)
    pos_roots = list(pin.rd.positive_roots)
    for _ in range(20):
        coords = [Fraction(rng.randint(-4, 4)) for _ in pin.positive_order]
        u = pin.unipotent_product(pin.positive_order, coords)
        order = list(pos_roots)
        rng.shuffle(order)
        refit = pin.unipotent_refactor(u, order)
        assert pin.unipotent_product(order, refit) == u


def test_chevalley_signs_frozen():
    pin1 = pinning(1)
    rd1 = pin1.rd
    a = rd1.simple_root(0)
    signs1 = pin1.chevalley_signs()
    assert signs1[(0, a)] == -1
    assert signs1[(0, tuple(-x for x in a))] == -1

    pin2 = pinning(2)
    rd2 = pin2.rd
    a0, a1 = rd2.simple_root(0), rd2.simple_root(1)
    high = tuple(x + y for x, y in zip(a0, a1))
    signs2 = pin2.chevalley_signs()
    assert signs2[(0, a1)] == 1
    assert signs2[(0, high)] == -1
    # own root always flips sign
    for i, beta in ((0, a0), (1, a1)):
        assert signs2[(i, beta)] == -1
        assert signs2[(i, tuple(-x for x in beta))] == -1


def test_signs_define_conjugation_exhaustively():
    for rank in (1, 2, 3):
        pin = pinning(rank)
        rd = pin.rd
        signs = pin.chevalley_signs()
        for i in range(rank):
            n = pin.simple_reflection_element(i)
            n_inv = n.inverse()
            for beta in rd.roots:
                image = rd.reflect_character(i, beta)
                for x in (Fraction(1), Fraction(2)):
                    lhs = n @ pin.root_element(beta, x) @ n_inv
                    rhs = pin.root_element(image, signs[(i, beta)] * x)
                    assert lhs == rhs, (rank, i, beta)


def test_random_element_has_determinant_one():
    pin = pinning(2)
    rng = random.Random(0)
    for _ in range(20):
        g = random_element(pin, rng)
        assert g.det() == 1
