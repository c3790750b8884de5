import random
from fractions import Fraction

import pytest

from toroidal.bigcell import (
    Calculus,
    EquivalenceVerdict,
    MixedPoint,
    OutsideDomain,
    OutsideVi,
    specialize_mixed,
)
from toroidal.catalog import chamber_cones
from toroidal.charts import (
    identity_point,
    in_closed_orbit,
    limit_point,
    specialize_at_zero,
    torus_point,
    torus_translate,
)
from toroidal.chevalley import random_element
from toroidal.cones import Cone, interior_cocharacter
from toroidal.linalg import Matrix
from toroidal.ratfun import EPS, RatFun
from toroidal.rootdata import RootDatum

CALC1 = Calculus(RootDatum.of_type("A", 1))
CALC2 = Calculus(RootDatum.of_type("A", 2))
ZERO1 = Cone([], dim=1)
RAY1 = Cone([(-1,)], dim=1)


def torus_mixed(calc, rng, cone=None):
    pin = calc.pinning
    rank = calc.rd.rank
    cone = cone or Cone([], dim=rank)
    neg, pos = pin.negative_order, pin.positive_order
    um = pin.unipotent_product(neg, [Fraction(rng.randint(-3, 3)) for _ in neg])
    up = pin.unipotent_product(pos, [Fraction(rng.randint(-3, 3)) for _ in pos])
    coords = tuple(Fraction(rng.choice([-3, -2, -1, 1, 2, 3])) for _ in range(rank))
    return MixedPoint(um, torus_point(coords, cone), up)


def boundary_charts(calc):
    out = []
    for cone in chamber_cones(calc.rd):
        if cone.is_zero():
            out.append(identity_point(cone))
        else:
            out.append(limit_point(interior_cocharacter(cone), cone))
    return out


def test_mixed_point_validates_triangularity():
    chart = identity_point(ZERO1)
    upper = Matrix([[1, 1], [0, 1]])
    lower = Matrix([[1, 0], [1, 1]])
    with pytest.raises(ValueError):
        MixedPoint(upper, chart, upper)
    with pytest.raises(ValueError):
        MixedPoint(lower, chart, lower)
    p = MixedPoint(lower, chart, upper)
    assert p == MixedPoint(lower, chart, upper)


def test_reflect_simple_frozen_conjugation():
    pin = CALC1.pinning
    p = MixedPoint(
        Matrix([[1, 0], [1, 1]]), identity_point(ZERO1), Matrix([[1, 1], [0, 1]])
    )
    q = CALC1.reflect_simple(p, 0)
    n = pin.simple_reflection_element(0)
    assert CALC1.to_matrix(p) == Matrix([[1, 1], [1, 2]])
    assert CALC1.to_matrix(q) == Matrix([[2, -1], [-1, 1]])
    assert CALC1.to_matrix(q) == n @ CALC1.to_matrix(p) @ n.inverse()
    assert q.chart.values[(-1,)] == Fraction(1, 2)


def test_reflect_simple_matches_conjugation_randomly():
    for calc in (CALC1, CALC2):
        rng = random.Random(31)
        pin = calc.pinning
        for i in range(calc.rd.rank):
            n = pin.simple_reflection_element(i)
            n_inv = n.inverse()
            done = 0
            while done < 25:
                p = torus_mixed(calc, rng)
                try:
                    q = calc.reflect_simple(p, i)
                except OutsideVi:
                    continue
                assert calc.to_matrix(q) == n @ calc.to_matrix(p) @ n_inv
                done += 1


def test_reflect_simple_boundary_slots():
    lam0 = limit_point((-1,), RAY1)
    rng = random.Random(8)
    for _ in range(30):
        x = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        y = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        p = MixedPoint(
            Matrix([[1, 0], [x, 1]]), lam0, Matrix([[1, y], [0, 1]])
        )
        q = CALC1.reflect_simple(p, 0)
        assert q.u_minus == Matrix([[1, 0], [Fraction(-1) / x, 1]])
        assert q.u_plus == Matrix([[1, Fraction(-1) / y], [0, 1]])
        assert in_closed_orbit(q.chart)


def test_reflect_simple_outside_vi_on_boundary_axis():
    lam0 = limit_point((-1,), RAY1)
    e = CALC1.pinning.identity()
    p = MixedPoint(e, lam0, Matrix([[1, 1], [0, 1]]))
    with pytest.raises(OutsideVi) as info:
        CALC1.reflect_simple(p, 0)
    assert info.value.report.step == "reflect_simple"


def test_double_reflection_is_central_for_sl2():
    rng = random.Random(5)
    for _ in range(20):
        p = torus_mixed(CALC1, rng)
        try:
            q = CALC1.reflect_simple(CALC1.reflect_simple(p, 0), 0)
        except OutsideVi:
            continue
        # n^2 = -I is central, so the double reflection fixes every point
        assert q == p


def test_longest_conjugation_roundtrip():
    for calc in (CALC1, CALC2):
        rng = random.Random(77)
        done = 0
        while done < 10:
            p = torus_mixed(calc, rng)
            try:
                q = calc.reflect_longest(p)
                r = calc.reflect_longest_inverse(q)
            except OutsideDomain:
                continue
            assert r == p
            done += 1


def test_reorder_direct_frozen_sl2():
    up = Matrix([[1, 1], [0, 1]])
    um = Matrix([[1, 0], [1, 1]])
    r = CALC1.reorder_direct(up, identity_point(ZERO1), um)
    assert r.u_minus == Matrix([[1, 0], [Fraction(1, 2), 1]])
    assert r.chart == torus_point((Fraction(2),), ZERO1)
    assert r.u_plus == Matrix([[1, Fraction(1, 2)], [0, 1]])


def test_reorder_outside_domain_sl2():
    # [[1,-1],[0,1]] t [[1,0],[1,1]] has a vanishing leading minor
    up = Matrix([[1, -1], [0, 1]])
    um = Matrix([[1, 0], [1, 1]])
    with pytest.raises(OutsideDomain) as info:
        CALC1.reorder_direct(up, identity_point(ZERO1), um)
    assert info.value.report.step == "reorder_direct"
    with pytest.raises(OutsideDomain):
        CALC1.reorder(up, identity_point(ZERO1), um)


def test_reorder_matches_direct_on_torus():
    for calc in (CALC1, CALC2):
        rng = random.Random(13)
        done = 0
        while done < 40:
            p = torus_mixed(calc, rng)
            try:
                r1 = calc.reorder(p.u_plus, p.chart, p.u_minus)
                r2 = calc.reorder_direct(p.u_plus, p.chart, p.u_minus)
            except OutsideDomain:
                continue
            assert r1 == r2
            done += 1


def test_reorder_identity_on_boundary_catalog():
    for calc in (CALC1, CALC2):
        e = calc.pinning.identity()
        for chart in boundary_charts(calc):
            r = calc.reorder(e, chart, e)
            assert r == MixedPoint(e, chart, e)


def test_reorder_torus_equivariance():
    # theta intertwines the two torus actions, including over the boundary
    for calc in (CALC1, CALC2):
        rng = random.Random(6)
        pin = calc.pinning
        rank = calc.rd.rank
        charts = boundary_charts(calc)
        done = 0
        while done < 15:
            chart = rng.choice(charts)
            neg, pos = pin.negative_order, pin.positive_order
            um = pin.unipotent_product(
                neg, [Fraction(rng.randint(-2, 2)) for _ in neg]
            )
            up = pin.unipotent_product(
                pos, [Fraction(rng.randint(-2, 2)) for _ in pos]
            )
            tc = tuple(Fraction(rng.choice([-2, -1, 1, 2, 3])) for _ in range(rank))
            t = pin.torus_element(tc)
            t_inv = t.inverse()
            try:
                base = calc.reorder(up, chart, um)
                moved = calc.reorder(
                    t @ up @ t_inv, torus_translate(tc, chart), um
                )
            except OutsideDomain:
                continue
            assert moved.u_minus == t @ base.u_minus @ t_inv
            assert moved.chart == torus_translate(tc, base.chart)
            assert moved.u_plus == base.u_plus
            done += 1


def test_act_identity_everywhere():
    for calc in (CALC1, CALC2):
        e = calc.pinning.identity()
        rng = random.Random(3)
        for chart in boundary_charts(calc):
            p = MixedPoint(e, chart, e)
            assert calc.act(e, p, e) == p
        for _ in range(10):
            p = torus_mixed(calc, rng)
            assert calc.act(e, p, e) == p


def test_act_matches_direct_on_torus():
    for calc in (CALC1, CALC2):
        rng = random.Random(14)
        done = 0
        while done < 25:
            p = torus_mixed(calc, rng)
            g1 = random_element(calc.pinning, rng)
            g2 = random_element(calc.pinning, rng)
            try:
                r1 = calc.act(g1, p, g2)
                r2 = calc.act_direct(g1, p, g2)
            except OutsideDomain:
                continue
            assert r1 == r2
            done += 1


def test_act_outside_domain_reports_step():
    n = CALC1.pinning.simple_reflection_element(0)
    e = CALC1.pinning.identity()
    p = MixedPoint(e, identity_point(ZERO1), e)
    with pytest.raises(OutsideDomain) as info:
        CALC1.act(n, p, e)
    assert info.value.report.step == "act"
    assert "g1" in info.value.report.predicate


def test_transfer_roundtrip():
    for calc in (CALC1, CALC2):
        rng = random.Random(23)
        done = 0
        while done < 10:
            p = torus_mixed(calc, rng)
            g = random_element(calc.pinning, rng)
            h = random_element(calc.pinning, rng)
            try:
                assert calc.transfer(g, g, p) == p
                assert calc.transfer((g, h), (g, h), p) == p
            except OutsideDomain:
                continue
            done += 1


def test_specialize_mixed_entrywise():
    pin = CALC1.pinning
    um = Matrix([[1, 0], [RatFun(2) + EPS, 1]])
    up = Matrix([[1, RatFun(1) - EPS], [0, 1]])
    chart = torus_point((RatFun(3) + EPS,), ZERO1)
    p = MixedPoint(um, chart, up)
    q = specialize_mixed(p)
    assert q.u_minus == Matrix([[1, 0], [2, 1]])
    assert q.u_plus == Matrix([[1, 1], [0, 1]])
    assert q.chart == torus_point((Fraction(3),), ZERO1)


def test_reflection_commutes_with_specialization():
    # eps-curves: applying f_0 then sending eps -> 0 equals the reverse order
    rng = random.Random(42)
    done = 0
    while done < 15:
        x = RatFun(rng.randint(-2, 2)) + RatFun(rng.randint(-1, 1)) * EPS
        y = RatFun(rng.randint(-2, 2)) + RatFun(rng.randint(-1, 1)) * EPS
        a = RatFun(rng.randint(1, 3)) + RatFun(rng.randint(0, 1)) * EPS
        p = MixedPoint(
            Matrix([[1, 0], [x, 1]]),
            torus_point((a,), ZERO1),
            Matrix([[1, y], [0, 1]]),
        )
        try:
            q_curve = CALC1.reflect_simple(p, 0)
            q_zero = CALC1.reflect_simple(specialize_mixed(p), 0)
        except OutsideVi:
            continue
        assert specialize_mixed(q_curve) == q_zero
        done += 1


# -- equivalence tester -------------------------------------------------------


def equivalent_pair(calc, rng):
    while True:
        w = torus_mixed(calc, rng)
        g1 = random_element(calc.pinning, rng)
        g2 = random_element(calc.pinning, rng)
        c1 = random_element(calc.pinning, rng)
        c2 = random_element(calc.pinning, rng)
        try:
            w2 = calc.act(c1, w, c2)
        except OutsideDomain:
            continue
        a = (g1, w, g2)
        b = (g1 @ c1.inverse(), w2, g2 @ c2.inverse())
        return a, b


def test_equivalence_detects_equal_points():
    for calc in (CALC1, CALC2):
        rng = random.Random(91)
        hits = 0
        for _ in range(10):
            a, b = equivalent_pair(calc, rng)
            verdict = calc.check_equivalence(a, b)
            assert verdict.kind in ("equivalent", "inconclusive")
            if verdict.kind == "equivalent":
                assert verdict.witness is not None
                hits += 1
        assert hits >= 8


def test_equivalence_identity_witness_tried_first():
    e = CALC1.pinning.identity()
    rng = random.Random(17)
    w = torus_mixed(CALC1, rng)
    verdict = CALC1.check_equivalence((e, w, e), (e, w, e))
    assert verdict.kind == "equivalent"
    assert verdict.attempts == 1
    assert verdict.witness == (e, e)


def test_equivalence_detects_distinct_points():
    for calc in (CALC1, CALC2):
        rng = random.Random(37)
        pin = calc.pinning
        alpha = calc.rd.simple_root(0)
        for _ in range(8):
            w = torus_mixed(calc, rng)
            bumped = MixedPoint(
                w.u_minus, w.chart, w.u_plus @ pin.root_element(alpha, Fraction(1))
            )
            g1 = random_element(pin, rng)
            g2 = random_element(pin, rng)
            verdict = calc.check_equivalence((g1, w, g2), (g1, bumped, g2))
            assert verdict.kind in ("not_equivalent", "inconclusive")
            if verdict.kind == "not_equivalent":
                assert verdict.witness is not None


def test_equivalence_requires_common_cone():
    e = CALC1.pinning.identity()
    w1 = MixedPoint(e, identity_point(ZERO1), e)
    w2 = MixedPoint(e, identity_point(RAY1), e)
    with pytest.raises(ValueError):
        CALC1.check_equivalence((e, w1, e), (e, w2, e))


def test_equivalence_inconclusive_when_budget_exhausted():
    e = CALC1.pinning.identity()
    n = CALC1.pinning.simple_reflection_element(0)
    rng = random.Random(2)
    w = torus_mixed(CALC1, rng)
    # g1 = n never lies in the big cell after the identity witness, and the
    # budget stops before any random witness can fix that
    verdict = CALC1.check_equivalence((n, w, e), (n, w, e), witness_budget=1)
    assert verdict == EquivalenceVerdict("inconclusive", None, 1)
