"""Birational calculus on mixed big-cell charts U^- x T_sigma x U^+.

A point of the chart attached to a cone sigma is a triple: a lower-unitriangular
matrix, a monoid-algebra point of the torus closure, and an upper-unitriangular
matrix.  The maps implemented here are all rational: each raises OutsideDomain
with a structured report when a required factorization or denominator fails.

The key maps are the single-reflection conjugations f_i, the multiplication
reordering Theta (u^+ t u^-  ->  u^- t u^+), the two-sided action A_sigma, and
the transfer map between overlapping group translates of the chart.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .charts import (
    ChartPoint,
    coweight_scale,
    evaluate_character,
    identity_point,
    limit_point,
    specialize_at_zero,
    torus_coordinates,
    torus_point,
    torus_translate,
)
from .chevalley import NotInBigCell, Pinning, random_element
from .cones import Cone, interior_cocharacter
from .linalg import Matrix
from .ratfun import evaluate_at_zero
from .rootdata import RootDatum

__all__ = [
    "DomainReport",
    "OutsideDomain",
    "OutsideVi",
    "MixedPoint",
    "EquivalenceVerdict",
    "Calculus",
    "specialize_mixed",
]


def specialize_mixed(p: "MixedPoint") -> "MixedPoint":
    """Evaluate every eps-dependent entry of a mixed point at eps = 0."""
    return MixedPoint(
        p.u_minus.map(evaluate_at_zero),
        specialize_at_zero(p.chart),
        p.u_plus.map(evaluate_at_zero),
    )


@dataclass(frozen=True)
class DomainReport:
    """Which step of which map failed, and which predicate was violated."""

    step: str
    predicate: str
    detail: str


class OutsideDomain(Exception):
    def __init__(self, report: DomainReport):
        super().__init__(f"{report.step}: needs {report.predicate} ({report.detail})")
        self.report = report


class OutsideVi(OutsideDomain):
    """The denominator of a single-reflection conjugation vanished."""


def _is_unitriangular(m: Matrix, lower: bool) -> bool:
    n = m.nrows
    if m.ncols != n:
        return False
    for i in range(n):
        for j in range(n):
            if i == j:
                if m[i, j] != 1:
                    return False
            elif (j > i) == lower and m[i, j] != 0:
                return False
    return True


class MixedPoint:
    """A point u^- t u^+ of the big-cell chart attached to a cone."""

    __slots__ = ("u_minus", "chart", "u_plus")

    def __init__(self, u_minus: Matrix, chart: ChartPoint, u_plus: Matrix):
        if not _is_unitriangular(u_minus, lower=True):
            raise ValueError("u_minus must be lower unitriangular")
        if not _is_unitriangular(u_plus, lower=False):
            raise ValueError("u_plus must be upper unitriangular")
        self.u_minus = u_minus
        self.chart = chart
        self.u_plus = u_plus

    def __eq__(self, other):
        if not isinstance(other, MixedPoint):
            return NotImplemented
        return (
            self.u_minus == other.u_minus
            and self.chart == other.chart
            and self.u_plus == other.u_plus
        )

    def __repr__(self):
        return f"MixedPoint({self.u_minus!r}, {self.chart!r}, {self.u_plus!r})"


@dataclass(frozen=True)
class EquivalenceVerdict:
    kind: str  # "equivalent" | "not_equivalent" | "inconclusive"
    witness: tuple | None
    attempts: int


class Calculus:
    """All rational maps for one root datum, over one matrix realization."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.pinning = Pinning(rd)
        self.signs = self.pinning.chevalley_signs()
        self.longest_word = rd.longest_word()
        self.n0 = self.pinning.weyl_representative(self.longest_word)
        self.n0_inv = self.n0.inverse()
        # n_i has order 4, so the inverse of n_{j_1}...n_{j_m} is the product
        # of cubes in reversed order; composing the conjugation maps in the
        # matching order yields the word below, leftmost applied first.
        self._inverse_sweep = tuple(j for j in self.longest_word for _ in range(3))
        neg, pos = [], []
        for i in range(rd.rank):
            a_i = rd.simple_root(i)
            minus_a_i = tuple(-x for x in a_i)
            neg.append(
                tuple(b for b in self.pinning.negative_order if b != minus_a_i)
                + (minus_a_i,)
            )
            pos.append(
                (a_i,)
                + tuple(b for b in self.pinning.positive_order if b != a_i)
            )
        self._neg_orders = tuple(neg)
        self._pos_orders = tuple(pos)
        self._anchor_cache = {}

    # -- single reflections ----------------------------------------------------

    def reflect_simple(self, p: MixedPoint, i: int) -> MixedPoint:
        """Conjugation by the reflection representative n_i, extended to the chart.

        The input is refactored so the -alpha_i coordinate x sits last in u^-
        and the alpha_i coordinate y sits first in u^+; the map then inverts
        the denominator D = (-alpha_i)(t) + x y.
        """
        rd, pin = self.rd, self.pinning
        neg_order = self._neg_orders[i]
        pos_order = self._pos_orders[i]
        xs = pin.unipotent_refactor(p.u_minus, neg_order)
        ys = pin.unipotent_refactor(p.u_plus, pos_order)
        x, y = xs[-1], ys[0]
        minus_a_i = neg_order[-1]
        d = evaluate_character(p.chart, minus_a_i) + x * y
        if d == 0:
            raise OutsideVi(
                DomainReport(
                    "reflect_simple",
                    "(-alpha_i)(t) + x*y != 0",
                    f"simple index {i}",
                )
            )
        um = pin.identity()
        for root, c in zip(neg_order[:-1], xs[:-1]):
            if c != 0:
                image = rd.reflect_character(i, root)
                um = um @ pin.root_element(image, self.signs[(i, root)] * c)
        um = um @ pin.root_element(minus_a_i, -y / d)
        chart = coweight_scale(p.chart, rd.simple_coroot(i), d)
        up = pin.root_element(pos_order[0], -x / d)
        for root, c in zip(pos_order[1:], ys[1:]):
            if c != 0:
                image = rd.reflect_character(i, root)
                up = up @ pin.root_element(image, self.signs[(i, root)] * c)
        return MixedPoint(um, chart, up)

    def reflect_longest(self, p: MixedPoint) -> MixedPoint:
        """Composite conjugation along the longest element; rightmost letter first."""
        for i in reversed(self.longest_word):
            p = self.reflect_simple(p, i)
        return p

    def reflect_longest_inverse(self, p: MixedPoint) -> MixedPoint:
        for i in self._inverse_sweep:
            p = self.reflect_simple(p, i)
        return p

    # -- reordered multiplication ----------------------------------------------

    def anchors(self, cone: Cone):
        """A certified base point (u0^-, u0^+) for the reordering on this cone.

        Certification runs the longest-word conjugation and its inverse on the
        most degenerate chart point and demands an exact round trip.
        """
        cached = self._anchor_cache.get(cone)
        if cached is not None:
            return cached
        if cone.is_zero():
            chart = identity_point(cone)
        else:
            chart = limit_point(interior_cocharacter(cone), cone)
        pin = self.pinning
        neg, pos = pin.negative_order, pin.positive_order
        rng = random.Random(f"anchors:{cone.rays}")
        for attempt in range(64):
            if attempt == 0:
                coords = [Fraction(1)] * (len(neg) + len(pos))
            else:
                coords = [Fraction(rng.randint(1, 9)) for _ in range(len(neg) + len(pos))]
            um = pin.unipotent_product(neg, coords[: len(neg)])
            up = pin.unipotent_product(pos, coords[len(neg):])
            try:
                q = self.reflect_longest(MixedPoint(um, chart, up))
                r = self.reflect_longest_inverse(q)
            except OutsideDomain:
                continue
            assert r == MixedPoint(um, chart, up), "conjugation round trip must be exact"
            found = (um, um.inverse(), up, up.inverse())
            self._anchor_cache[cone] = found
            return found
        raise OutsideDomain(
            DomainReport("anchors", "certifiable base point", f"cone {cone.rays}")
        )

    def reorder(self, u_plus: Matrix, chart: ChartPoint, u_minus: Matrix) -> MixedPoint:
        """Rewrite the product u^+ t u^- in the chart order u^- t u^+."""
        pin = self.pinning
        um0, um0_inv, up0, up0_inv = self.anchors(chart.cone)
        try:
            l1, d1, r1 = pin.ldu(u_plus @ um0_inv)
        except NotInBigCell as e:
            raise OutsideDomain(
                DomainReport("reorder", "u+ (u0-)^{-1} in the big cell", str(e))
            ) from e
        try:
            l2, d2, r2 = pin.ldu(up0_inv @ u_minus)
        except NotInBigCell as e:
            raise OutsideDomain(
                DomainReport("reorder", "(u0+)^{-1} u- in the big cell", str(e))
            ) from e
        t1 = pin.torus_coordinates_of(d1)
        t2 = pin.torus_coordinates_of(d2)
        d1_inv, d2_inv = d1.inverse(), d2.inverse()
        mid = torus_translate(tuple(a * b for a, b in zip(t1, t2)), chart)
        q = self.reflect_longest(
            MixedPoint(d1 @ um0 @ d1_inv, mid, d2_inv @ up0 @ d2)
        )
        a = self.n0 @ (d1 @ r1 @ d1_inv) @ self.n0_inv
        b = self.n0 @ (d2_inv @ l2 @ d2) @ self.n0_inv
        q2 = self.reflect_longest_inverse(
            MixedPoint(a @ q.u_minus, q.chart, q.u_plus @ b)
        )
        return MixedPoint(l1 @ q2.u_minus, q2.chart, q2.u_plus @ r2)

    def reorder_direct(self, u_plus: Matrix, chart: ChartPoint, u_minus: Matrix) -> MixedPoint:
        """Matrix-level reordering; defined only over the open torus orbit."""
        pin = self.pinning
        coords = torus_coordinates(chart)
        g = u_plus @ pin.torus_element(coords) @ u_minus
        try:
            l, d, u = pin.ldu(g)
        except NotInBigCell as e:
            raise OutsideDomain(
                DomainReport("reorder_direct", "product in the big cell", str(e))
            ) from e
        return MixedPoint(l, torus_point(pin.torus_coordinates_of(d), chart.cone), u)

    # -- two-sided action --------------------------------------------------------

    def act(self, g1: Matrix, p: MixedPoint, g2: Matrix) -> MixedPoint:
        """The rational action (g1, g2) . p = g1 p g2^{-1} computed chartwise."""
        pin = self.pinning
        try:
            u1m, d1g, u1p = pin.ldu(g1)
        except NotInBigCell as e:
            raise OutsideDomain(
                DomainReport("act", "g1 in the big cell", str(e))
            ) from e
        try:
            pin.ldu(g2)
        except NotInBigCell as e:
            raise OutsideDomain(
                DomainReport("act", "g2 in the big cell", str(e))
            ) from e
        try:
            h2m, d2g, h2p = pin.ldu(g2.inverse())
        except NotInBigCell as e:
            raise OutsideDomain(
                DomainReport("act", "g2^{-1} in the big cell", str(e))
            ) from e
        try:
            l1, dd1, r1 = pin.ldu(u1p @ p.u_minus)
        except NotInBigCell as e:
            raise OutsideDomain(
                DomainReport("act", "u1+ u- in the big cell", str(e))
            ) from e
        try:
            l2, dd2, r2 = pin.ldu(p.u_plus @ h2m)
        except NotInBigCell as e:
            raise OutsideDomain(
                DomainReport("act", "u+ g2hat- in the big cell", str(e))
            ) from e
        td1 = pin.torus_coordinates_of(dd1)
        td2 = pin.torus_coordinates_of(dd2)
        mid = torus_translate(tuple(a * b for a, b in zip(td1, td2)), p.chart)
        dd1_inv, dd2_inv = dd1.inverse(), dd2.inverse()
        r = self.reorder(dd1 @ r1 @ dd1_inv, mid, dd2_inv @ l2 @ dd2)
        d1g_inv, d2g_inv = d1g.inverse(), d2g.inverse()
        t1c = pin.torus_coordinates_of(d1g)
        t2hc = pin.torus_coordinates_of(d2g)
        new_um = u1m @ (d1g @ l1 @ d1g_inv) @ (d1g @ r.u_minus @ d1g_inv)
        new_chart = torus_translate(
            tuple(a * b for a, b in zip(t1c, t2hc)), r.chart
        )
        new_up = (d2g_inv @ r.u_plus @ d2g) @ (d2g_inv @ r2 @ d2g) @ h2p
        return MixedPoint(new_um, new_chart, new_up)

    def act_direct(self, g1: Matrix, p: MixedPoint, g2: Matrix) -> MixedPoint:
        """Matrix-level action; defined only over the open torus orbit."""
        pin = self.pinning
        g = g1 @ self.to_matrix(p) @ g2.inverse()
        try:
            l, d, u = pin.ldu(g)
        except NotInBigCell as e:
            raise OutsideDomain(
                DomainReport("act_direct", "translate in the big cell", str(e))
            ) from e
        return MixedPoint(l, torus_point(pin.torus_coordinates_of(d), p.chart.cone), u)

    def to_matrix(self, p: MixedPoint) -> Matrix:
        """Group element represented by p; needs an invertible chart point."""
        t = self.pinning.torus_element(torus_coordinates(p.chart))
        return p.u_minus @ t @ p.u_plus

    # -- transfer between translated charts ---------------------------------------

    def _as_pair(self, g):
        if isinstance(g, Matrix):
            return g, self.pinning.identity()
        a, b = g
        return a, b

    def transfer(self, g1, g2, p: MixedPoint) -> MixedPoint:
        """Move p from the chart translated by g1 to the one translated by g2.

        Each translate is a pair (a, b) acting by q -> a q b^{-1}; a bare
        matrix g stands for the pair (g, e).  transfer(g, g, p) = p.
        """
        a1, b1 = self._as_pair(g1)
        a2, b2 = self._as_pair(g2)
        inner = self.act(a2, p, b2)
        return self.act(a1.inverse(), inner, b1.inverse())

    # -- equivalence of translated points ------------------------------------------

    def check_equivalence(self, a_triple, b_triple, witness_budget: int = 8, seed: int = 0) -> EquivalenceVerdict:
        """Decide whether g1 w g2^{-1} and g1' w' g2'^{-1} are the same point.

        Both triples must carry charts on the same cone.  Witness pairs
        (a1, a2) translate both sides back into that chart; the identity pair
        is always tried first, then seeded random pairs.  A witness for which
        both sides are in-domain decides the question exactly.
        """
        g1, w1, g2 = a_triple
        h1, w2, h2 = b_triple
        if w1.chart.cone != w2.chart.cone:
            raise ValueError("triples must use charts on a common cone")
        rng = random.Random(f"{seed}:equivalence")
        ident = self.pinning.identity()
        attempts = 0
        while attempts < witness_budget:
            if attempts == 0:
                a1, a2 = ident, ident
            else:
                a1 = random_element(self.pinning, rng)
                a2 = random_element(self.pinning, rng)
            attempts += 1
            try:
                r1 = self.act(a1 @ g1, w1, a2 @ g2)
                r2 = self.act(a1 @ h1, w2, a2 @ h2)
            except OutsideDomain:
                continue
            kind = "equivalent" if r1 == r2 else "not_equivalent"
            return EquivalenceVerdict(kind, (a1, a2), attempts)
        return EquivalenceVerdict("inconclusive", None, attempts)
