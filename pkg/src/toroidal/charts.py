"""Points of a toric chart as multiplicative monoid maps.

A ChartPoint assigns a field value (Fraction or RatFun) to each Hilbert
basis element of the dual monoid of its cone.  Boundary points carry
zeros; torus points are everywhere invertible.  All sanctioned
constructors preserve the binomial-relation invariant structurally; raw
value maps are accepted only after the degree-bounded relation check.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from .cones import Cone, NotInMonoid, interior_cocharacter
from .linalg import dot
from .ratfun import RatFun, evaluate_at_zero

__all__ = [
    "ChartPoint",
    "ZeroCoordinate",
    "LimitDoesNotExist",
    "NotAFace",
    "ZeroScalar",
    "InvalidChartValues",
    "torus_point",
    "limit_point",
    "evaluate_character",
    "torus_translate",
    "coweight_scale",
    "chart_inclusion",
    "wonderful_coords",
    "in_closed_orbit",
    "specialize_at_zero",
    "torus_coordinates",
]


class ZeroCoordinate(ValueError):
    """Torus coordinates must be invertible."""


class LimitDoesNotExist(ValueError):
    """The cocharacter lies outside the cone, so the limit point is undefined."""


class NotAFace(ValueError):
    """Chart inclusion requires the source cone to be a face of the target."""


class ZeroScalar(ValueError):
    """A scalar that must be invertible is zero."""


class InvalidChartValues(ValueError):
    """A raw value map violates a binomial relation of the monoid."""


def _as_scalar(x):
    if isinstance(x, RatFun):
        return x.constant_value() if x.is_constant() else x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"unsupported scalar {x!r}")


def _power(base, k: int):
    if k == 0:
        return Fraction(1)
    if base == 0:
        if k < 0:
            raise ZeroScalar("zero cannot be raised to a negative power")
        return Fraction(0)
    return base ** k


class ChartPoint:
    """A point of the affine chart of a cone over Q or Q(eps)."""

    __slots__ = ("cone", "values")

    def __init__(self, cone: Cone, values):
        vals = {tuple(h): _as_scalar(v) for h, v in values.items()}
        if set(vals) != set(cone.hilbert_basis):
            raise InvalidChartValues("values must be keyed by the Hilbert basis")
        self.cone = cone
        self.values = vals
        for left, right in cone.relations():
            if self._monomial(left) != self._monomial(right):
                raise InvalidChartValues(
                    f"relation violated: {left} vs {right}"
                )

    @classmethod
    def _trusted(cls, cone: Cone, values) -> "ChartPoint":
        p = object.__new__(cls)
        p.cone = cone
        p.values = {tuple(h): _as_scalar(v) for h, v in values.items()}
        return p

    def _monomial(self, exponents):
        out = Fraction(1)
        for h, e in exponents:
            if e:
                out = out * _power(self.values[h], e)
        return out

    @property
    def field(self) -> str:
        if any(isinstance(v, RatFun) for v in self.values.values()):
            return "Q(eps)"
        return "Q"

    def is_invertible(self) -> bool:
        return all(v != 0 for v in self.values.values())

    def __eq__(self, other):
        if not isinstance(other, ChartPoint):
            return NotImplemented
        return self.cone == other.cone and self.values == other.values

    def __hash__(self):
        return hash((self.cone, tuple(sorted(self.values.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        body = ", ".join(f"{h}:{v}" for h, v in sorted(self.values.items()))
        return f"ChartPoint({body})"


def torus_point(coords, cone: Cone) -> ChartPoint:
    """The embedded torus point with the given invertible coordinates."""
    coords = [_as_scalar(c) for c in coords]
    if len(coords) != cone.dim:
        raise ValueError("coordinate count must match the lattice rank")
    if any(c == 0 for c in coords):
        raise ZeroCoordinate("torus coordinates must be nonzero")
    values = {
        h: _character_value(coords, h) for h in cone.hilbert_basis
    }
    return ChartPoint._trusted(cone, values)


def _character_value(coords, m):
    out = Fraction(1)
    for c, e in zip(coords, m):
        if e:
            out = out * _power(c, int(e))
    return out


def identity_point(cone: Cone) -> ChartPoint:
    return torus_point((Fraction(1),) * cone.dim, cone)


def limit_point(delta, cone: Cone) -> ChartPoint:
    """The boundary point lim_{eps->0} of the one-parameter curve of delta."""
    delta = tuple(int(x) for x in delta)
    pairings = {h: dot(h, delta) for h in cone.hilbert_basis}
    if any(v < 0 for v in pairings.values()):
        raise LimitDoesNotExist(f"{delta} is not in the cone")
    values = {
        h: Fraction(1) if pairings[h] == 0 else Fraction(0)
        for h in cone.hilbert_basis
    }
    return ChartPoint._trusted(cone, values)


def evaluate_character(p: ChartPoint, m):
    """Value of a dual-monoid element at the point (0^0 = 1)."""
    coeffs = p.cone.monoid_decompose(m)
    out = Fraction(1)
    for h, c in coeffs.items():
        if c:
            out = out * _power(p.values[h], c)
    return out


def torus_translate(t_coords, p: ChartPoint) -> ChartPoint:
    t_coords = [_as_scalar(c) for c in t_coords]
    if any(c == 0 for c in t_coords):
        raise ZeroCoordinate("translation by a non-invertible point")
    values = {
        h: _character_value(t_coords, h) * v for h, v in p.values.items()
    }
    return ChartPoint._trusted(p.cone, values)


def coweight_scale(p: ChartPoint, delta, scalar) -> ChartPoint:
    """Scale values by scalar^<h, delta>; realizes the coweight twist."""
    scalar = _as_scalar(scalar)
    if scalar == 0:
        raise ZeroScalar("coweight scaling needs an invertible scalar")
    delta = tuple(int(x) for x in delta)
    values = {
        h: _power(scalar, int(dot(h, delta))) * v for h, v in p.values.items()
    }
    return ChartPoint._trusted(p.cone, values)


def chart_inclusion(p: ChartPoint, sigma: Cone) -> ChartPoint:
    """Push a point of a face's chart into the chart of the bigger cone."""
    from .cones import face_witness

    if face_witness(p.cone, sigma) is None:
        raise NotAFace(f"{p.cone} is not a face of {sigma}")
    values = {h: evaluate_character(p, h) for h in sigma.hilbert_basis}
    return ChartPoint._trusted(sigma, values)


def wonderful_coords(p: ChartPoint, rd):
    """Values of the negated simple roots; the wonderful-coordinate shadow."""
    out = []
    for i in range(rd.rank):
        m = tuple(-x for x in rd.simple_root(i))
        out.append(evaluate_character(p, m))
    return tuple(out)


def in_closed_orbit(p: ChartPoint) -> bool:
    for h in p.cone.hilbert_basis:
        if any(dot(h, r) != 0 for r in p.cone.rays):
            if p.values[h] != 0:
                return False
    return True


def specialize_at_zero(p: ChartPoint) -> ChartPoint:
    """Entrywise limit at eps = 0; raises PoleAtZero when a value has a pole."""
    values = {h: evaluate_at_zero(v) for h, v in p.values.items()}
    return ChartPoint._trusted(p.cone, values)


def torus_coordinates(p: ChartPoint):
    """Recover invertible lattice-basis coordinates from a torus point."""
    cone = p.cone
    w = tuple(
        sum(g[k] for g in cone.dual_rays) for k in range(cone.dim)
    )
    w_val = evaluate_character(p, w)
    if w_val == 0:
        raise ZeroScalar("point is not in the torus")
    coords = []
    for j in range(cone.dim):
        e_j = tuple(1 if k == j else 0 for k in range(cone.dim))
        k = 0
        for r in cone.rays:
            num = -dot(e_j, r)
            den = dot(w, r)
            assert den > 0
            k = max(k, ceil(num / den))
        shifted = tuple(e_j[t] + k * w[t] for t in range(cone.dim))
        val = evaluate_character(p, shifted)
        if k:
            val = val / _power(w_val, k)
        if val == 0:
            raise ZeroScalar("point is not in the torus")
        coords.append(val)
    return tuple(coords)
