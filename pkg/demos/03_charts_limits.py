"""Toric charts: points as monoid maps, one-parameter limits, gluing.

A point of the chart attached to a cone assigns a value to every Hilbert
basis element, multiplicatively.  Torus points have all values invertible;
boundary points set some values to zero; limits along cocharacters land on
the boundary exactly when the cocharacter lies in the cone.
"""

from fractions import Fraction

from toroidal.charts import (
    chart_inclusion,
    evaluate_character,
    identity_point,
    in_closed_orbit,
    limit_point,
    specialize_at_zero,
    torus_point,
    torus_translate,
    wonderful_coords,
)
from toroidal.cones import Cone, interior_cocharacter
from toroidal.ratfun import EPS
from toroidal.rootdata import RootDatum

ray = Cone([(-1,)], dim=1)
p = torus_point((Fraction(2),), ray)
print("torus point on the A_1 chart:", dict(p.values))
print("character value at m = -1:", evaluate_character(p, (-1,)))

lam0 = limit_point((-1,), ray)
print("limit along the cocharacter (-1):", dict(lam0.values))
print("in the closed orbit:", in_closed_orbit(lam0))
try:
    limit_point((1,), ray)
except ValueError as e:
    print("limit along (+1) does not exist:", e)

rd1 = RootDatum.of_type("A", 1)
print("wonderful coordinates of the torus point:", wonderful_coords(p, rd1))
print("wonderful coordinates at the limit:", wonderful_coords(lam0, rd1))

# translation by the torus rescales chart values through the pairing
q = torus_translate((Fraction(3),), lam0)
print("\ntranslate of the limit by t = 3:", dict(q.values))

# charts glue along faces: a point of a face chart includes into the big chart
wedge = Cone([(-1, 0), (-1, -2)])
face = Cone([(-1, 0)], dim=2)
pt = limit_point((-1, 0), face)
included = chart_inclusion(pt, wedge)
print("\nface-chart point:", dict(pt.values))
print("included into the wedge chart:", dict(included.values))
print("interior cocharacter of the wedge:", interior_cocharacter(wedge))

# charts also make sense over Q(eps); specialization takes eps to 0
curve = torus_point((Fraction(2) + EPS,), ray)
print("\ncurve through the chart:", dict(curve.values))
print("specialized at eps = 0:", dict(specialize_at_zero(curve).values))
print("identity point of the zero cone:", dict(identity_point(Cone([], dim=1)).values))
