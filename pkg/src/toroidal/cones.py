"""Rational polyhedral cones and fans in the cocharacter lattice.

Cones are given by primitive integer ray generators and must be strongly
convex; the dual cone, the Hilbert basis of the dual monoid, the face
lattice and fan-level predicates (validity, chamber support, smoothness,
properness via the wall criterion on the Weyl orbit fan) are all computed
in exact integer/rational arithmetic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import ceil, gcd

from .linalg import Matrix, dot, integer_kernel, integer_rank, primitive_vector

__all__ = [
    "MAX_DIM",
    "MAX_RAYS",
    "HILBERT_BOX_LIMIT",
    "ZeroCone",
    "NotInMonoid",
    "InvalidFan",
    "generators_from_halfspaces",
    "Cone",
    "Fan",
    "fan_validate",
    "intersect",
    "is_face",
    "face_witness",
    "supported_in_chamber",
    "is_smooth",
    "is_proper",
    "interior_cocharacter",
]

MAX_DIM = 4
MAX_RAYS = 12
HILBERT_BOX_LIMIT = 2_000_000


class ZeroCone(ValueError):
    """Raised when an operation needs a nonzero cone."""


class NotInMonoid(ValueError):
    """The vector is not a member of the dual monoid."""


class InvalidFan(ValueError):
    """A set of cones violates the fan axioms; carries the violation list."""

    def __init__(self, violations):
        super().__init__(f"{len(violations)} fan violation(s)")
        self.violations = violations


def _as_int_vector(v):
    out = []
    for x in v:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integer coordinate in {v}")
            out.append(int(x))
        elif isinstance(x, int):
            out.append(x)
        else:
            raise ValueError(f"non-integer coordinate in {v}")
    return tuple(out)


def _clear_denominators(v):
    from math import lcm

    denom = 1
    for x in v:
        denom = lcm(denom, Fraction(x).denominator)
    return tuple(int(x * denom) for x in v)


def generators_from_halfspaces(normals, dim):
    """Extreme rays and lineality basis of {x : <n, x> >= 0 for all n}.

    Incremental double description: the lineality space shrinks as
    halfspaces arrive; rays are pruned by the exact extremality criterion
    (active constraints of rank dim - lineality - 1).  The returned
    lineality basis is the saturated integer kernel of the normal matrix,
    and the rays are primitive, reduced modulo the lineality, and sorted.
    """
    normals = [_as_int_vector(n) for n in normals]
    normals = [n for n in normals if any(n)]
    lin = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    rays: list = []
    processed: list = []

    def prune(cur_rays):
        kept = []
        seen = set()
        need = dim - len(lin) - 1
        for r in cur_rays:
            r = primitive_vector(r)
            if not any(r) or r in seen:
                continue
            active = [p for p in processed if dot(p, r) == 0]
            if (integer_rank(Matrix(active)) if active else 0) == need:
                kept.append(r)
                seen.add(r)
        return kept

    for h in normals:
        processed.append(h)
        hit = next((b for b in lin if dot(h, b) != 0), None)
        if hit is not None:
            b0 = hit if dot(h, hit) > 0 else tuple(-x for x in hit)
            s0 = dot(h, b0)
            lin = [
                primitive_vector(tuple(s0 * b[k] - dot(h, b) * b0[k] for k in range(dim)))
                for b in lin
                if b is not hit
            ]
            rays = [
                tuple(s0 * r[k] - dot(h, r) * b0[k] for k in range(dim)) for r in rays
            ]
            rays.append(b0)
        else:
            plus = [r for r in rays if dot(h, r) > 0]
            zero = [r for r in rays if dot(h, r) == 0]
            minus = [r for r in rays if dot(h, r) < 0]
            combos = [
                tuple(
                    dot(h, rp) * rm[k] - dot(h, rm) * rp[k] for k in range(dim)
                )
                for rp in plus
                for rm in minus
            ]
            rays = plus + zero + combos
        rays = prune(rays)

    if normals:
        lineality = integer_kernel(Matrix(normals))
    else:
        lineality = tuple(
            tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)
        )
    rays = [_reduce_mod_lattice(r, lineality) for r in rays]
    return tuple(sorted(set(rays))), tuple(sorted(lineality))


def _reduce_mod_lattice(ray, basis):
    """Canonical representative of a ray direction modulo a lattice span."""
    if not basis:
        return primitive_vector(ray)
    work = [list(map(Fraction, b)) for b in basis]
    vec = list(map(Fraction, ray))
    pivots = []
    row = 0
    for col in range(len(vec)):
        piv = next((i for i in range(row, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        inv = 1 / work[row][col]
        work[row] = [x * inv for x in work[row]]
        for i in range(len(work)):
            if i != row and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[row])]
        pivots.append((row, col))
        row += 1
    for r, col in pivots:
        if vec[col]:
            f = vec[col]
            vec = [a - f * b for a, b in zip(vec, work[r])]
    out = _clear_denominators(vec)
    return primitive_vector(out)


class Cone:
    """Strongly convex rational polyhedral cone, canonicalized on build.

    Derived data (dual generators, Hilbert basis, faces, binomial
    relations) is cached on the instance; all of it is deterministic.
    """

    def __init__(self, rays, dim=None):
        rays = [_as_int_vector(r) for r in rays]
        if dim is None:
            if not rays:
                raise ValueError("dimension required for the zero cone")
            dim = len(rays[0])
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}")
        if any(len(r) != dim for r in rays):
            raise ValueError("rays of mixed dimension")
        if any(not any(r) for r in rays):
            raise ValueError("zero vector is not a ray")
        if len(rays) > MAX_RAYS:
            raise ValueError(f"at most {MAX_RAYS} rays supported")
        self.dim = dim
        prim = sorted({primitive_vector(r) for r in rays})
        dual_rays, dual_lin = generators_from_halfspaces(prim, dim)
        back, back_lin = generators_from_halfspaces(
            list(dual_rays)
            + [b for b in dual_lin]
            + [tuple(-x for x in b) for b in dual_lin],
            dim,
        )
        if back_lin:
            raise ValueError("cone contains a line")
        self.rays = back
        self.dual_rays = dual_rays
        self.dual_lineality = dual_lin
        self._dual_gens = tuple(dual_rays) + tuple(
            v for b in dual_lin for v in (b, tuple(-x for x in b))
        )
        self._hilbert = None
        self._hilbert_split = None
        self._faces = None
        self._relations = None

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.dim == other.dim and self.rays == other.rays

    def __hash__(self):
        return hash((self.dim, self.rays))

    def __repr__(self):
        return f"Cone(dim={self.dim}, rays={list(self.rays)})"

    def is_zero(self) -> bool:
        return not self.rays

    def contains(self, v) -> bool:
        v = tuple(v)
        return all(dot(g, v) >= 0 for g in self._dual_gens)

    def dual_generators(self):
        """Generators of the dual cone: extreme rays plus +-lineality."""
        return self._dual_gens

    # -- Hilbert basis ------------------------------------------------------

    def _splitting(self):
        """Quotient data splitting the dual monoid off its unit group.

        Returns (group_basis, V, W, facet_normals, extreme_rays) where
        group_basis are the d unit directions (rows of W[:d]), column
        operations via V give quotient coordinates x -> (x @ V)[d:], and
        the facet normals / extreme rays describe the pointed image.
        """
        if self._hilbert_split is not None:
            return self._hilbert_split
        n = self.dim
        if self.rays:
            kernel = integer_kernel(Matrix(self.rays))
        else:
            kernel = tuple(
                tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
            )
        d = len(kernel)
        if d:
            from .linalg import integer_inverse, smith_normal_form

            # From U @ kmat @ V = [I_d; 0] the first d columns of U^{-1}
            # span the kernel lattice, so U gives coordinates in which the
            # unit group is the first d axes.
            kmat = Matrix([list(k) for k in kernel]).transpose()  # n x d
            u, dd, _ = smith_normal_form(kmat)
            for t in range(d):
                assert dd[t, t] == 1, "kernel lattice must be saturated"
            w = u
            w_inv = integer_inverse(w)
            group_basis = tuple(
                tuple(int(w_inv[i, j]) for i in range(n)) for j in range(d)
            )
        else:
            w = Matrix.identity(n)
            w_inv = w
            group_basis = ()
        q_dim = n - d

        def quotient(x):
            full = w @ tuple(x)
            return tuple(int(c) for c in full[d:])

        def lift(q):
            full = (0,) * d + tuple(q)
            out = w_inv @ tuple(full)
            return tuple(int(c) for c in out)

        if q_dim:
            projected = [quotient(r) for r in self.dual_rays]
            facets, facets_lin = generators_from_halfspaces(projected, q_dim)
            assert not facets_lin, "pointed quotient must have pointed dual"
            extreme, ext_lin = generators_from_halfspaces(facets, q_dim)
            assert not ext_lin
        else:
            facets, extreme = (), ()
        self._hilbert_split = (group_basis, quotient, lift, facets, extreme, q_dim)
        return self._hilbert_split

    @property
    def hilbert_basis(self):
        if self._hilbert is None:
            group_basis, _, lift, facets, extreme, q_dim = self._splitting()
            elems = []
            for b in group_basis:
                elems.append(b)
                elems.append(tuple(-x for x in b))
            if q_dim:
                pointed = _pointed_hilbert(facets, extreme, q_dim)
                elems.extend(lift(h) for h in pointed)
            self._hilbert = tuple(sorted(set(elems)))
        return self._hilbert

    def monoid_decompose(self, m):
        """Nonnegative integer coefficients over the Hilbert basis, or raise.

        Returns a dict {basis_element: coefficient} whose weighted sum is m.
        """
        m = _as_int_vector(m)
        if len(m) != self.dim:
            raise ValueError("dimension mismatch")
        for r in self.rays:
            if dot(m, r) < 0:
                raise NotInMonoid(f"{m} pairs negatively with ray {r}")
        group_basis, quotient, lift, facets, extreme, q_dim = self._splitting()
        hb = self.hilbert_basis
        coeffs = {h: 0 for h in hb}
        if q_dim:
            q = quotient(m)
            pointed = [h for h in hb if any(quotient(h))]
            decomp = _pointed_decompose(q, [quotient(h) for h in pointed], facets)
            if decomp is None:
                raise NotInMonoid(f"{m} is not a lattice member of the dual monoid")
            lifted_part = [0] * self.dim
            for h, c in zip(pointed, decomp):
                coeffs[h] = c
                for k in range(self.dim):
                    lifted_part[k] += c * h[k]
            rem = tuple(a - b for a, b in zip(m, lifted_part))
        else:
            rem = m
        # the remainder lies in the unit group spanned by group_basis
        if group_basis:
            bmat = Matrix([list(b) for b in group_basis]).transpose()
            sol = _solve_integer(bmat, rem)
            if sol is None:
                raise NotInMonoid(f"{m} is not in the dual monoid lattice")
            for b, k in zip(group_basis, sol):
                if k >= 0:
                    coeffs[b] += k
                else:
                    coeffs[tuple(-x for x in b)] += -k
        elif any(rem):
            raise NotInMonoid(f"{m} is not in the dual monoid")
        assert _weighted_sum(coeffs, self.dim) == tuple(m)
        return coeffs

    def relations(self, max_degree: int = 6):
        """Binomial relations among Hilbert elements up to a total degree.

        Each relation is a pair of exponent dicts with equal weighted sums.
        """
        if self._relations is None:
            hb = self.hilbert_basis
            buckets = {}
            for size in range(max_degree + 1):
                for combo in itertools.combinations_with_replacement(hb, size):
                    total = tuple(sum(c[k] for c in combo) for k in range(self.dim))
                    buckets.setdefault(total, []).append(combo)
            rels = []
            for combos in buckets.values():
                if len(combos) < 2:
                    continue
                base = _exponents(combos[0])
                for other in combos[1:]:
                    rels.append((base, _exponents(other)))
            self._relations = tuple(rels)
        return self._relations

    # -- faces ---------------------------------------------------------------

    def face_ray_sets(self):
        """All faces, as frozensets of rays (the cone itself included)."""
        if self._faces is None:
            all_rays = frozenset(self.rays)
            vanishing = [
                frozenset(r for r in self.rays if dot(g, r) == 0)
                for g in self.dual_rays
            ]
            found = {all_rays}
            frontier = [all_rays]
            while frontier:
                nxt = []
                for s in frontier:
                    for v in vanishing:
                        t = s & v
                        if t not in found:
                            found.add(t)
                            nxt.append(t)
                frontier = nxt
            found.add(frozenset())
            self._faces = tuple(
                sorted(found, key=lambda s: (len(s), sorted(s)))
            )
        return self._faces

    def faces(self):
        return tuple(Cone(sorted(s), self.dim) for s in self.face_ray_sets())


def _exponents(combo):
    out = {}
    for h in combo:
        out[h] = out.get(h, 0) + 1
    return tuple(sorted(out.items()))


def _weighted_sum(coeffs, dim):
    total = [0] * dim
    for h, c in coeffs.items():
        for k in range(dim):
            total[k] += c * h[k]
    return tuple(total)


def _solve_integer(mat: Matrix, target):
    """Integer solution x of mat @ x = target, or None."""
    if mat.ncols == 0:
        return () if not any(target) else None
    aug = [list(r) for r in mat.rows]
    n, k = len(aug), mat.ncols
    a = [[Fraction(aug[i][j]) for j in range(k)] for i in range(n)]
    b = [Fraction(t) for t in target]
    row = 0
    piv_cols = []
    for col in range(k):
        piv = next((i for i in range(row, n) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        b[row], b[piv] = b[piv], b[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        b[row] *= inv
        for i in range(n):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
                b[i] -= f * b[row]
        piv_cols.append(col)
        row += 1
    for i in range(row, n):
        if b[i]:
            return None
    x = [Fraction(0)] * k
    for r, col in enumerate(piv_cols):
        x[col] = b[r]
    if any(v.denominator != 1 for v in x):
        return None
    return tuple(int(v) for v in x)


def _pointed_hilbert(facets, extreme, dim):
    """Hilbert basis of a pointed full-dimensional monoid by zonotope sieve.

    Every irreducible element lies in the zonotope spanned by the extreme
    rays, hence in its coordinate box; reducibility of a candidate is
    witnessed by another candidate, so the sieve is exact.
    """
    lo = [sum(min(0, r[k]) for r in extreme) for k in range(dim)]
    hi = [sum(max(0, r[k]) for r in extreme) for k in range(dim)]
    size = 1
    for a, b in zip(lo, hi):
        size *= b - a + 1
        if size > HILBERT_BOX_LIMIT:
            raise ValueError("Hilbert candidate box too large for desk scale")
    members = []
    for point in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if any(point) and all(dot(f, point) >= 0 for f in facets):
            members.append(point)
    member_set = set(members)
    basis = []
    for h in members:
        reducible = False
        for c in members:
            if c == h:
                continue
            rest = tuple(a - b for a, b in zip(h, c))
            if rest in member_set:
                reducible = True
                break
        if not reducible:
            basis.append(h)
    return sorted(basis)


def _pointed_decompose(target, gens, facets):
    """Nonnegative integer combination of gens equal to target, or None."""
    weights = [sum(dot(f, g) for f in facets) for g in gens]
    assert all(w > 0 for w in weights), "generators must be outside the unit group"
    memo = set()

    def member(x):
        return all(dot(f, x) >= 0 for f in facets)

    def search(x):
        if not any(x):
            return []
        if x in memo:
            return None
        for idx, g in enumerate(gens):
            rest = tuple(a - b for a, b in zip(x, g))
            if member(rest):
                sub = search(rest)
                if sub is not None:
                    return [idx] + sub
        memo.add(x)
        return None

    picks = search(tuple(target))
    if picks is None:
        return None
    out = [0] * len(gens)
    for idx in picks:
        out[idx] += 1
    return tuple(out)


# -- face relations ----------------------------------------------------------


def face_witness(face: Cone, cone: Cone):
    """A dual-monoid element u with face = cone intersect u-perp, or None."""
    if face.dim != cone.dim:
        return None
    ray_set = set(cone.rays)
    if any(r not in ray_set for r in face.rays):
        # extreme rays of a face are extreme in the ambient cone
        return None
    vanish_on_face = [
        g
        for g in cone.dual_rays
        if all(dot(g, r) == 0 for r in face.rays)
    ]
    u = tuple(sum(g[k] for g in vanish_on_face) for k in range(cone.dim))
    cut = tuple(sorted(r for r in cone.rays if dot(u, r) == 0))
    if cut == face.rays:
        return u
    return None


def is_face(face: Cone, cone: Cone) -> bool:
    return face_witness(face, cone) is not None


def intersect(c1: Cone, c2: Cone) -> Cone:
    if c1.dim != c2.dim:
        raise ValueError("dimension mismatch")
    rays, lin = generators_from_halfspaces(
        list(c1.dual_generators()) + list(c2.dual_generators()), c1.dim
    )
    assert not lin, "intersection of pointed cones is pointed"
    return Cone(rays, c1.dim)


# -- fans ---------------------------------------------------------------------


class Fan:
    """Finite face-closed set of cones; validity is checked separately."""

    def __init__(self, cones, dim):
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}")
        closed = {Cone((), dim)}
        for c in cones:
            if c.dim != dim:
                raise ValueError("cone dimension mismatch")
            for f in c.faces():
                closed.add(f)
        self.dim = dim
        self.cones = tuple(sorted(closed, key=lambda c: (len(c.rays), c.rays)))

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self.dim == other.dim and self.cones == other.cones

    def __hash__(self):
        return hash((self.dim, self.cones))

    def __repr__(self):
        return f"Fan(dim={self.dim}, cones={len(self.cones)})"

    def contains_cone(self, c: Cone) -> bool:
        return any(c == x for x in self.cones)

    def maximal_cones(self):
        out = []
        for c in self.cones:
            rs = set(c.rays)
            if not any(
                rs < set(d.rays) for d in self.cones if d is not c
            ):
                out.append(c)
        return tuple(out)


def fan_validate(fan: Fan):
    """List of violations of the fan axioms; empty means valid."""
    violations = []
    cones = fan.cones
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            meet = intersect(cones[i], cones[j])
            problems = []
            if not fan.contains_cone(meet):
                problems.append("intersection missing from fan")
            if not is_face(meet, cones[i]) or not is_face(meet, cones[j]):
                problems.append("intersection is not a common face")
            if problems:
                violations.append(
                    {
                        "cones": [list(map(list, cones[i].rays)),
                                  list(map(list, cones[j].rays))],
                        "intersection": list(map(list, meet.rays)),
                        "reason": "; ".join(problems),
                    }
                )
    return violations


def supported_in_chamber(fan: Fan, rd) -> bool:
    return all(
        rd.in_negative_chamber(r) for c in fan.cones for r in c.rays
    )


def cone_index(c: Cone) -> int:
    """Product of the nonzero diagonal entries of the ray matrix's SNF."""
    if not c.rays:
        return 1
    from .linalg import smith_normal_form

    _, d, _ = smith_normal_form(Matrix(c.rays))
    idx = 1
    for t in range(min(d.nrows, d.ncols)):
        if d[t, t]:
            idx *= int(d[t, t])
    return idx


def cone_is_smooth(c: Cone) -> bool:
    if not c.rays:
        return True
    from .linalg import smith_normal_form

    _, d, _ = smith_normal_form(Matrix(c.rays))
    nonzero = [int(d[t, t]) for t in range(min(d.nrows, d.ncols)) if d[t, t]]
    return len(nonzero) == len(c.rays) and all(x == 1 for x in nonzero)


def is_smooth(fan: Fan) -> bool:
    return all(cone_is_smooth(c) for c in fan.cones)


def orbit_fan(fan: Fan, weyl) -> Fan:
    """The fan of all Weyl translates of the given cones."""
    moved = []
    for w in weyl.elements:
        for c in fan.cones:
            rays = [tuple(int(x) for x in (w.n_matrix @ r)) for r in c.rays]
            moved.append(Cone(rays, fan.dim))
    return Fan(moved, fan.dim)


def is_proper(fan: Fan, weyl) -> bool:
    """Completeness of the Weyl orbit fan, by the wall-pairing criterion."""
    orbit = orbit_fan(fan, weyl)
    violations = fan_validate(orbit)
    if violations:
        raise InvalidFan(violations)
    n = orbit.dim
    maximal = orbit.maximal_cones()
    full = [c for c in maximal if _cone_rank(c) == n]
    if not full or len(full) != len(maximal):
        return False
    for wall in orbit.cones:
        if _cone_rank(wall) != n - 1:
            continue
        touching = [c for c in full if is_face(wall, c)]
        if len(touching) != 2:
            return False
    return True


def _cone_rank(c: Cone) -> int:
    if not c.rays:
        return 0
    return integer_rank(Matrix(c.rays))


def interior_cocharacter(c: Cone):
    if c.is_zero():
        raise ZeroCone("the zero cone has no interior cocharacter")
    return tuple(sum(r[k] for r in c.rays) for k in range(c.dim))
