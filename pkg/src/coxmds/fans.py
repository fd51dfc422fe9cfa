"""Rational polyhedral cones and fans with exact arithmetic.

Cones are spanned by integer ray vectors; membership tests run as exact
Fourier-Motzkin feasibility checks, facets are found by scanning supporting
hyperplanes, and fans store their rays together with maximal cones given by
ray index tuples. Stellar subdivision inserts a new ray and replaces every
cone containing it by the joins of the ray with the facets avoiding it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .intlinalg import (
    fm_eliminate,
    hnf,
    identity_matrix,
    kernel_lattice,
    strictly_positive_functional,
)


@dataclass
class Cone:
    """Convex rational polyhedral cone spanned by integer rays."""

    rays: list

    def __post_init__(self):
        self.rays = [list(map(int, r)) for r in self.rays]

    @property
    def ambient_dim(self) -> int:
        return len(self.rays[0]) if self.rays else 0

    def dim(self) -> int:
        if not self.rays:
            return 0
        return hnf(self.rays).rank

    def contains(self, point) -> bool:
        return cone_contains(self.rays, point)

    def is_pointed(self) -> bool:
        if not self.rays:
            return True
        return strictly_positive_functional(self.rays) is not None

    def facets(self) -> list:
        return cone_facets(self.rays)


def cone_from_rays(rays) -> Cone:
    return Cone([list(r) for r in rays])


def cone_contains(rays, point) -> bool:
    """Whether `point` is a nonnegative rational combination of `rays`."""
    point = list(point)
    if all(x == 0 for x in point):
        return True
    if not rays:
        return False
    k = len(rays)
    n = len(point)
    # variables lambda_1..lambda_k, last column constant
    rows = []
    for i in range(k):
        row = [0] * (k + 1)
        row[i] = 1
        rows.append(row)
    for j in range(n):
        eq = [rays[i][j] for i in range(k)] + [-point[j]]
        rows.append(list(eq))
        rows.append([-x for x in eq])
    system = rows
    for col in range(k):
        system = fm_eliminate(system, col)
    return all(r[k] >= 0 for r in system)


def cone_facets(rays) -> list:
    """Facets of the cone as pairs (normal, ray index tuple).

    The normal is a primitive integer vector, nonnegative on the cone and
    vanishing exactly on the facet's rays; facets are the maximal proper
    faces of the cone.
    """
    rays = [list(map(int, r)) for r in rays]
    if not rays:
        return []
    n = len(rays[0])
    d = hnf(rays).rank
    if d == 0:
        return []
    span_eqs = kernel_lattice(rays)  # e with ray . e = 0 for every ray
    facets = {}
    size = d - 1
    for subset in combinations(range(len(rays)), size) if size else [()]:
        sub = [rays[i] for i in subset]
        if sub and hnf(sub).rank != size:
            continue
        constraints = list(sub) + [list(e) for e in span_eqs]
        # normals orthogonal to the candidate face, inside the ray span
        candidates = kernel_lattice(constraints) if constraints else identity_matrix(n)
        for u in candidates:
            vals = [sum(a * b for a, b in zip(u, r)) for r in rays]
            for sign in (1, -1):
                sv = [sign * v for v in vals]
                if all(v >= 0 for v in sv) and any(v > 0 for v in sv):
                    on_face = tuple(i for i, v in enumerate(sv) if v == 0)
                    if not on_face:
                        continue
                    face_rank = hnf([rays[i] for i in on_face]).rank
                    if face_rank == size:
                        key = on_face
                        if key not in facets:
                            facets[key] = [sign * x for x in u]
    return [(normal, idx) for idx, normal in sorted(facets.items())]


@dataclass
class Fan:
    """Fan given by its rays and maximal cones (tuples of ray indices)."""

    dim: int
    rays: list = field(default_factory=list)
    maximal: list = field(default_factory=list)

    def __post_init__(self):
        self.rays = [list(map(int, r)) for r in self.rays]
        self.maximal = [tuple(sorted(c)) for c in self.maximal]

    def is_empty(self) -> bool:
        return not self.maximal

    def cone(self, index_set) -> Cone:
        return Cone([self.rays[i] for i in index_set])

    def cones_containing(self, point) -> list:
        return [c for c in self.maximal if self.cone(c).contains(point)]

    def copy(self) -> "Fan":
        return Fan(self.dim, [list(r) for r in self.rays], list(self.maximal))


def empty_fan(dim: int) -> Fan:
    return Fan(dim, [], [])


def stellar_subdivision(fan: Fan, v) -> Fan:
    """Insert the ray `v` and subdivide every maximal cone containing it.

    Each such cone is replaced by the joins of `v` with its facets not
    containing `v`; cones not containing `v` are kept. `v` must lie in the
    support of the fan and must not already be a ray.
    """
    v = list(map(int, v))
    for r in fan.rays:
        if _parallel(r, v):
            raise ValueError("subdivision ray already present in the fan")
    hit = fan.cones_containing(v)
    if not hit:
        raise ValueError("subdivision ray lies outside the fan's support")
    new_rays = [list(r) for r in fan.rays] + [v]
    v_index = len(new_rays) - 1
    new_max = []
    for c in fan.maximal:
        if c not in hit:
            new_max.append(c)
            continue
        cone = fan.cone(c)
        for normal, local_idx in cone.facets():
            val = sum(a * b for a, b in zip(normal, v))
            if val == 0:
                continue  # facet contains v
            face_global = tuple(sorted(c[i] for i in local_idx))
            new_max.append(tuple(sorted(face_global + (v_index,))))
    # drop duplicates and cones contained in others
    uniq = sorted(set(new_max), key=lambda t: (-len(t), t))
    kept = []
    for c in uniq:
        if not any(set(c) < set(k) for k in kept):
            kept.append(c)
    return Fan(fan.dim, new_rays, sorted(kept))


def _parallel(a, b) -> bool:
    n = len(a)
    assert len(b) == n
    # both nonzero and positively proportional
    if all(x == 0 for x in a) or all(x == 0 for x in b):
        return False
    ratio = None
    for x, y in zip(a, b):
        if x == 0 and y == 0:
            continue
        if x == 0 or y == 0:
            return False
        q = Fraction(y, x)
        if q <= 0:
            return False
        if ratio is None:
            ratio = q
        elif q != ratio:
            return False
    return True


def fan_consistency_report(fan: Fan) -> list:
    """Light structural checks: valid indices, nonzero distinct rays,
    pointed maximal cones. Returns a list of problem descriptions."""
    problems = []
    for i, r in enumerate(fan.rays):
        if len(r) != fan.dim:
            problems.append(f"ray {i} has wrong dimension")
        if all(x == 0 for x in r):
            problems.append(f"ray {i} is zero")
    for i in range(len(fan.rays)):
        for j in range(i + 1, len(fan.rays)):
            if _parallel(fan.rays[i], fan.rays[j]):
                problems.append(f"rays {i} and {j} coincide up to scaling")
    for c in fan.maximal:
        if any(not 0 <= i < len(fan.rays) for i in c):
            problems.append(f"cone {c} references missing rays")
            continue
        if not fan.cone(c).is_pointed():
            problems.append(f"cone {c} is not pointed")
    return problems
