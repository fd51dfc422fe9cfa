"""Graded presentations of Mori dream spaces inside toric ambient spaces.

A presentation bundles a ray matrix P, an optional fan over P's columns, and
homogeneous relations G in a polynomial ring graded by the Gale-dual degree
matrix Q.  The operations here modify such presentations: adding or removing
redundant generators (stretch/compress), toric ambient modifications given by
an extra ray (modify), blow-ups of subvarieties through saturated Rees
algebra presentations, blow-ups of point lists, divisor contractions, and
cyclic covers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from .fans import Fan, fan_consistency_report
from .groebner import (
    colon_ideal,
    equal_ideals,
    groebner_basis,
    krull_dimension,
    normal_form,
    saturate_variable,
    _canonical_generators,
)
from .intlinalg import (
    GradingGroup,
    column_degrees,
    gale_dual_p,
    gale_dual_q,
    hnf,
    row_lattice_section,
    quotient_grading,
    solve_nonneg_integral,
    strictly_positive_functional,
)
from .polyring import Poly, PolynomialRing, degree_of


@dataclass(frozen=True)
class CEMDS:
    """Embedded Mori dream space presentation (P, fan, G) with grading data.

    `Q` lists the degree matrix rows, free coordinates first and torsion
    coordinates (orders in `group.torsion`) after them.  `P` may be absent
    for grading-only presentations (e.g. after contracting with a torsion
    quotient), `fan` may be absent for fan-free pipelines.  `weak` marks
    presentations whose relations are certified only up to saturation by the
    variables.
    """

    ring: PolynomialRing
    Q: tuple
    group: GradingGroup
    gens: tuple
    P: tuple = None
    fan: Fan = None
    weak: bool = False
    notes: tuple = ()

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    @property
    def var_degrees(self) -> list:
        return column_degrees([list(r) for r in self.Q], self.group)

    @property
    def q_rows(self) -> list:
        return [list(r) for r in self.Q]

    @property
    def p_rows(self):
        if self.P is None:
            return None
        return [list(r) for r in self.P]

    def positive_weights(self):
        """Positive integer weights making every relation weighted-homogeneous
        (a strictly positive functional on the free degree columns), or None
        when the free part of the grading is not pointed."""
        a = self.group.rank
        if a == 0:
            return None
        cols = [[self.Q[i][j] for i in range(a)] for j in range(self.nvars)]
        phi = strictly_positive_functional(cols)
        if phi is None:
            return None
        return [sum(p * c for p, c in zip(phi, col)) for col in cols]

    def describe(self) -> str:
        lines = [
            f"variables: {self.nvars}",
            f"grading group: {self.group.describe()}",
            f"relations: {len(self.gens)}",
            f"weak: {'yes' if self.weak else 'no'}",
        ]
        if self.P is not None:
            lines.append(f"ray matrix: {len(self.P)} x {self.nvars}")
        if self.fan is not None:
            lines.append(f"fan: {len(self.fan.maximal)} maximal cones")
        return "\n".join(lines)


def _with_notes(X: CEMDS, *messages) -> CEMDS:
    return replace(X, notes=X.notes + tuple(messages))


def _columns(rows, j=None):
    if j is None:
        return [[row[i] for row in rows] for i in range(len(rows[0]))]
    return [row[j] for row in rows]


def _check_homogeneous(gens, var_degrees, group):
    for g in gens:
        try:
            degree_of(g, var_degrees, group)
        except ValueError as exc:
            raise ValueError(f"inhomogeneous generator {g}: {exc}") from None


def is_variable(p: Poly):
    """The 0-based index if p is c*T(i+1) with a single term, else None."""
    if len(p.coeffs) != 1:
        return None
    (m, _), = p.coeffs.items()
    if sum(m) == 1:
        return m.index(1)
    return None


def create_cemds(P, fan=None, gens=(), ring=None, weak=False) -> CEMDS:
    """Assemble a presentation from a ray matrix, optional fan, relations.

    P must have full row rank; the degree matrix and grading group are the
    Gale dual of P, and every relation must be homogeneous for them.
    """
    P = [list(map(int, row)) for row in P]
    if not P or not P[0]:
        raise ValueError("empty ray matrix")
    if hnf(P).rank != len(P):
        raise ValueError("ray matrix is not of full row rank")
    r = len(P[0])
    gens = list(gens)
    if gens:
        ring = gens[0].ring
    elif ring is None:
        ring = PolynomialRing(r)
    if ring.nvars != r:
        raise ValueError(
            f"ring has {ring.nvars} variables but the ray matrix has {r} columns"
        )
    if fan is not None:
        if fan.rays != _columns(P):
            raise ValueError("fan rays differ from the ray matrix columns")
        if fan.dim != len(P):
            raise ValueError("fan dimension differs from the ray matrix")
    Q, group = gale_dual_q(P)
    var_degrees = column_degrees(Q, group)
    _check_homogeneous(gens, var_degrees, group)
    return CEMDS(
        ring=ring,
        Q=tuple(tuple(row) for row in Q),
        group=group,
        gens=tuple(gens),
        P=tuple(tuple(row) for row in P),
        fan=fan,
        weak=weak,
    )


def _assemble(ring, Q, group, gens, P=None, fan=None, weak=False, notes=()) -> CEMDS:
    var_degrees = column_degrees(Q, group)
    _check_homogeneous(gens, var_degrees, group)
    return CEMDS(
        ring=ring,
        Q=tuple(tuple(row) for row in Q),
        group=group,
        gens=tuple(gens),
        P=None if P is None else tuple(tuple(row) for row in P),
        fan=fan,
        weak=weak,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# orbit closure ideals


def _saturate_by_variables(gens, var_indices, weights):
    current = [g for g in gens if not g.is_zero()]
    for i in var_indices:
        if not current:
            break
        current = saturate_variable(current, i, weights)
    return _canonical_generators(current)


def orbit_closure_ideal(X: CEMDS, z) -> list:
    """Generators of the vanishing ideal of the characteristic-quasitorus
    orbit closure through the point with Cox coordinates z.

    The ideal is generated by the variables at zero coordinates together
    with binomials T^{u+} - z^u T^{u-} for u running over a lattice basis of
    the row-space vectors of P supported off the zero set, saturated by the
    product of the remaining variables.
    """
    ring = X.ring
    z = [Fraction(v) for v in z]
    if len(z) != X.nvars:
        raise ValueError("point length differs from the variable count")
    if all(v == 0 for v in z):
        raise ValueError("the origin is not a valid point")
    for g in X.gens:
        if g.evaluate(z) != 0:
            raise ValueError(f"point does not lie on the variety: {g} != 0")
    zeros = [i for i, v in enumerate(z) if v == 0]
    nonzero = [i for i, v in enumerate(z) if v != 0]
    p_rows = X.p_rows
    if p_rows is None:
        p_rows = gale_dual_p(X.q_rows, X.group)
    section = row_lattice_section(p_rows, zeros)
    gens = [ring.variable(i) for i in zeros]
    for u in section:
        plus = [max(e, 0) for e in u]
        minus = [max(-e, 0) for e in u]
        scale = Fraction(1)
        for i, e in enumerate(u):
            if e:
                scale *= z[i] ** e
        gens.append(ring.monomial(plus) - scale * ring.monomial(minus))
    return _saturate_by_variables(gens, nonzero, X.positive_weights())


# ---------------------------------------------------------------------------
# stretch and compress


def stretch_cemds(X: CEMDS, new_gens, compute_fan=False) -> CEMDS:
    """Add one variable per given Cox-ring member f, with relation T_new - f.

    The degree matrix gains the degree columns of the new generators and the
    ray matrix is recomputed by Gale duality.  When requested, the fan (if
    any) is lifted by joining every maximal cone with all new rays; the lift
    is kept only if it passes the fan consistency checks.
    """
    new_gens = list(new_gens)
    if not new_gens:
        return X
    ring = X.ring
    r = ring.nvars
    var_degrees = X.var_degrees
    degrees = []
    for f in new_gens:
        if f.is_zero():
            raise ValueError("cannot stretch by zero")
        if is_variable(f) is not None:
            raise ValueError(f"stretch generator {f} is already a variable")
        degrees.append(degree_of(f, var_degrees, X.group))
    big = PolynomialRing(r + len(new_gens), name=ring.name)
    gens2 = [g.extend(big) for g in X.gens]
    for j, f in enumerate(new_gens):
        gens2.append(big.variable(r + j) - f.extend(big))
    Q2 = [list(row) + [deg[i] for deg in degrees] for i, row in enumerate(X.q_rows)]
    P2 = gale_dual_p(Q2, X.group)
    fan2 = None
    notes = list(X.notes)
    if compute_fan and X.fan is not None:
        new_idx = tuple(range(r, r + len(new_gens)))
        lifted = Fan(
            dim=len(P2),
            rays=_columns(P2),
            maximal=[tuple(c) + new_idx for c in X.fan.maximal],
        )
        problems = fan_consistency_report(lifted)
        if problems:
            notes.append("fan lift failed: " + "; ".join(problems))
        else:
            fan2 = lifted
    elif compute_fan and X.fan is None:
        notes.append("fan lift skipped: input has no fan")
    return _assemble(big, Q2, X.group, gens2, P2, fan2, X.weak, notes)


def stretch_point(X: CEMDS, z, new_gens) -> list:
    """Cox coordinates of a point after stretching by `new_gens`."""
    z = [Fraction(v) for v in z]
    return z + [f.evaluate(z) for f in new_gens]


def _drop_variable(p: Poly, i: int, small: PolynomialRing) -> Poly:
    out = {}
    for m, c in p.coeffs.items():
        if m[i]:
            raise ValueError("polynomial still uses the removed variable")
        out[m[:i] + m[i + 1 :]] = c
    return Poly(small, out)


def _linear_elimination_candidate(polys):
    """First (poly index, variable, coefficient) with the variable occurring
    exactly once, linearly and alone in its term."""
    for k, p in enumerate(polys):
        monos = p.monomials()
        for m in reversed(monos):  # prefer low monomials: bare variables
            if sum(m) != 1:
                continue
            i = m.index(1)
            if all(mm[i] == 0 for mm in monos if mm != m):
                return k, i, p.coeffs[m]
    return None


def compress_cemds(X: CEMDS):
    """Eliminate redundant generators: while some relation is linear in a
    variable (c*T_i + h with h free of T_i), substitute T_i -> -h/c and drop
    both.  Returns (presentation, survivors) where survivors lists the kept
    original variable indices in order.
    """
    ring = X.ring
    gens = [g for g in X.gens if not g.is_zero()]
    Q_cols = [[row[j] for row in X.q_rows] for j in range(ring.nvars)]
    survivors = list(range(ring.nvars))
    changed = False
    while True:
        if not gens:
            break
        basis = groebner_basis(gens).polys
        found = _linear_elimination_candidate(basis)
        if found is None:
            gens = basis
            break
        k, i, c = found
        pivot = basis[k]
        h = pivot - c * ring.variable(i)
        image = h * (Fraction(-1) / c)
        small = PolynomialRing(ring.nvars - 1, name=ring.name)
        new_gens = []
        for idx, p in enumerate(basis):
            if idx == k:
                continue
            q = p.substitute({i: image})
            if not q.is_zero():
                new_gens.append(_drop_variable(q, i, small))
        ring = small
        gens = new_gens
        del Q_cols[i]
        del survivors[i]
        changed = True
    if not changed:
        return X, survivors
    Q2 = [[col[i] for col in Q_cols] for i in range(X.group.length)]
    P2 = gale_dual_p(Q2, X.group) if Q_cols else None
    notes = list(X.notes)
    if X.fan is not None:
        notes.append("fan dropped by compress")
    result = _assemble(ring, Q2, X.group, gens, P2, None, X.weak, notes)
    return result, survivors


def compress_point(z, survivors) -> list:
    return [Fraction(z[i]) for i in survivors]


# ---------------------------------------------------------------------------
# contraction


def contract_cemds(X: CEMDS, keep) -> CEMDS:
    """Contract the variables flagged 0: set each to one, drop it, and pass
    to the quotient grading by its degree.  P is recomputed from the new
    degree matrix when the quotient is free; otherwise the result carries
    grading data only."""
    keep = list(keep)
    if len(keep) != X.nvars:
        raise ValueError("keep vector length differs from the variable count")
    ring = X.ring
    gens = list(X.gens)
    group = X.group
    q_cols = [tuple(row[j] for row in X.q_rows) for j in range(ring.nvars)]
    notes = list(X.notes)
    for i in sorted((j for j, flag in enumerate(keep) if not flag), reverse=True):
        small = PolynomialRing(ring.nvars - 1, name=ring.name)
        new_gens = []
        for g in gens:
            q = g.substitute({i: 1})
            if not q.is_zero():
                new_gens.append(_drop_variable(q, i, small))
        group, project = quotient_grading(group, [group.reduce(q_cols[i])])
        q_cols = [project(c) for c in (q_cols[:i] + q_cols[i + 1 :])]
        ring = small
        gens = new_gens
    Q2 = [[col[i] for col in q_cols] for i in range(group.length)]
    if group.is_free():
        if not q_cols:
            P2 = None
        elif group.length == 0:
            # trivial grading: the ray lattice is all of Z^n
            n = len(q_cols)
            P2 = [[int(i == j) for j in range(n)] for i in range(n)]
        else:
            P2 = gale_dual_p(Q2, group)
    else:
        P2 = None
        notes.append("grading-only result: quotient grading has torsion")
    if X.fan is not None:
        notes.append("fan dropped by contract")
    return _assemble(ring, Q2, group, gens, P2, None, X.weak, notes)


# ---------------------------------------------------------------------------
# toric ambient modification


def modify_cemds(X: CEMDS, P2, fan2=None, verify=False, combination=None):
    """Proper transform under the toric modification appending one ray.

    P2 must extend X's ray matrix by a single last column v; v is written as
    a nonnegative integer combination v = sum c_i p_i over the rays of one
    fan cone (or a caller-supplied combination).  Generators are pulled back
    through T_i -> T_i * T_new^{c_i} and saturated by T_new.  Returns
    (presentation, report).
    """
    P2 = [list(map(int, row)) for row in P2]
    p_rows = X.p_rows
    if p_rows is None:
        raise ValueError("modification needs a ray matrix")
    if len(P2) != len(p_rows) or any(
        row2[: X.nvars] != row1 for row1, row2 in zip(p_rows, P2)
    ):
        raise ValueError("new ray matrix must extend the old one by one column")
    if any(len(row) != X.nvars + 1 for row in P2):
        raise ValueError("new ray matrix must extend the old one by one column")
    v = _columns(P2, X.nvars)
    if combination is None:
        combination = _cone_combination(X, v)
    combination = [int(c) for c in combination]
    if len(combination) != X.nvars or any(c < 0 for c in combination):
        raise ValueError("invalid ray combination")
    if [sum(p_rows[i][j] * combination[j] for j in range(X.nvars)) for i in range(len(p_rows))] != v:
        raise ValueError("combination does not produce the new ray")

    r2 = X.nvars + 1
    big = PolynomialRing(r2, name=X.ring.name)
    t_new = big.variable(r2 - 1)
    mapping = {
        i: big.variable(i) * t_new**c for i, c in enumerate(combination) if c
    }
    if fan2 is not None:
        if fan2.rays != _columns(P2) or fan2.dim != len(P2):
            raise ValueError("fan rays differ from the new ray matrix columns")
    pulled = []
    for g in X.gens:
        h = g.extend(big)
        if mapping:
            h = h.substitute(mapping)
        pulled.append(h)
    Q2, group2 = gale_dual_q(P2)
    gens2 = _exceptional_saturation(pulled, r2 - 1, Q2, group2)
    report = {"combination": combination, "checks": [], "verified": False}
    if verify:
        ok = _nonzerodivisor_checks(big, gens2, report)
        report["verified"] = ok
    weak2 = X.weak or not report["verified"]
    result = _assemble(big, Q2, group2, gens2, P2, fan2, weak2, X.notes)
    return result, report


def _cone_combination(X: CEMDS, v):
    if X.fan is None:
        raise ValueError("no fan available to locate the new ray")
    for cone_idx in X.fan.cones_containing(v):
        rays = [X.fan.rays[i] for i in cone_idx]
        A = [[rays[j][i] for j in range(len(rays))] for i in range(len(v))]
        solutions = solve_nonneg_integral(A, v)
        if solutions:
            combo = [0] * X.nvars
            for j, idx in enumerate(cone_idx):
                combo[idx] = solutions[0][j]
            return combo
    raise ValueError("new ray is not a nonnegative combination over any fan cone")


def _exceptional_saturation(gens, var, Q2, group2):
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    a = group2.rank
    cols = [[Q2[i][j] for i in range(a)] for j in range(len(Q2[0]))] if a else []
    phi = strictly_positive_functional(cols) if cols else None
    weights = None
    if phi is not None:
        weights = [sum(p * c for p, c in zip(phi, col)) for col in cols]
    return saturate_variable(gens, var, weights)


def _nonzerodivisor_checks(ring, gens, report) -> bool:
    ok = True
    for i in range(ring.nvars):
        if not gens:
            passed = True
        else:
            quotient = colon_ideal(gens, ring.variable(i))
            passed = equal_ideals(quotient, gens)
        report["checks"].append((f"T({i + 1}) nonzerodivisor", passed))
        ok = ok and passed
    return ok


# ---------------------------------------------------------------------------
# blow-ups via saturated Rees algebras


def blowup_cemds(
    X: CEMDS,
    center,
    multiplicities=None,
    compute_fan=False,
    nu_indices=None,
    run_test=True,
):
    """Blow up along the center cut out by homogeneous f_1..f_l (in the
    smooth locus, caller-asserted), with coprime multiplicities d_i.

    Builds the Rees presentation I' = I + <T_{r+j} T_E^{d_j} - f_j>,
    saturates by the exceptional variable, extends the degree matrix by the
    block row (0,..,0, -d_1..-d_l, 1), runs the dimension test comparing
    dim(I2 + <T_E>) against dim(I2 + <T_E, T^nu>), and compresses the
    result.  Returns (presentation, report); the report carries the
    pre-compress degree matrix block, the dimension-test values and the
    surviving variable indices.
    """
    center = list(center)
    if not center:
        raise ValueError("empty blow-up center")
    l = len(center)
    if multiplicities is None:
        multiplicities = [1] * l
    mults = [int(d) for d in multiplicities]
    if len(mults) != l:
        raise ValueError("one multiplicity per center generator is required")
    if any(d < 1 for d in mults):
        raise ValueError("multiplicities must be positive")
    g = 0
    for d in mults:
        g = gcd(g, d)
    if g != 1:
        raise ValueError("multiplicities must be coprime")
    ring = X.ring
    var_degrees = X.var_degrees
    w = []
    for f in center:
        if f.is_zero():
            raise ValueError("zero center generator")
        w.append(degree_of(f, var_degrees, X.group))

    r1 = ring.nvars
    r2 = r1 + l + 1
    big = PolynomialRing(r2, name=ring.name)
    t_exc = big.variable(r2 - 1)
    gens2 = [p.extend(big) for p in X.gens]
    for j, (f, d) in enumerate(zip(center, mults)):
        gens2.append(big.variable(r1 + j) * t_exc**d - f.extend(big))

    a = X.group.rank
    q_rows = X.q_rows
    Q2 = []
    for i in range(a):
        Q2.append(list(q_rows[i]) + [w[j][i] for j in range(l)] + [0])
    Q2.append([0] * r1 + [-d for d in mults] + [1])
    for i in range(len(X.group.torsion)):
        Q2.append(list(q_rows[a + i]) + [w[j][a + i] for j in range(l)] + [0])
    group2 = GradingGroup(rank=a + 1, torsion=X.group.torsion)

    weights1 = X.positive_weights()
    weights2 = None
    if weights1 is not None:
        wdeg = [sum(wi * e for wi, e in zip(weights1, m)) for m in
                (next(iter(f.coeffs)) for f in center)]
        m_scale = max(mults) + 1
        weights2 = (
            [m_scale * wt for wt in weights1]
            + [m_scale * wd - d for wd, d in zip(wdeg, mults)]
            + [1]
        )
        if any(wt <= 0 for wt in weights2):
            weights2 = None
    saturated = saturate_variable(gens2, r2 - 1, weights2)
    if any(p.total_degree() == 0 for p in saturated):
        raise ValueError("the proper transform is empty (unit ideal)")

    report = {
        "q2_block": [list(row) for row in Q2],
        "multiplicities": mults,
        "test_passed": None,
        "dims": None,
        "nu_indices": None,
    }
    if run_test:
        if nu_indices is None:
            center_plus = list(center) + list(X.gens)
            gb_center = groebner_basis([p for p in center_plus if not p.is_zero()])
            nu_indices = [
                i
                for i in range(r1)
                if not normal_form(ring.variable(i), gb_center).is_zero()
            ]
        nu_indices = list(nu_indices)
        nu_mono = [0] * r2
        for i in nu_indices:
            nu_mono[i] = 1
        with_exc = list(saturated) + [t_exc]
        dim_a = krull_dimension(with_exc)
        dim_b = krull_dimension(with_exc + [big.monomial(nu_mono)])
        report["nu_indices"] = nu_indices
        report["dims"] = (dim_a, dim_b)
        report["test_passed"] = dim_a > dim_b
    weak2 = X.weak or (run_test and not report["test_passed"])

    P2 = gale_dual_p(Q2, group2)
    notes = list(X.notes)
    if compute_fan:
        notes.append("fan not recomputed by the Rees-algebra blow-up")
    pre = _assemble(big, Q2, group2, saturated, P2, None, weak2, notes)
    result, survivors = compress_cemds(pre)
    report["survivors"] = survivors
    return result, report


def blowup_point(z, center, survivors) -> list:
    """Cox coordinates of a point away from the center, lifted through a
    multiplicity-one blow-up followed by its compress step."""
    z = [Fraction(v) for v in z]
    big = z + [f.evaluate(z) for f in center] + [Fraction(1)]
    return [big[i] for i in survivors]


def blowup_cemds_points(X: CEMDS, points, compute_fan=False, run_test=False) -> CEMDS:
    """Blow up a list of smooth points, each given by Cox coordinates on X.

    For each point in order: compute the orbit closure ideal, stretch by its
    non-variable generators, blow up all of them with multiplicity one, and
    compress.  Later points are carried along through every step.
    """
    current = X
    pending = [[Fraction(v) for v in z] for z in points]
    for step in range(len(pending)):
        z = pending[step]
        fiber = orbit_closure_ideal(current, z)
        non_vars = [f for f in fiber if is_variable(f) is None]
        stretched = stretch_cemds(current, non_vars, compute_fan=False)
        ring2 = stretched.ring
        center = []
        next_var = current.nvars
        for f in fiber:
            i = is_variable(f)
            if i is None:
                center.append(ring2.variable(next_var))
                next_var += 1
            else:
                center.append(ring2.variable(i))
        lifted = [stretch_point(current, p, non_vars) for p in pending[step + 1 :]]
        current, report = blowup_cemds(
            stretched,
            center,
            [1] * len(center),
            compute_fan=compute_fan,
            run_test=run_test,
        )
        pending[step + 1 :] = [
            blowup_point(p, center, report["survivors"]) for p in lifted
        ]
    return current


# ---------------------------------------------------------------------------
# cyclic covers


def cyclic_cover_cox(X: CEMDS, n: int, f: Poly) -> CEMDS:
    """Presentation of the degree-n cyclic cover branched over V(f): add a
    variable S of degree deg(f)/n and the relation S^n - f."""
    n = int(n)
    if n < 1:
        raise ValueError("the cover degree must be positive")
    deg = degree_of(f, X.var_degrees, X.group)
    a = X.group.rank
    new_deg = []
    for i in range(a):
        if deg[i] % n:
            raise ValueError(
                f"degree {deg} of the branch divisor is not divisible by {n}"
            )
        new_deg.append(deg[i] // n)
    for i, d in enumerate(X.group.torsion):
        t = deg[a + i] % d
        g = gcd(n, d)
        if t % g:
            raise ValueError(
                f"degree {deg} of the branch divisor is not divisible by {n}"
            )
        # solve n*s = t mod d
        s = (t // g) * pow(n // g, -1, d // g) % (d // g)
        new_deg.append(s)
    ring = X.ring
    big = PolynomialRing(ring.nvars + 1, name=ring.name)
    s_var = big.variable(ring.nvars)
    gens2 = [g.extend(big) for g in X.gens] + [s_var**n - f.extend(big)]
    Q2 = [list(row) + [new_deg[i]] for i, row in enumerate(X.q_rows)]
    P2 = gale_dual_p(Q2, X.group)
    notes = list(X.notes)
    if X.fan is not None:
        notes.append("fan dropped by the cyclic cover")
    return _assemble(big, Q2, X.group, gens2, P2, None, X.weak, notes)


# ---------------------------------------------------------------------------
# graded changes of coordinates


def permute_cemds(X: CEMDS, perm, signs=None) -> CEMDS:
    """Relabel the variables by T_new(j) = signs[j] * T_old(perm[j]).

    `perm` is a 0-based permutation; `signs`, when given, lists one unit
    (+1 or -1) per new variable.  Degree-matrix and ray-matrix columns and
    the fan rays are reordered along with the variables, so the result is
    the same presentation in different coordinates.
    """
    n = X.nvars
    perm = [int(i) for i in perm]
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of the variable indices")
    gens = [g.permute(perm) for g in X.gens]
    if signs is not None:
        signs = [int(s) for s in signs]
        if len(signs) != n or any(s not in (-1, 1) for s in signs):
            raise ValueError("signs must list +1 or -1 once per variable")
        flip = {i: -X.ring.variable(i) for i, s in enumerate(signs) if s == -1}
        if flip:
            gens = [g.substitute(flip) for g in gens]
    Q2 = [tuple(row[j] for j in perm) for row in X.q_rows]
    P2 = None
    if X.P is not None:
        P2 = tuple(tuple(row[j] for j in perm) for row in X.p_rows)
    fan2 = None
    if X.fan is not None:
        inverse = [0] * n
        for j, i in enumerate(perm):
            inverse[i] = j
        rays = [list(X.fan.rays[i]) for i in perm]
        maximal = [tuple(sorted(inverse[i] for i in cone)) for cone in X.fan.maximal]
        fan2 = Fan(X.fan.dim, rays, maximal)
    return replace(X, gens=tuple(gens), Q=tuple(Q2), P=P2, fan=fan2)
