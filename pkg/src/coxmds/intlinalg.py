"""Exact integer linear algebra over arbitrary-precision integers.

Provides Hermite and Smith normal forms with transformation matrices,
integer kernels and linear solvers, Gale duality between ray matrices and
degree matrices, lattice sections, and finitely generated abelian grading
groups (free part plus cyclic torsion factors).

Matrices are plain lists of lists of Python ints, rows first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

Matrix = list


# ---------------------------------------------------------------------------
# basic matrix helpers


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def copy_matrix(A: Matrix) -> Matrix:
    return [list(row) for row in A]


def transpose(A: Matrix) -> Matrix:
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if not A or not B:
        return []
    n = len(B)
    assert all(len(row) == n for row in A), "dimension mismatch"
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A: Matrix, v: list) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def vec_mat(v: list, A: Matrix) -> list:
    if not A:
        return []
    n = len(A[0])
    return [sum(v[i] * A[i][j] for i in range(len(A))) for j in range(n)]


def mat_eq(A: Matrix, B: Matrix) -> bool:
    return [list(r) for r in A] == [list(r) for r in B]


def _row_sub(M: Matrix, i: int, j: int, q: int) -> None:
    """M[i] -= q * M[j]."""
    if q:
        Mi, Mj = M[i], M[j]
        for k in range(len(Mi)):
            Mi[k] -= q * Mj[k]


def _row_neg(M: Matrix, i: int) -> None:
    M[i] = [-x for x in M[i]]


# ---------------------------------------------------------------------------
# Hermite normal form


@dataclass
class HermiteForm:
    """Row Hermite normal form H = U * A with U unimodular.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot), and `rank` counts the nonzero rows of H.
    """

    H: Matrix
    U: Matrix
    rank: int
    pivots: list


def hnf(A: Matrix) -> HermiteForm:
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, row)) for row in A]
    assert all(len(row) == n for row in H), "ragged matrix"
    U = identity_matrix(m)
    pivots: list = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        while True:
            nz = [i for i in range(row, m) if H[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(H[i][col]), i))
            if i0 != row:
                H[row], H[i0] = H[i0], H[row]
                U[row], U[i0] = U[i0], U[row]
            p = H[row][col]
            clean = True
            for i in range(row + 1, m):
                if H[i][col]:
                    q = H[i][col] // p
                    _row_sub(H, i, row, q)
                    _row_sub(U, i, row, q)
                    if H[i][col]:
                        clean = False
            if clean:
                break
        if row < m and H[row][col] != 0:
            if H[row][col] < 0:
                _row_neg(H, row)
                _row_neg(U, row)
            p = H[row][col]
            for i in range(row):
                q = H[i][col] // p
                _row_sub(H, i, row, q)
                _row_sub(U, i, row, q)
            pivots.append(col)
            row += 1
    return HermiteForm(H=H, U=U, rank=row, pivots=pivots)


def hnf_basis(rows: Matrix) -> Matrix:
    """Canonical basis (HNF, zero rows dropped) of the lattice spanned by `rows`."""
    if not rows:
        return []
    form = hnf(rows)
    return [form.H[i] for i in range(form.rank)]


def row_lattices_equal(A: Matrix, B: Matrix) -> bool:
    return hnf_basis(A) == hnf_basis(B)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass
class SmithForm:
    """U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    D: Matrix
    U: Matrix
    V: Matrix
    rank: int

    def diagonal(self) -> list:
        return [self.D[i][i] for i in range(self.rank)]


def snf(A: Matrix) -> SmithForm:
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = identity_matrix(m)
    V = identity_matrix(n)

    def col_sub(j: int, k: int, q: int) -> None:
        if q:
            for r in range(m):
                D[r][j] -= q * D[r][k]
            for r in range(n):
                V[r][j] -= q * V[r][k]

    def col_swap(j: int, k: int) -> None:
        for r in range(m):
            D[r][j], D[r][k] = D[r][k], D[r][j]
        for r in range(n):
            V[r][j], V[r][k] = V[r][k], V[r][j]

    t = 0
    while t < min(m, n):
        # locate a nonzero pivot in the trailing block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j]:
                    if pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        if i0 != t:
            D[t], D[i0] = D[i0], D[t]
            U[t], U[i0] = U[i0], U[t]
        if j0 != t:
            col_swap(t, j0)
        while True:
            # clear column t
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    _row_sub(D, i, t, q)
                    _row_sub(U, i, t, q)
            if any(D[i][t] for i in range(t + 1, m)):
                i0 = min(
                    (i for i in range(t, m) if D[i][t]),
                    key=lambda i: (abs(D[i][t]), i),
                )
                if i0 != t:
                    D[t], D[i0] = D[i0], D[t]
                    U[t], U[i0] = U[i0], U[t]
                continue
            # clear row t
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    col_sub(j, t, q)
            if any(D[t][j] for j in range(t + 1, n)):
                j0 = min(
                    (j for j in range(t, n) if D[t][j]),
                    key=lambda j: (abs(D[t][j]), j),
                )
                if j0 != t:
                    col_swap(t, j0)
                continue
            if any(D[i][t] for i in range(t + 1, m)):
                continue
            break
        # enforce divisibility of the remaining block by D[t][t]
        p = D[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _row_sub(D, t, offender, -1)  # add offending row to row t
            _row_sub(U, t, offender, -1)
            continue
        if D[t][t] < 0:
            _row_neg(D, t)
            _row_neg(U, t)
        t += 1
    return SmithForm(D=D, U=U, V=V, rank=t)


# ---------------------------------------------------------------------------
# kernels and integral solving


def kernel_lattice(A: Matrix) -> Matrix:
    """Canonical basis (rows) of {x : A @ x = 0} over the integers.

    The kernel of an integer matrix is automatically saturated.
    """
    if not A or not A[0]:
        n = len(A[0]) if A else 0
        return identity_matrix(n)
    form = hnf(transpose(A))
    n = len(A[0])
    basis = [form.U[i] for i in range(form.rank, n)]
    return hnf_basis(basis)


def solve_integral(A: Matrix, b: list):
    """One integer solution x of A @ x = b, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    assert len(b) == m
    # solve y @ At = b for a row vector y, where At = A^T (n x m)
    form = hnf(transpose(A))
    H, U = form.H, form.U
    y = [0] * n
    residual = list(b)
    for i in range(form.rank):
        col = form.pivots[i]
        p = H[i][col]
        if residual[col] % p:
            return None
        q = residual[col] // p
        y[i] = q
        for k in range(m):
            residual[k] -= q * H[i][k]
    if any(residual):
        return None
    return vec_mat(y, U)


def solve_nonneg_integral(A: Matrix, b: list) -> list:
    """All nonnegative integer solutions x of A @ x = b.

    Intended for small systems (ray combinations inside a single cone);
    enumerates a particular solution plus the kernel lattice within the
    nonnegativity bounds by depth-first search over bounded coefficients.
    """
    n = len(A[0]) if A else 0
    part = solve_integral(A, b)
    if part is None:
        return []
    kern = kernel_lattice(A)
    if not kern:
        return [part] if all(x >= 0 for x in part) else []
    # translate the particular solution close to the nonnegative orthant by
    # reducing its pivot coordinates modulo the kernel lattice
    pivots = []
    for row in kern:
        piv = next(j for j in range(n) if row[j])
        pivots.append(piv)
    for _ in range(2):
        for row, piv in zip(kern, pivots):
            q = part[piv] // row[piv]
            if q:
                for j in range(n):
                    part[j] -= q * row[j]
    sols = []
    seen = set()
    found_any = False
    # L-infinity shells in coefficient space; the solution set is convex, so
    # once solutions appear, the first empty shell ends the search
    radius = 0
    while True:
        found_on_shell = False
        coeffs = [0] * len(kern)

        def rec(i: int, on_shell: bool) -> None:
            nonlocal found_on_shell
            if i == len(kern):
                if not on_shell and radius > 0:
                    return
                x = list(part)
                for c, k in zip(coeffs, kern):
                    for j in range(n):
                        x[j] += c * k[j]
                if all(v >= 0 for v in x):
                    tx = tuple(x)
                    if tx not in seen:
                        seen.add(tx)
                        sols.append(x)
                        found_on_shell = True
                return
            for c in range(-radius, radius + 1):
                coeffs[i] = c
                rec(i + 1, on_shell or abs(c) == radius)
            coeffs[i] = 0

        rec(0, False)
        found_any = found_any or found_on_shell
        if found_any and not found_on_shell:
            break
        if not found_any and radius > 32:
            break
        if radius > 64:  # safety stop for unbounded solution cones
            break
        radius += 1
    sols.sort()
    return sols


# ---------------------------------------------------------------------------
# grading groups


@dataclass(frozen=True)
class GradingGroup:
    """Finitely generated abelian group Z^rank + sum of Z/d for d in torsion.

    Elements are integer tuples of length rank + len(torsion); torsion
    coordinates are reduced modulo their order.
    """

    rank: int
    torsion: tuple = ()

    @property
    def length(self) -> int:
        return self.rank + len(self.torsion)

    def zero(self) -> tuple:
        return (0,) * self.length

    def reduce(self, v) -> tuple:
        v = list(v)
        assert len(v) == self.length, "element length mismatch"
        for i, d in enumerate(self.torsion):
            v[self.rank + i] %= d
        return tuple(v)

    def add(self, a, b) -> tuple:
        return self.reduce([x + y for x, y in zip(a, b)])

    def neg(self, a) -> tuple:
        return self.reduce([-x for x in a])

    def scale(self, c: int, a) -> tuple:
        return self.reduce([c * x for x in a])

    def is_zero(self, a) -> bool:
        return self.reduce(a) == self.zero()

    def is_free(self) -> bool:
        return not self.torsion

    def describe(self) -> str:
        parts = []
        if self.rank:
            parts.append(f"Z^{self.rank}" if self.rank > 1 else "Z")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def column_degrees(Q: Matrix, group: GradingGroup) -> list:
    """Degrees of the r variables: columns of Q as group elements."""
    if not Q:
        return []
    r = len(Q[0])
    return [group.reduce([Q[i][j] for i in range(len(Q))]) for j in range(r)]


# ---------------------------------------------------------------------------
# Gale duality


def gale_dual_q(P: Matrix):
    """Degree matrix and grading group of the cokernel of P^T.

    For a ray matrix P (rows span the cocharacter lattice, columns are the
    rays), returns (Q, K) where K = Z^r / im(P^T) and the rows of Q project
    a column vector of Z^r to coordinates in K: free coordinates first,
    then torsion coordinates listed with their orders in K.torsion.
    """
    if not P:
        raise ValueError("empty ray matrix")
    r = len(P[0])
    form = snf(transpose(P))
    k = form.rank
    diag = form.diagonal()
    free_rows = [form.U[i] for i in range(k, r)]
    free_rows = hnf_basis(free_rows) if free_rows else []
    torsion_rows = []
    torsion = []
    for i in range(k):
        if diag[i] > 1:
            torsion.append(diag[i])
            torsion_rows.append([x % diag[i] for x in form.U[i]])
    group = GradingGroup(rank=len(free_rows), torsion=tuple(torsion))
    Q = free_rows + torsion_rows
    return Q, group


def gale_dual_p(Q: Matrix, group: GradingGroup) -> Matrix:
    """Ray matrix dual to a degree matrix: canonical basis of the sublattice
    of integer vectors with trivial degree, {u : Q u = 0 in K}."""
    if not Q:
        raise ValueError("empty degree matrix")
    r = len(Q[0])
    a = group.rank
    t = len(group.torsion)
    assert len(Q) == a + t, "degree matrix does not match grading group"
    # solutions of Q_free u = 0 and Q_tors u + diag(d) s = 0
    A = []
    for i in range(a):
        A.append(list(Q[i]) + [0] * t)
    for i in range(t):
        row = list(Q[a + i]) + [0] * t
        row[r + i] = group.torsion[i]
        A.append(row)
    if not A:
        return identity_matrix(r)
    kern = kernel_lattice(A)
    u_parts = [row[:r] for row in kern]
    return hnf_basis(u_parts)


def row_lattice_section(P: Matrix, zero_coords) -> Matrix:
    """Canonical basis of {w in rowlattice(P) : w_i = 0 for i in zero_coords}.

    `zero_coords` holds 0-based column indices.
    """
    zero = sorted(set(zero_coords))
    if not P:
        return []
    sub = [[row[j] for j in zero] for row in P]  # n x |zero|
    if zero:
        coeff = kernel_lattice(transpose(sub))  # u with u @ sub = 0
    else:
        coeff = identity_matrix(len(P))
    rows = [vec_mat(u, P) for u in coeff]
    return hnf_basis(rows)


def quotient_grading(group: GradingGroup, subgens: list):
    """Quotient of a grading group by the subgroup generated by `subgens`.

    Returns (quotient_group, project) where project maps an element of the
    source group (integer tuple) to its class in the quotient.
    """
    m = group.length
    rel: Matrix = []
    for i, d in enumerate(group.torsion):
        row = [0] * m
        row[group.rank + i] = d
        rel.append(row)
    for g in subgens:
        assert len(g) == m, "subgroup generator length mismatch"
        rel.append(list(map(int, g)))
    if not rel:
        quotient = GradingGroup(rank=m, torsion=())
        proj_rows = identity_matrix(m)

        def project_id(v, _rows=proj_rows):
            return tuple(int(x) for x in v)

        return quotient, project_id
    form = snf(transpose(rel))  # presentation: coker of rel^T acting on Z^m
    k = form.rank
    diag = form.diagonal()
    free_rows = [form.U[i] for i in range(k, m)]
    torsion_rows = []
    torsion = []
    for i in range(k):
        if diag[i] > 1:
            torsion.append(diag[i])
            torsion_rows.append(list(form.U[i]))
    quotient = GradingGroup(rank=len(free_rows), torsion=tuple(torsion))
    rows = [list(r) for r in free_rows] + torsion_rows

    def project(v, _rows=rows, _q=quotient):
        v = list(map(int, v))
        assert len(v) == m, "element length mismatch"
        img = [sum(r[i] * v[i] for i in range(m)) for r in _rows]
        return _q.reduce(img)

    return quotient, project


# ---------------------------------------------------------------------------
# exact rational inequality systems (Fourier-Motzkin)


def fm_eliminate(rows: list, col: int) -> list:
    """Fourier-Motzkin elimination of variable `col` from the system
    {row . x >= 0}; rows are rational vectors. Returns the projected system."""
    pos = [r for r in rows if r[col] > 0]
    neg = [r for r in rows if r[col] < 0]
    zero = [r for r in rows if r[col] == 0]
    out = [list(r) for r in zero]
    for p in pos:
        for q in neg:
            new = [p[col] * qq - q[col] * pp for pp, qq in zip(p, q)]
            new[col] = 0
            if any(new):
                out.append(new)
    return _dedupe_rays(out)


def _dedupe_rays(rows: list) -> list:
    """Drop duplicate rows up to positive scaling (rows of Fractions or ints)."""
    from fractions import Fraction

    seen = set()
    out = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        nz = next((x for x in fr if x), None)
        key = tuple(x / abs(nz) for x in fr) if nz is not None else tuple(fr)
        if key not in seen:
            seen.add(key)
            out.append(fr)
    return out


def strictly_positive_functional(vectors: list):
    """An integer functional phi with phi . v > 0 for every v in `vectors`,
    or None when no such functional exists (the cone spanned by the vectors
    is not pointed or a vector is zero)."""
    vectors = [list(map(int, v)) for v in vectors]
    if not vectors:
        return []
    n = len(vectors[0])
    if any(all(x == 0 for x in v) for v in vectors):
        return None
    # feasibility of phi . v_i >= 1: homogenize with slack s giving
    # phi . v_i - s >= 0, s >= 0, and look for a solution with s > 0
    rows = [v + [-1] for v in vectors]
    rows.append([0] * n + [1])
    system = [list(map(int, r)) for r in rows]
    for col in range(n):
        system = fm_eliminate(system, col)
        if len(system) > 4000:
            system = _dedupe_rays(system)
    # remaining constraints involve s only: c * s >= 0
    lo_ok = True
    for r in system:
        c = r[n]
        if c < 0:
            lo_ok = False  # forces s <= 0
    if not lo_ok:
        return None
    # reconstruct a concrete solution by back-substitution: fix s = 1 and walk
    # the eliminations backwards, choosing each variable inside its interval
    from fractions import Fraction

    values = [Fraction(0)] * (n + 1)
    values[n] = Fraction(1)
    # recompute the elimination stack to know interval bounds per variable
    stack = []
    system = [list(map(Fraction, r)) for r in rows]
    for col in range(n):
        stack.append(system)
        system = [list(map(Fraction, r)) for r in fm_eliminate(system, col)]
    for col in reversed(range(n)):
        sysrows = stack[col]
        lower = None  # max of bounds from rows with positive coefficient
        upper = None  # min of bounds from rows with negative coefficient
        for r in sysrows:
            c = r[col]
            if c == 0:
                continue
            rest = sum(
                Fraction(r[j]) * values[j] for j in range(n + 1) if j != col
            )
            bound = -rest / c
            if c > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        if lower is None and upper is None:
            values[col] = Fraction(0)
        elif lower is None:
            values[col] = upper - 1
        elif upper is None:
            values[col] = lower + 1
        else:
            if lower > upper:
                return None
            values[col] = (lower + upper) / 2
    phi = values[:n]
    # clear denominators
    den = 1
    for x in phi:
        den = den * x.denominator // gcd(den, x.denominator)
    phi_int = [int(x * den) for x in phi]
    if any(sum(p * v for p, v in zip(phi_int, vec)) <= 0 for vec in vectors):
        return None
    return phi_int


def degree_lattices_equal(Q1: Matrix, K1: GradingGroup, Q2: Matrix, K2: GradingGroup) -> bool:
    """Whether two surjective gradings of the same polynomial ring agree up to
    an isomorphism of the grading group: their degree-zero sublattices of Z^r
    (with torsion congruences) coincide."""
    if not Q1 or not Q2:
        return mat_eq(Q1, Q2)
    if len(Q1[0]) != len(Q2[0]):
        return False
    return gale_dual_p(Q1, K1) == gale_dual_p(Q2, K2)
