"""Groebner bases over the rationals with integer-primitive internals.

Monomials are encoded as single Python integers: the low bits hold the
field-aligned exponent vector (16 bits per variable), the high bits an
order key that is additive under monomial multiplication, so multiplying
monomials is integer addition and comparing encodings realizes the term
order. Divisibility tests run field-parallel on the exponent part.

The basis algorithm is Buchberger with normal selection (pairs popped by
smallest lcm), the Gebauer-Moeller pair criteria, fraction-free pseudo
reduction with content stripping, and full inter-reduction to the unique
reduced basis (integer-primitive, positive leading coefficients, elements
sorted by descending leading monomial).
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heapify, heappop
from math import gcd

from .polyring import Poly, PolynomialRing

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_EXP = (1 << (FIELD_BITS - 1)) - 1


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    def __init__(self, nvars: int):
        self.nvars = nvars
        self.PB = FIELD_BITS * nvars
        self.PMASK = (1 << self.PB) - 1
        guard = 0
        for i in range(nvars):
            guard |= 1 << (FIELD_BITS * i + FIELD_BITS - 1)
        self.GUARD = guard
        self.gens = [
            (self._gen_key(i) << self.PB) | (1 << (FIELD_BITS * i))
            for i in range(nvars)
        ]

    def _gen_key(self, i: int) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def encode(self, exps) -> int:
        m = 0
        for e, gen in zip(exps, self.gens):
            if e:
                if e > MAX_EXP:
                    raise OverflowError("exponent too large for packed encoding")
            m += e * gen
        return m

    def decode(self, m: int) -> tuple:
        p = m & self.PMASK
        out = []
        for _ in range(self.nvars):
            out.append(p & FIELD_MASK)
            p >>= FIELD_BITS
        return tuple(out)

    def lcm(self, a: int, b: int) -> int:
        ea = self.decode(a)
        eb = self.decode(b)
        return self.encode(tuple(max(x, y) for x, y in zip(ea, eb)))

    def coprime(self, a: int, b: int) -> bool:
        ea = self.decode(a)
        eb = self.decode(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))


class DegRevLex(MonomialOrder):
    """(Weighted) degree-reverse-lexicographic order; the variable in the last
    slot is the reverse-lexicographically smallest one."""

    def __init__(self, nvars: int, weights=None):
        self.weights = list(weights) if weights is not None else [1] * nvars
        assert len(self.weights) == nvars and all(w > 0 for w in self.weights)
        super().__init__(nvars)

    def _gen_key(self, i: int) -> int:
        S = 1 << (FIELD_BITS * self.nvars)
        return self.weights[i] * S - (1 << (FIELD_BITS * i))


class Lex(MonomialOrder):
    def _gen_key(self, i: int) -> int:
        return 1 << (FIELD_BITS * (self.nvars - 1 - i))


class BlockElimination(MonomialOrder):
    """Eliminates the first `block` variables: degree-reverse-lexicographic
    inside each block, blocks compared lexicographically."""

    DEG_HEADROOM = 32

    def __init__(self, nvars: int, block: int):
        assert 0 < block < nvars
        self.block = block
        super().__init__(nvars)

    def _gen_key(self, i: int) -> int:
        k = self.block
        n2 = self.nvars - k
        S1 = 1 << (FIELD_BITS * k)
        S2 = 1 << (FIELD_BITS * n2)
        M = 1 << (self.DEG_HEADROOM + FIELD_BITS * n2)
        if i < k:
            return (S1 - (1 << (FIELD_BITS * i))) * M
        j = i - k
        return S2 - (1 << (FIELD_BITS * j))


def make_order(nvars: int, spec="degrevlex") -> MonomialOrder:
    if isinstance(spec, MonomialOrder):
        return spec
    if spec == "degrevlex":
        return DegRevLex(nvars)
    if spec == "lex":
        return Lex(nvars)
    if isinstance(spec, tuple) and spec[0] == "block":
        return BlockElimination(nvars, spec[1])
    if isinstance(spec, tuple) and spec[0] == "wdegrevlex":
        return DegRevLex(nvars, weights=spec[1])
    raise ValueError(f"unknown order {spec!r}")


# ---------------------------------------------------------------------------
# engine polynomials: descending lists of (encoded monomial, int coefficient)


def _poly_to_terms(poly: Poly, order: MonomialOrder, perm=None):
    if poly.is_zero():
        return []
    den = 1
    for c in poly.coeffs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    terms = []
    for m, c in poly.coeffs.items():
        if perm is not None:
            m = tuple(m[p] for p in perm)
        terms.append((order.encode(m), int(c * den)))
    terms.sort(reverse=True)
    return _primitive(terms)


def _terms_to_poly(terms, order: MonomialOrder, ring: PolynomialRing, perm=None):
    coeffs = {}
    for m, c in terms:
        exps = order.decode(m)
        if perm is not None:
            orig = [0] * len(exps)
            for slot, e in enumerate(exps):
                orig[perm[slot]] = e
            exps = tuple(orig)
        coeffs[exps] = Fraction(c)
    return Poly(ring, coeffs)


def _primitive(terms):
    if not terms:
        return terms
    g = 0
    for _, c in terms:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        terms = [(m, c // g) for m, c in terms]
    return terms


def _positive_lead(terms):
    if terms and terms[0][1] < 0:
        return [(m, -c) for m, c in terms]
    return terms


def _combine(f, af, sf, g, ag, sg):
    """af * x^sf * f + ag * x^sg * g for descending term lists."""
    out = []
    i = j = 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        mf = f[i][0] + sf
        mg = g[j][0] + sg
        if mf > mg:
            c = af * f[i][1]
            if c:
                out.append((mf, c))
            i += 1
        elif mf < mg:
            c = ag * g[j][1]
            if c:
                out.append((mg, c))
            j += 1
        else:
            c = af * f[i][1] + ag * g[j][1]
            if c:
                out.append((mf, c))
            i += 1
            j += 1
    while i < nf:
        c = af * f[i][1]
        if c:
            out.append((f[i][0] + sf, c))
        i += 1
    while j < ng:
        c = ag * g[j][1]
        if c:
            out.append((g[j][0] + sg, c))
        j += 1
    return out


def _support_mask(packed: int, nvars: int) -> int:
    mask = 0
    for i in range(nvars):
        if packed & (FIELD_MASK << (FIELD_BITS * i)):
            mask |= 1 << i
    return mask


class _Reducer:
    __slots__ = ("lm", "plm", "mask", "terms")

    def __init__(self, terms, order: MonomialOrder):
        self.terms = terms
        self.lm = terms[0][0]
        self.plm = self.lm & order.PMASK
        self.mask = _support_mask(self.plm, order.nvars)


def _normal_form_terms(f, reducers, order: MonomialOrder):
    """Full pseudo normal form of term list `f` against `reducers`.

    The result equals a positive integer multiple of the true normal form,
    returned content-stripped.
    """
    PMASK = order.PMASK
    GUARD = order.GUARD
    nvars = order.nvars
    result = []
    work = list(f)
    wi = 0
    steps = 0
    while wi < len(work):
        m, c = work[wi]
        pm = m & PMASK
        mask = _support_mask(pm, nvars)
        hit = None
        for red in reducers:
            if red.mask & ~mask:
                continue
            if ((pm | GUARD) - red.plm) & GUARD == GUARD:
                hit = red
                break
        if hit is None:
            result.append((m, c))
            wi += 1
            continue
        lc = hit.terms[0][1]
        d = gcd(c, lc)
        alpha = lc // d
        beta = c // d
        if alpha < 0:
            alpha, beta = -alpha, -beta
        shift = m - hit.lm
        if alpha != 1 and result:
            result = [(mm, alpha * cc) for mm, cc in result]
        work = _combine(work[wi:], alpha, 0, hit.terms, -beta, shift)
        wi = 0
        steps += 1
        if steps % 64 == 0 and (result or work):
            g = 0
            for _, cc in result:
                g = gcd(g, cc)
                if g == 1:
                    break
            if g != 1:
                for _, cc in work:
                    g = gcd(g, cc)
                    if g == 1:
                        break
            if g > 1:
                result = [(mm, cc // g) for mm, cc in result]
                work = [(mm, cc // g) for mm, cc in work]
    return _primitive(result)


# ---------------------------------------------------------------------------
# Buchberger with Gebauer-Moeller pair handling


def _buchberger(term_lists, order: MonomialOrder):
    entries: list = []  # _Reducer objects, index-stable
    alive: set = set()
    pairs: list = []  # heap of (lcm encoding, i, j)

    def alive_reducers():
        return [entries[i] for i in sorted(alive)]

    def update(h_idx: int):
        nonlocal pairs
        h = entries[h_idx]
        cand = []
        for i in alive:
            g = entries[i]
            cand.append((order.lcm(h.lm, g.lm), i))
        cand.sort()
        kept = []  # (lcm, idx, coprime_flag)
        for l, i in cand:
            cop = order.coprime(h.lm, entries[i].lm)
            if cop:
                kept.append((l, i, True))
                continue
            covered = False
            for l2, _, _ in kept:
                if _divides_enc(l2, l, order):
                    covered = True
                    break
            if not covered:
                kept.append((l, i, False))
        fresh = [(l, i, h_idx) for l, i, cop in kept if not cop]
        filtered = []
        for l, i, j in pairs:
            if not _divides_enc(h.lm, l, order):
                filtered.append((l, i, j))
            elif order.lcm(entries[i].lm, h.lm) == l or order.lcm(entries[j].lm, h.lm) == l:
                filtered.append((l, i, j))
        filtered.extend(fresh)
        heapify(filtered)
        pairs = filtered
        for i in list(alive):
            if _divides_enc(h.lm, entries[i].lm, order):
                alive.discard(i)
        alive.add(h_idx)

    # seed with the inter-reduced inputs
    for terms in sorted(term_lists, key=lambda t: t[0][0] if t else -1):
        if not terms:
            continue
        h = _normal_form_terms(terms, alive_reducers(), order)
        if not h:
            continue
        h = _positive_lead(h)
        entries.append(_Reducer(h, order))
        update(len(entries) - 1)

    while pairs:
        l, i, j = heappop(pairs)
        fi, fj = entries[i], entries[j]
        d = gcd(fi.terms[0][1], fj.terms[0][1])
        ai = fj.terms[0][1] // d
        aj = fi.terms[0][1] // d
        s = _combine(fi.terms, ai, l - fi.lm, fj.terms, -aj, l - fj.lm)
        if not s:
            continue
        h = _normal_form_terms(s, alive_reducers(), order)
        if not h:
            continue
        h = _positive_lead(h)
        entries.append(_Reducer(h, order))
        update(len(entries) - 1)

    # full inter-reduction to the unique reduced basis
    basis = [entries[i].terms for i in sorted(alive)]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda t: t[0][0], reverse=True)
        for i in range(len(basis)):
            others = [_Reducer(t, order) for k, t in enumerate(basis) if k != i and t]
            h = _normal_form_terms(basis[i], others, order)
            h = _positive_lead(_primitive(h))
            if h != basis[i]:
                changed = True
                basis[i] = h
        basis = [t for t in basis if t]
    basis.sort(key=lambda t: t[0][0], reverse=True)
    return basis


def _divides_enc(a: int, b: int, order: MonomialOrder) -> bool:
    pa = a & order.PMASK
    pb = b & order.PMASK
    return ((pb | order.GUARD) - pa) & order.GUARD == order.GUARD


# ---------------------------------------------------------------------------
# public interface


class GroebnerBasis:
    """Reduced Groebner basis bound to a ring, order and variable permutation."""

    def __init__(self, ring: PolynomialRing, order: MonomialOrder, basis_terms, perm=None):
        self.ring = ring
        self.order = order
        self.perm = perm
        self._terms = basis_terms
        self._reducers = [_Reducer(t, order) for t in basis_terms]

    @property
    def polys(self) -> list:
        return [
            _terms_to_poly(_positive_lead(t), self.order, self.ring, self.perm)
            for t in self._terms
        ]

    def __len__(self):
        return len(self._terms)

    def is_unit_ideal(self) -> bool:
        return any(t[0][0] == 0 for t in self._terms)

    def is_zero_ideal(self) -> bool:
        return not self._terms

    def normal_form(self, poly: Poly) -> Poly:
        terms = _poly_to_terms(poly, self.order, self.perm)
        nf = _normal_form_terms(terms, self._reducers, self.order)
        return _terms_to_poly(nf, self.order, self.ring, self.perm)

    def contains(self, poly: Poly) -> bool:
        return self.normal_form(poly).is_zero()

    def leading_exponents(self) -> list:
        out = []
        for t in self._terms:
            exps = self.order.decode(t[0][0])
            if self.perm is not None:
                orig = [0] * len(exps)
                for slot, e in enumerate(exps):
                    orig[self.perm[slot]] = e
                exps = tuple(orig)
            out.append(exps)
        return out


def groebner_basis(gens: list, order="degrevlex", perm=None) -> GroebnerBasis:
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    ord_obj = make_order(ring.nvars, order)
    term_lists = [_poly_to_terms(g, ord_obj, perm) for g in gens]
    basis = _buchberger(term_lists, ord_obj)
    return GroebnerBasis(ring, ord_obj, basis, perm)


def normal_form(poly: Poly, gens_or_gb, order="degrevlex") -> Poly:
    gb = gens_or_gb if isinstance(gens_or_gb, GroebnerBasis) else groebner_basis(gens_or_gb, order)
    return gb.normal_form(poly)


def equal_ideals(gens_a: list, gens_b: list) -> bool:
    """Mutual normal-form containment test."""
    a = [g for g in gens_a if not g.is_zero()]
    b = [g for g in gens_b if not g.is_zero()]
    if not a or not b:
        return not a and not b
    gb_a = groebner_basis(a)
    gb_b = groebner_basis(b)
    return all(gb_a.contains(g) for g in b) and all(gb_b.contains(g) for g in a)


def minimal_generators(gens: list) -> list:
    """Irredundant generating subset: drop every generator that lies in the
    ideal spanned by the others, processing in ascending total degree.

    For ideals homogeneous with respect to a positive grading this returns a
    generating set of minimal cardinality; otherwise it is merely irredundant.
    """
    polys = [g for g in gens if not g.is_zero()]
    polys.sort(key=lambda p: (p.total_degree(), str(p)))
    kept = []
    for i, g in enumerate(polys):
        others = kept + polys[i + 1:]
        if others and normal_form(g, others).is_zero():
            continue
        kept.append(g)
    return kept


def eliminate(gens: list, first_block: int) -> list:
    """Generators of the elimination ideal removing the first `first_block`
    variables; returned in the same ring, free of the eliminated variables."""
    ring = gens[0].ring
    if not 0 < first_block < ring.nvars:
        raise ValueError("elimination block out of range")
    gb = groebner_basis(gens, ("block", first_block))
    out = []
    for p in gb.polys:
        if all(i >= first_block for i in p.support_variables()):
            out.append(p)
    return out


def _prepend_variable(gens: list, count: int = 1):
    """View generators inside a ring with `count` new variables in front."""
    ring = gens[0].ring
    big = PolynomialRing(ring.nvars + count, ring.name)
    out = []
    for g in gens:
        coeffs = {(0,) * count + m: c for m, c in g.coeffs.items()}
        out.append(Poly(big, coeffs))
    return big, out


def saturate_principal(gens: list, f: Poly) -> list:
    """I : f^infinity via one auxiliary variable: eliminate y from I + (y*f - 1)."""
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    big, lifted = _prepend_variable(gens, 1)
    f_big = Poly(big, {(0,) + m: c for m, c in f.coeffs.items()})
    y = big.variable(0)
    lifted.append(y * f_big - big.one())
    eliminated = eliminate(lifted, 1)
    out = []
    small = ring
    for p in eliminated:
        coeffs = {m[1:]: c for m, c in p.coeffs.items()}
        out.append(Poly(small, coeffs))
    return _canonical_generators(out)


def saturate_variable(gens: list, var: int, weights=None) -> list:
    """I : T(var+1)^infinity for ideals homogeneous under positive `weights`
    (one weight per variable): divide a weighted degree-reverse-lex basis,
    computed with the variable in the last slot, by its variable powers."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    r = ring.nvars
    if weights is None:
        weights = [1] * r
    for g in gens:
        wdegs = {sum(w * e for w, e in zip(weights, m)) for m in g.coeffs}
        if len(wdegs) > 1:
            # the one-pass division argument needs weighted homogeneity
            return saturate_principal(gens, ring.variable(var))
    perm = [i for i in range(r) if i != var] + [var]
    ord_obj = DegRevLex(r, weights=[weights[p] for p in perm])
    gb = groebner_basis(gens, ord_obj, perm=perm)
    last_gen = ord_obj.gens[r - 1]
    divided = []
    for terms in gb._terms:
        k = min(ord_obj.decode(m)[r - 1] for m, _ in terms)
        if k:
            terms = [(m - k * last_gen, c) for m, c in terms]
        divided.append(terms)
    basis = _buchberger(divided, ord_obj)
    out = GroebnerBasis(ring, ord_obj, basis, perm).polys
    return _canonical_generators(out)


def saturate_by_ideal(gens: list, j_gens: list, weights=None) -> list:
    """I : J^infinity as the intersection over the generators of J."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens or not j_gens:
        return _canonical_generators(gens)
    results = []
    for f in j_gens:
        mono = _single_variable(f)
        if mono is not None and weights is not None:
            results.append(saturate_variable(gens, mono, weights))
        else:
            results.append(saturate_principal(gens, f))
    current = results[0]
    for other in results[1:]:
        current = intersect_ideals(current, other)
    return _canonical_generators(current)


def _single_variable(f: Poly):
    if len(f.coeffs) != 1:
        return None
    (m, c), = f.coeffs.items()
    if sum(m) == 1 and c == 1:
        return m.index(1)
    return None


def intersect_ideals(gens_a: list, gens_b: list) -> list:
    """I cap J via the auxiliary variable t: eliminate t from t*I + (1-t)*J."""
    gens_a = [g for g in gens_a if not g.is_zero()]
    gens_b = [g for g in gens_b if not g.is_zero()]
    if not gens_a or not gens_b:
        return []
    ring = gens_a[0].ring
    big, lifted_a = _prepend_variable(gens_a, 1)
    _, lifted_b = _prepend_variable(gens_b, 1)
    t = big.variable(0)
    one = big.one()
    mixed = [t * g for g in lifted_a] + [(one - t) * g for g in lifted_b]
    eliminated = eliminate(mixed, 1)
    out = []
    for p in eliminated:
        coeffs = {m[1:]: c for m, c in p.coeffs.items()}
        out.append(Poly(ring, coeffs))
    return _canonical_generators(out)


def _canonical_generators(gens: list) -> list:
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    gb = groebner_basis(gens)
    return gb.polys


def divide_exact(p: Poly, f: Poly) -> Poly:
    """Exact quotient p / f; raises if the division is not exact."""
    ring = p.ring
    if f.is_zero():
        raise ZeroDivisionError
    quotient = ring.zero()
    rest = p
    lead_f = f.leading_monomial()
    lc_f = f.leading_coefficient()
    while not rest.is_zero():
        lm = rest.leading_monomial()
        lc = rest.leading_coefficient()
        q = tuple(a - b for a, b in zip(lm, lead_f))
        if any(x < 0 for x in q):
            raise ValueError("division is not exact")
        mono = ring.monomial(q, lc / lc_f)
        quotient = quotient + mono
        rest = rest - mono * f
    return quotient


def colon_ideal(gens: list, f: Poly) -> list:
    """I : f = (I cap (f)) / f."""
    inter = intersect_ideals(gens, [f])
    return _canonical_generators([divide_exact(g, f) for g in inter])


def krull_dimension(gens: list) -> int:
    """Krull dimension of R/I; -1 for the unit ideal.

    Computed from the leading-term ideal as the maximal size of a variable
    subset meeting no leading support, via branch-and-bound vertex cover.
    """
    ring = gens[0].ring
    gb = groebner_basis(gens)
    if gb.is_unit_ideal():
        return -1
    supports = []
    for exps in gb.leading_exponents():
        s = frozenset(i for i, e in enumerate(exps) if e)
        supports.append(s)
    # keep only inclusion-minimal supports
    supports.sort(key=len)
    minimal = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    n = ring.nvars
    best_cover = [n]

    def cover(sups, chosen: int, bound: int):
        if chosen >= best_cover[0]:
            return
        if not sups:
            best_cover[0] = chosen
            return
        s = min(sups, key=len)
        for v in sorted(s):
            rest = [t for t in sups if v not in t]
            cover(rest, chosen + 1, bound)

    cover(minimal, 0, n)
    return n - best_cover[0]


def ring_map_kernel(source_ring: PolynomialRing, images: list, target_gens: list) -> list:
    """Kernel of source_ring -> target/(target_gens), x_i -> images[i].

    Computed by eliminating the target variables from the graph ideal.
    """
    assert len(images) == source_ring.nvars
    target_ring = images[0].ring if images else None
    for im in images:
        assert im.ring == target_ring
    tn = target_ring.nvars
    sn = source_ring.nvars
    big = PolynomialRing(tn + sn, target_ring.name)
    gens = []
    for g in target_gens:
        gens.append(Poly(big, {m + (0,) * sn: c for m, c in g.coeffs.items()}))
    for j, im in enumerate(images):
        im_big = Poly(big, {m + (0,) * sn: c for m, c in im.coeffs.items()})
        gens.append(big.variable(tn + j) - im_big)
    eliminated = eliminate(gens, tn)
    out = []
    for p in eliminated:
        coeffs = {m[tn:]: c for m, c in p.coeffs.items()}
        out.append(Poly(source_ring, coeffs))
    return _canonical_generators(out)


def rees_component_new_generators(i1_gens: list, g_gens: list, j_gens: list, d: int, lower_gens: list, weights=None) -> list:
    """Generators of ((I1^d + G) : J^infinity) that are new modulo lower + G.

    Returns the reduced basis of the ideal spanned by the nonzero normal
    forms of the saturation's basis elements modulo (lower_gens + g_gens);
    empty when the saturation brings nothing new.
    """
    from itertools import combinations_with_replacement

    power = []
    for combo in combinations_with_replacement(i1_gens, d):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        power.append(p)
    saturated = saturate_by_ideal(power + list(g_gens), j_gens, weights=weights)
    lower = [g for g in list(lower_gens) + list(g_gens) if not g.is_zero()]
    gb_lower = groebner_basis(lower) if lower else None
    fresh = []
    for s in saturated:
        nf = gb_lower.normal_form(s) if gb_lower is not None else s
        if not nf.is_zero():
            fresh.append(nf)
    return _canonical_generators(fresh)


def graded_monomial_basis(gens: list, var_degrees: list, group, target, ring=None) -> list:
    """Monomials of K-degree `target` whose classes form a basis of the graded
    piece of R/I: greedy selection of monomials with linearly independent
    normal forms, scanning in descending term order."""
    from .polyring import homogeneous_monomials

    if gens:
        ring = gens[0].ring
    assert ring is not None
    monos = homogeneous_monomials(var_degrees, group, target)
    gens = [g for g in gens if not g.is_zero()]
    gb = groebner_basis(gens) if gens else None
    pivots: dict = {}
    chosen = []
    for m in monos:
        p = ring.monomial(m)
        nf = gb.normal_form(p) if gb is not None else p
        vec = dict(nf.coeffs)
        while vec:
            lead = max(vec, key=_degrevlex_tuple_key)
            if lead not in pivots:
                break
            piv = pivots[lead]
            factor = vec[lead] / piv[lead]
            for qm, qc in piv.items():
                s = vec.get(qm, Fraction(0)) - factor * qc
                if s:
                    vec[qm] = s
                else:
                    vec.pop(qm, None)
        if vec:
            lead = max(vec, key=_degrevlex_tuple_key)
            pivots[lead] = vec
            chosen.append(m)
    return chosen


def _degrevlex_tuple_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))
