"""Gluing lattices: perpendicular sums, orthogonal pushouts along a shared
negative definite sublattice, and finite-index even overlattices from
anti-isometric discriminant subgroups."""

from fractions import Fraction
from math import lcm

import numpy as np

from . import exactalg as xa
from . import lattice as lat


class NonPrimitiveEmbedding(ValueError):
    pass


class PushoutSpec:
    """N+, N- glued along a common primitive negative definite sublattice R.

    emb_plus / emb_minus give R's basis inside N+ / N- (rows, coordinates of
    the respective lattice)."""

    def __init__(self, n_plus, n_minus, r, emb_plus, emb_minus):
        self.n_plus = n_plus
        self.n_minus = n_minus
        self.r = r
        self.emb_plus = lat.Sublattice(n_plus, emb_plus)
        self.emb_minus = lat.Sublattice(n_minus, emb_minus)
        for emb, name in ((self.emb_plus, "emb_plus"), (self.emb_minus, "emb_minus")):
            if emb.rank != r.rank:
                raise ValueError(f"{name} must have the same rank as R")
            if xa.to_lists(emb.induced_gram()) != xa.to_lists(r.gram):
                raise ValueError(f"{name} is not isometric to R")
            if not lat.is_primitive(emb):
                raise NonPrimitiveEmbedding(f"{name} is not primitive")
        if r.rank and lat.signature(r).positives != 0:
            raise ValueError("R must be negative definite")


class IntegralityFailure:
    """Witness: a pair of glue vectors with non-integral pairing."""

    def __init__(self, plus_index, minus_index, value):
        self.plus_index = plus_index
        self.minus_index = minus_index
        self.value = value

    def __repr__(self):
        return f"IntegralityFailure(e{self.plus_index} . f{self.minus_index} = {self.value})"


class PushoutResult:
    """W with the two canonical sublattices; basis order: N+ rows first, then
    a deterministic completion of R to N-."""

    def __init__(self, w, n_plus_in_w, n_minus_in_w, r_in_w):
        self.w = w
        self.n_plus_in_w = n_plus_in_w
        self.n_minus_in_w = n_minus_in_w
        self.r_in_w = r_in_w


def perpendicular_sum(n_plus, n_minus):
    return lat.direct_sum(n_plus, n_minus)


def _complete_to_basis(primitive_rows, n):
    """Rows completing a primitive k x n matrix to a basis of Z^n (the added rows)."""
    if len(primitive_rows) == 0:
        return xa.eye(n)
    res = xa.snf(np.array(primitive_rows, dtype=object))
    Vinv = xa.unimodular_inverse(res.V)
    k = len(primitive_rows)
    return Vinv[k:]


def _projection_coeffs(x, gram, r_basis, r_gram_inv):
    """Coefficients (rationals) of the orthogonal projection of x onto R tensor Q."""
    pair = np.array([Fraction(int(v)) for v in (x @ gram @ r_basis.T)], dtype=object)
    return pair @ r_gram_inv


def orthogonal_pushout(spec):
    """W = (N+ (+) N-)/antidiagonal(R), verified integral, even, nondegenerate,
    with N+- primitive and N+perp < N-, N-perp < N+; or an IntegralityFailure
    witness."""
    np_, nm, r = spec.n_plus, spec.n_minus, spec.r
    rho = r.rank
    if rho == 0:
        w = perpendicular_sum(np_, nm)
        bp = np.hstack([xa.eye(np_.rank), xa.zeros(np_.rank, nm.rank)])
        bm = np.hstack([xa.zeros(nm.rank, np_.rank), xa.eye(nm.rank)])
        return PushoutResult(
            w,
            lat.Sublattice(w, bp),
            lat.Sublattice(w, bm),
            lat.Sublattice(w, xa.zeros(0, w.rank)),
        )
    r_gram_inv = xa.rational_inverse(r.gram)
    unit_p = xa.eye(np_.rank)
    unit_m = xa.eye(nm.rank)
    alpha = [_projection_coeffs(unit_p[i], np_.gram, spec.emb_plus.basis, r_gram_inv) for i in range(np_.rank)]
    beta = [_projection_coeffs(unit_m[i], nm.gram, spec.emb_minus.basis, r_gram_inv) for i in range(nm.rank)]
    # full pairwise pairing table between the N+ basis and the N- basis
    cross = [[None] * nm.rank for _ in range(np_.rank)]
    for i in range(np_.rank):
        for j in range(nm.rank):
            v = alpha[i] @ r.gram @ beta[j]
            if v.denominator != 1:
                return IntegralityFailure(i, j, v)
            cross[i][j] = int(v)
    # basis: N+ rows, then completion of R inside N-
    comp = _complete_to_basis(xa.to_lists(spec.emb_minus.basis), nm.rank)
    n = np_.rank + comp.shape[0]
    G = xa.zeros(n, n)
    G[: np_.rank, : np_.rank] = np_.gram
    for a in range(comp.shape[0]):
        for b in range(comp.shape[0]):
            G[np_.rank + a, np_.rank + b] = int(comp[a] @ nm.gram @ comp[b])
    for i in range(np_.rank):
        for a in range(comp.shape[0]):
            val = sum(int(comp[a][j]) * cross[i][j] for j in range(nm.rank))
            G[i, np_.rank + a] = G[np_.rank + a, i] = val
    w = lat.Lattice(G)
    if not w.is_nondegenerate():
        raise ValueError("pushout degenerate")
    if not w.is_even():
        raise ValueError("pushout not even")
    # N- inside W: R rows map into N+ via the identification, completion rows are new
    minus_rows = xa.zeros(nm.rank, n)
    for m in range(rho):
        minus_rows[m, : np_.rank] = spec.emb_plus.basis[m]
    for a in range(comp.shape[0]):
        minus_rows[rho + a, np_.rank + a] = 1
    # express N- in its own basis order: rows of identity pulled through (R-basis, comp)
    change = np.vstack([spec.emb_minus.basis, comp])  # basis of Z^{r_-}
    change_inv = xa.unimodular_inverse(change)
    n_minus_in_w = lat.Sublattice(w, change_inv @ minus_rows)
    bp = np.hstack([xa.eye(np_.rank), xa.zeros(np_.rank, comp.shape[0])])
    n_plus_in_w = lat.Sublattice(w, bp)
    r_in_w = lat.Sublattice(w, np.hstack([spec.emb_plus.basis, xa.zeros(rho, comp.shape[0])]))
    _verify_pushout(w, n_plus_in_w, n_minus_in_w, r_in_w, np_, nm)
    return PushoutResult(w, n_plus_in_w, n_minus_in_w, r_in_w)


def _verify_pushout(w, n_plus_in_w, n_minus_in_w, r_in_w, np_, nm):
    # Def 6.5 conditions, each checked independently
    if xa.to_lists(n_plus_in_w.induced_gram()) != xa.to_lists(np_.gram):
        raise ValueError("pushout: N+ image not isometric")
    if xa.to_lists(n_minus_in_w.induced_gram()) != xa.to_lists(nm.gram):
        raise ValueError("pushout: N- image not isometric")
    if not (lat.is_primitive(n_plus_in_w) and lat.is_primitive(n_minus_in_w)):
        raise NonPrimitiveEmbedding("pushout: N+- not primitive in W")
    inter = lat.intersect(n_plus_in_w, n_minus_in_w)
    if not inter.same_module(lat.saturation(r_in_w)) or not lat.is_primitive(r_in_w):
        raise ValueError("pushout: N+ intersect N- is not R")
    if not lat.sum_sublattices(n_plus_in_w, n_minus_in_w).same_module(
        lat.Sublattice(w, xa.eye(w.rank))
    ):
        raise ValueError("pushout: N+ + N- is not W")
    for comp_of, inside in ((n_plus_in_w, n_minus_in_w), (n_minus_in_w, n_plus_in_w)):
        perp = lat.orthogonal_complement(comp_of)
        for row in perp.basis:
            if xa.solve_integer(inside.basis, row) is None:
                raise ValueError("pushout: perp containment fails")


def pushout_signature_check(w, r_plus, r_minus, rho):
    return lat.signature(w).as_pair() == (2, r_plus + r_minus - rho - 2)


class OverlatticeSpec:
    """An even overlattice of N+ (+) N-, as an explicit glue subgroup plus the
    resulting lattice data."""

    def __init__(self, base, glue_gens, basis_rational, w_gram, index):
        self.base = base
        self.glue_gens = glue_gens  # list of rational coset vectors in base coordinates
        self.basis_rational = basis_rational  # rows: basis of W' in base coordinates (Fractions)
        self.w_gram = w_gram  # Lattice: induced Gram on that basis
        self.index = index


def _group_elements(orders):
    elems = [()]
    for d in orders:
        elems = [e + (i,) for e in elems for i in range(d)]
    return elems


def _subgroups(orders, max_order):
    """All subgroups (as frozensets of element tuples) of prod Z/orders."""
    elems = _group_elements(orders)
    zero = tuple(0 for _ in orders)

    def add(e, f):
        return tuple((a + b) % d for a, b, d in zip(e, f, orders))

    def closure(gens):
        seen = {zero}
        frontier = [zero]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = add(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    subgroups = {frozenset({zero})}
    frontier = [frozenset({zero})]
    while frontier:
        H = frontier.pop()
        for e in elems:
            if e in H:
                continue
            H2 = closure(set(H) | {e})
            if len(H2) <= max_order and H2 not in subgroups:
                subgroups.add(H2)
                frontier.append(H2)
    return subgroups


def _min_generators(H, orders):
    """A small generating list for subgroup H (greedy by element order)."""
    zero = tuple(0 for _ in orders)

    def add(e, f):
        return tuple((a + b) % d for a, b, d in zip(e, f, orders))

    def closure(gens):
        seen = {zero}
        frontier = [zero]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = add(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    gens = []
    have = {zero}
    for e in sorted(H, key=lambda t: (-_elem_order(t, orders), t)):
        if e not in have:
            gens.append(e)
            have = closure(gens)
            if len(have) == len(H):
                break
    return gens


def _elem_order(e, orders):
    from math import gcd

    o = 1
    for a, d in zip(e, orders):
        if a:
            o = lcm(o, d // gcd(a, d))
    return o


def enumerate_overlattices(n_plus, n_minus, max_index, budget=10**6):
    """All even overlattices of N+ (+) N- of index <= max_index with both
    factors still primitive, via isotropic anti-isometric graph subgroups."""
    for L in (n_plus, n_minus):
        if not (L.is_even() and L.is_nondegenerate()):
            raise ValueError("overlattices need even nondegenerate factors")
    ap = lat.disc_generators(n_plus)
    am = lat.disc_generators(n_minus)
    orders_p = [d for _, d in ap]
    orders_m = [d for _, d in am]
    size_p = 1
    for d in orders_p:
        size_p *= d
    size_m = 1
    for d in orders_m:
        size_m *= d
    if size_p * size_m > budget:
        raise lat.EnumerationBudgetExceeded(f"{size_p * size_m} exceeds budget {budget}")
    # coset vectors in lattice coordinates (rational rows)
    ginv_p = xa.rational_inverse(n_plus.gram)
    ginv_m = xa.rational_inverse(n_minus.gram)
    gens_p = [np.array([Fraction(x) for x in (g @ ginv_p)], dtype=object) for g, _ in ap]
    gens_m = [np.array([Fraction(x) for x in (g @ ginv_m)], dtype=object) for g, _ in am]

    rp, rm = n_plus.rank, n_minus.rank
    base = perpendicular_sum(n_plus, n_minus)

    def vec_p(e):
        v = np.array([Fraction(0)] * rp, dtype=object)
        for a, g in zip(e, gens_p):
            v = v + a * g
        return v

    def vec_m(e):
        v = np.array([Fraction(0)] * rm, dtype=object)
        for a, g in zip(e, gens_m):
            v = v + a * g
        return v

    def q_of(v, gram):
        return (v @ gram @ v) % 2

    def b_of(v, w_, gram):
        return (v @ gram @ w_) % 1

    elems_m = _group_elements(orders_m)
    out = []
    seen = set()
    if min(size_p, size_m) == 1:
        return out
    smaller_on_plus = size_p <= size_m
    orders_small = orders_p if smaller_on_plus else orders_m
    for H in _subgroups(orders_small, max_index):
        if len(H) < 2 or len(H) > max_index:
            continue
        gens = _min_generators(H, orders_small)
        gen_orders = [_elem_order(g, orders_small) for g in gens]
        # enumerate injections of H into the other discriminant group, generator-wise
        other_orders = orders_m if smaller_on_plus else orders_p
        other_elems = _group_elements(other_orders)

        def images(k, chosen):
            if k == len(gens):
                yield list(chosen)
                return
            for e in other_elems:
                if _elem_order(e, other_orders) == gen_orders[k]:
                    yield from images(k + 1, chosen + [e])

        for img in images(0, []):
            glue_gens = []
            ok = True
            for g, im in zip(gens, img):
                ep, em = (g, im) if smaller_on_plus else (im, g)
                vp, vm = vec_p(ep), vec_m(em)
                if (q_of(vp, n_plus.gram) + q_of(vm, n_minus.gram)) % 2 != 0:
                    ok = False
                    break
                glue_gens.append((vp, vm))
            if not ok:
                continue
            # pairwise: b+ + b- integral (graph isotropic for the bilinear form too)
            for i in range(len(glue_gens)):
                for j in range(len(glue_gens)):
                    bsum = b_of(glue_gens[i][0], glue_gens[j][0], n_plus.gram) + b_of(
                        glue_gens[i][1], glue_gens[j][1], n_minus.gram
                    )
                    if bsum % 1 != 0:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            spec = _overlattice_from_glue(base, n_plus, n_minus, glue_gens)
            if spec is None:
                continue
            key = tuple(tuple(str(x) for x in row) for row in spec.basis_rational)
            if key not in seen:
                seen.add(key)
                out.append(spec)
    return out


def _overlattice_from_glue(base, n_plus, n_minus, glue_gens):
    rp, rm = n_plus.rank, n_minus.rank
    n = rp + rm
    rows = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for vp, vm in glue_gens:
        rows.append([Fraction(x) for x in vp] + [Fraction(x) for x in vm])
    D = 1
    for row in rows:
        for x in row:
            D = lcm(D, x.denominator)
    scaled = xa.mat([[int(x * D) for x in row] for row in rows])
    H = xa.hnf(scaled, prune=True)
    if H.shape[0] != n:
        return None
    basis = np.array(
        [[Fraction(int(H[i, j]), D) for j in range(n)] for i in range(n)], dtype=object
    )
    gram = basis @ base.gram @ basis.T
    for i in range(n):
        for j in range(n):
            if isinstance(gram[i, j], Fraction) and gram[i, j].denominator != 1:
                return None
    w = lat.Lattice([[int(gram[i, j]) for j in range(n)] for i in range(n)])
    if not w.is_even():
        return None
    # index bookkeeping
    index_sq = abs(xa.det(base.gram)) // abs(w.det())
    index = 1
    while index * index < index_sq:
        index += 1
    if index * index != index_sq:
        return None
    # N+- must stay primitive: their Q-span intersected with W' is N+-
    for start, size, orig in ((0, rp, n_plus), (rp, rm, n_minus)):
        coords = _span_intersection(basis, start, size, n)
        if coords is None:
            return None
    return OverlatticeSpec(base, glue_gens, basis, w, index)


def _span_intersection(basis, start, size, n):
    """Check W' cap (factor tensor Q) = factor; None when primitivity fails."""
    D = 1
    for row in basis:
        for x in row:
            D = lcm(D, Fraction(x).denominator)
    scaled = xa.mat([[int(Fraction(x) * D) for x in row] for row in basis])
    # solve y . scaled = vector supported in the factor, y integer; the image
    # must be exactly D * (unit vectors of the factor block)
    block = []
    for i in range(n):
        if start <= i < start + size:
            continue
        block.append(i)
    ker = xa.kernel_basis(scaled[:, block]) if block else xa.eye(n)
    img = ker @ scaled if ker.shape[0] else xa.zeros(0, n)
    sub = img[:, start : start + size]
    invf = xa.snf(sub).diagonal if sub.size else []
    if any(d != D for d in invf if d != 0) or sum(1 for d in invf if d != 0) != size:
        return None
    return True
