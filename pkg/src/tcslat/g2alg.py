"""Exact pointwise linear algebra of the stable 3-form on R^7: model forms,
cross products, metric recovery, calibration tests, and the induced structures
on hyperplanes.  Everything is computed over Q; the only irrational quantity
(a 9th root) is taken exactly whenever the radicand is a rational 9th power,
and as a tainted float otherwise."""

import itertools
from fractions import Fraction

import numpy as np

from . import exactalg as xa
from . import lattice as lat


class Form:
    """Alternating k-form: coefficients on strictly increasing index tuples
    (0-based), exact rationals."""

    def __init__(self, degree, dimension, coeffs=None):
        self.degree = degree
        self.dimension = dimension
        self.coeffs = {}
        for idx, c in (coeffs or {}).items():
            self[idx] = c

    def __setitem__(self, idx, value):
        idx = tuple(idx)
        sgn, canon = _canonical(idx)
        if sgn == 0:
            raise ValueError("repeated index")
        value = Fraction(value) * sgn
        if value:
            self.coeffs[canon] = value
        else:
            self.coeffs.pop(canon, None)

    def __getitem__(self, idx):
        sgn, canon = _canonical(tuple(idx))
        if sgn == 0:
            return Fraction(0)
        return sgn * self.coeffs.get(canon, Fraction(0))

    def __add__(self, other):
        out = Form(self.degree, self.dimension)
        for idx, c in self.coeffs.items():
            out.coeffs[idx] = c
        for idx, c in other.coeffs.items():
            out.coeffs[idx] = out.coeffs.get(idx, Fraction(0)) + c
            if not out.coeffs[idx]:
                del out.coeffs[idx]
        return out

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        out = Form(self.degree, self.dimension)
        scalar = Fraction(scalar)
        if scalar:
            for idx, c in self.coeffs.items():
                out.coeffs[idx] = scalar * c
        return out

    def __eq__(self, other):
        return (self.degree, self.dimension, self.coeffs) == (
            other.degree,
            other.dimension,
            other.coeffs,
        )

    def is_zero(self):
        return not self.coeffs

    def wedge(self, other):
        out = Form(self.degree + other.degree, self.dimension)
        for i1, c1 in self.coeffs.items():
            for i2, c2 in other.coeffs.items():
                if set(i1) & set(i2):
                    continue
                sgn, canon = _canonical(i1 + i2)
                out.coeffs[canon] = out.coeffs.get(canon, Fraction(0)) + sgn * c1 * c2
                if not out.coeffs[canon]:
                    del out.coeffs[canon]
        return out

    def contract(self, v):
        """Interior product v -| form."""
        v = _fvec(v, self.dimension)
        out = Form(self.degree - 1, self.dimension)
        for idx, c in self.coeffs.items():
            for pos, i in enumerate(idx):
                if v[i]:
                    rest = idx[:pos] + idx[pos + 1 :]
                    sgn = (-1) ** pos
                    out.coeffs[rest] = out.coeffs.get(rest, Fraction(0)) + sgn * c * v[i]
                    if not out.coeffs[rest]:
                        del out.coeffs[rest]
        return out

    def evaluate(self, *vectors):
        if len(vectors) != self.degree:
            raise ValueError("arity mismatch")
        # successive interior products: a -| then b -| ... gives form(a, b, ...)
        out = self
        for v in vectors:
            out = out.contract(v)
        return out.coeffs.get((), Fraction(0)) if out.degree == 0 else out

    def restrict(self, basis):
        """Pull back along the span of `basis` (rows), as a form on R^len(basis)."""
        k = len(basis)
        out = Form(self.degree, k)
        for idx in itertools.combinations(range(k), self.degree):
            val = self.evaluate(*(basis[i] for i in idx))
            if val:
                out.coeffs[idx] = val
        return out

    def top_coefficient(self):
        if self.degree != self.dimension:
            raise ValueError("not a top form")
        return self.coeffs.get(tuple(range(self.dimension)), Fraction(0))


def _canonical(idx):
    if len(set(idx)) != len(idx):
        return 0, ()
    perm = sorted(range(len(idx)), key=lambda i: idx[i])
    sgn = 1
    seen = [False] * len(idx)
    for start in range(len(idx)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn, tuple(sorted(idx))


def _fvec(v, n):
    out = [Fraction(x) for x in v]
    if len(out) != n:
        raise ValueError("dimension mismatch")
    return out


def form_from_terms(degree, dimension, terms):
    """terms: iterable of (coefficient, one-based index string or tuple)."""
    f = Form(degree, dimension)
    for c, idx in terms:
        if isinstance(idx, str):
            idx = tuple(int(ch) - 1 for ch in idx)
        else:
            idx = tuple(i - 1 for i in idx)
        f[idx] = f[idx] + Fraction(c) if f[idx] else Fraction(c)
    return f


def phi0():
    """The model 3-form: the seven signed terms exactly as standard."""
    return form_from_terms(3, 7, [
        (1, "123"), (1, "145"), (1, "167"), (1, "246"),
        (-1, "257"), (-1, "347"), (-1, "356"),
    ])


def psi0():
    """Its 4-form dual, again term by term."""
    return form_from_terms(4, 7, [
        (-1, "1247"), (-1, "1256"), (-1, "1346"), (1, "1357"),
        (1, "2345"), (1, "2367"), (1, "4567"),
    ])


class Metric:
    def __init__(self, matrix):
        self.matrix = np.array([[Fraction(x) for x in row] for row in matrix], dtype=object)
        n = self.matrix.shape[0]
        if self.matrix.shape != (n, n):
            raise ValueError("metric must be square")
        self.dimension = n

    def pair(self, u, v):
        return (np.array(_fvec(u, self.dimension), dtype=object) @ self.matrix
                @ np.array(_fvec(v, self.dimension), dtype=object))

    def signature(self):
        from math import lcm

        denom = 1
        for row in self.matrix:
            for x in row:
                denom = lcm(denom, x.denominator)
        scaled = [[int(x * denom) for x in row] for row in self.matrix]
        return lat.signature(lat.Lattice(scaled)).as_pair()

    def solve(self, rhs):
        """The unique w with matrix . w = rhs (column convention irrelevant: symmetric)."""
        inv = xa.rational_inverse(self.matrix)
        return np.array(_fvec(rhs, self.dimension), dtype=object) @ inv


def identity_metric(n=7):
    return Metric([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def cross(u, v, phi=None, g=None):
    """The unique w with g(w, .) = phi(u, v, .)."""
    phi = phi if phi is not None else phi0()
    g = g if g is not None else identity_metric(phi.dimension)
    # v -| (u -| phi) evaluated at x is phi(u, v, x)
    rhs = phi.contract(u).contract(v)
    vec = [rhs.coeffs.get((i,), Fraction(0)) for i in range(phi.dimension)]
    return g.solve(vec)


def chi(v, w, x, psi=None, g=None):
    """The vector-valued alternating 3-form: g(u, chi/2) = psi(u, v, w, x)."""
    psi = psi if psi is not None else psi0()
    g = g if g is not None else identity_metric(psi.dimension)
    rhs = psi.contract(v).contract(w).contract(x)
    # contraction order leaves psi(x, w, v, .) = -psi(v, w, x, .) ... track sign:
    # psi.contract(v) = v -| psi;  (v -| psi).contract(w) = w -| (v -| psi) = psi(v, w, ., .)? no:
    # (v -| psi)(w, a, b) = psi(v, w, a, b); ((v-|psi)).contract(w)(a,b) = (v-|psi)(w,a,b) = psi(v,w,a,b)
    # so rhs(u) = psi(v, w, x, u) = -psi(u, v, w, x) after moving u to front (3 transpositions)
    vec = [-rhs.coeffs.get((i,), Fraction(0)) for i in range(psi.dimension)]
    return 2 * g.solve(vec)


VOL_TOLERANCE = 1e-12


class MetricFromForm:
    def __init__(self, g, vol, positive, exact):
        self.g = g
        self.vol = vol
        self.positive = positive
        self.exact = exact  # False: vol taken as a float 9th root, g tainted


class DegenerateForm:
    def __repr__(self):
        return "DegenerateForm()"


def _rational_ninth_root(q):
    """The exact rational r with r^9 = q, or None."""
    if q == 0:
        return Fraction(0)
    num, den = q.numerator, q.denominator
    rn = _int_ninth_root(abs(num))
    rd = _int_ninth_root(den)
    if rn is None or rd is None:
        return None
    r = Fraction(rn, rd)
    if num < 0:
        r = -r
    return r


def _int_ninth_root(n):
    if n == 0:
        return 0
    lo, hi = 0, max(2, int(round(n ** (1.0 / 9))) + 2)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid**9
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def metric_from_3form(phi):
    """B(v, w) = (1/6) (v -| phi) ^ (w -| phi) ^ phi, then vol^9 = det and
    g = B / vol.  DegenerateForm when the induced map vanishes identically."""
    n = phi.dimension
    B = [[Fraction(0)] * n for _ in range(n)]
    contractions = [phi.contract([1 if k == i else 0 for k in range(n)]) for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            top = contractions[i].wedge(contractions[j]).wedge(phi)
            B[i][j] = B[j][i] = Fraction(1, 6) * top.top_coefficient()
    det = _fraction_det(B)
    if det == 0:
        return DegenerateForm()
    root = _rational_ninth_root(det)
    if root is not None:
        vol = root
        g = Metric([[x / vol for x in row] for row in B])
        exact = True
    else:
        volf = float(det) ** (1.0 / 9.0) if det > 0 else -((-float(det)) ** (1.0 / 9.0))
        assert abs(volf**9 - float(det)) <= VOL_TOLERANCE * abs(float(det))
        vol = volf
        g = Metric([[Fraction(float(x) / volf).limit_denominator(10**15) for x in row] for row in B])
        exact = False
    positive = g.signature() == (n, 0)
    return MetricFromForm(g, vol, positive, exact)


def _fraction_det(rows):
    n = len(rows)
    M = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        inv = 1 / M[col][col]
        for r in range(col + 1, n):
            if M[r][col] != 0:
                f = M[r][col] * inv
                for c in range(col, n):
                    M[r][c] -= f * M[col][c]
    return det


def gram_determinant(vectors, g=None):
    g = g if g is not None else identity_metric(len(vectors[0]))
    k = len(vectors)
    rows = [[g.pair(vectors[i], vectors[j]) for j in range(k)] for i in range(k)]
    return _fraction_det(rows)


def is_associative(u, v, w, phi=None, g=None):
    """True iff the span is calibrated (for one orientation): the squared value
    of the 3-form equals the Gram determinant of the triple."""
    phi = phi if phi is not None else phi0()
    g = g if g is not None else identity_metric(phi.dimension)
    gd = gram_determinant([u, v, w], g)
    if gd == 0:
        raise ValueError("degenerate span")
    return phi.evaluate(u, v, w) ** 2 == gd


def is_coassociative(u, v, w, x, psi=None, g=None):
    psi = psi if psi is not None else psi0()
    g = g if g is not None else identity_metric(psi.dimension)
    gd = gram_determinant([u, v, w, x], g)
    if gd == 0:
        raise ValueError("degenerate span")
    return psi.evaluate(u, v, w, x) ** 2 == gd


def standard_su3_forms():
    """(omega0, Re Omega0, Im Omega0) on the hyperplane coordinates 2..7,
    expressed as forms on R^7 with z1 = x2 + ix3, z2 = x4 + ix5, z3 = x6 + ix7."""
    omega = form_from_terms(2, 7, [(1, "23"), (1, "45"), (1, "67")])
    re_om = form_from_terms(3, 7, [(1, "246"), (-1, "257"), (-1, "347"), (-1, "356")])
    im_om = form_from_terms(3, 7, [(1, "247"), (1, "256"), (1, "346"), (-1, "357")])
    return omega, re_om, im_om


def is_special_lagrangian(vectors, phase=(1, 0)):
    """True iff omega0 and Im(e^{i theta} Omega0) both restrict to zero on the
    real 3-plane; phase = (cos, sin) as exact rationals on the unit circle."""
    if len(vectors) != 3:
        raise ValueError("need a real 3-plane")
    if gram_determinant(vectors) == 0:
        raise ValueError("degenerate span")
    c, s = Fraction(phase[0]), Fraction(phase[1])
    if c * c + s * s != 1:
        raise ValueError("phase must be a rational point on the unit circle")
    omega, re_om, im_om = standard_su3_forms()
    # Im(e^{i theta} Omega) = cos . Im Omega + sin . Re Omega
    im_rot = (c * im_om) + (s * re_om)
    return omega.restrict(vectors).is_zero() and im_rot.restrict(vectors).is_zero()


class SU3Structure:
    """The forms live on the full space but annihilate u: omega, Re Omega and
    Im Omega are the projections of u -| phi, phi and -(u -| psi) onto u-perp."""

    def __init__(self, omega, re_omega, im_omega, basis):
        self.omega = omega
        self.re_omega = re_omega
        self.im_omega = im_omega
        self.basis = basis  # rows spanning the hyperplane u-perp


def _dual_covector(u, g):
    pairing = [g.pair(u, [1 if k == i else 0 for k in range(g.dimension)]) for i in range(g.dimension)]
    f = Form(1, g.dimension)
    for i, c in enumerate(pairing):
        if c:
            f.coeffs[(i,)] = c
    return f


def pullback(form, matrix):
    """(M* form)(x, ...) = form(M x, ...); matrix rows are images of basis vectors
    under the transpose convention x -> x . M."""
    n = form.dimension
    M = [[Fraction(x) for x in row] for row in matrix]
    images = [[M[i][j] for j in range(n)] for i in range(n)]
    out = Form(form.degree, n)
    for idx in itertools.combinations(range(n), form.degree):
        val = form.evaluate(*(images[i] for i in idx))
        if val:
            out.coeffs[idx] = val
    return out


def su3_from_unit_vector(phi, u, g=None, psi=None):
    """Split off the SU(3)-structure on u-perp: omega from u -| phi, Re Omega
    from phi, Im Omega from -(u -| psi), all projected to u-perp; verifies the
    compatibility pair and the reconstruction identities exactly."""
    g = g if g is not None else identity_metric(phi.dimension)
    psi = psi if psi is not None else psi0()
    if g.pair(u, u) != 1:
        raise ValueError("u must be a unit vector")
    n = phi.dimension
    uf = _fvec(u, n)
    # orthogonal projection onto u-perp: x -> x - g(u, x) u, as a matrix of images
    proj = []
    for i in range(n):
        e = [Fraction(1) if k == i else Fraction(0) for k in range(n)]
        c = g.pair(u, e)
        proj.append([e[k] - c * uf[k] for k in range(n)])
    omega = pullback(phi.contract(u), proj)
    re_om = pullback(phi, proj)
    im_om = pullback((-1) * psi.contract(u), proj)
    # compatibility: Omega ^ omega = 0 and the volume normalization, which for
    # complex dimension 3 reads (1/4) Re Omega ^ Im Omega = omega^3 / 6
    if not re_om.wedge(omega).is_zero() or not im_om.wedge(omega).is_zero():
        raise AssertionError("structure fails Omega ^ omega = 0")
    lhs = Fraction(1, 4) * re_om.wedge(im_om)
    rhs = Fraction(1, 6) * omega.wedge(omega).wedge(omega)
    if not (lhs - rhs).is_zero():
        raise AssertionError("structure fails the volume normalization")
    # reconstruction of the two model forms from the split data
    dt = _dual_covector(u, g)
    if not (dt.wedge(omega) + re_om - phi).is_zero():
        raise AssertionError("3-form reconstruction fails")
    recon4 = Fraction(1, 2) * omega.wedge(omega) - dt.wedge(im_om)
    if not (recon4 - psi).is_zero():
        raise AssertionError("4-form reconstruction fails")
    # exact basis of u-perp, for reference and restriction
    from math import lcm

    denom = 1
    cols = []
    for i in range(n):
        c = g.pair(u, [1 if k == i else 0 for k in range(n)])
        cols.append(c)
        denom = lcm(denom, c.denominator)
    ints = xa.mat([[int(c * denom)] for c in cols])
    basis = xa.kernel_basis(ints)
    return SU3Structure(omega, re_om, im_om, basis)


def verify_identity_suite(samples=100, seed=0):
    """Evaluate the cross-product norm identity, the double-cross identity,
    the calibration decomposition identity on all basis triples and `samples`
    seeded rational triples, and the wedge relations of the standard triple of
    2-forms on R^4.  Aborts with a counterexample on any failure."""
    import random

    phi = phi0()
    psi = psi0()
    g = identity_metric(7)
    rng = random.Random(seed)

    def norm2(v):
        return g.pair(v, v)

    def check_triple(u, v, w, tag):
        lhs = norm2(cross(u, v, phi, g))
        rhs = norm2(u) * norm2(v) - g.pair(u, v) ** 2
        if lhs != rhs:
            raise AssertionError(f"cross-norm identity fails on {tag}")
        cv = cross(v, w, phi, g)
        lhs_b = cross(u, cv, phi, g) + cross(cross(u, v, phi, g), w, phi, g)
        rhs_b = (
            2 * g.pair(u, w) * np.array(_fvec(v, 7), dtype=object)
            - g.pair(u, v) * np.array(_fvec(w, 7), dtype=object)
            - g.pair(w, v) * np.array(_fvec(u, 7), dtype=object)
        )
        if any(a != b for a, b in zip(lhs_b, rhs_b)):
            raise AssertionError(f"double-cross identity fails on {tag}")
        chv = chi(u, v, w, psi, g)
        lhs_c = phi.evaluate(u, v, w) ** 2 + Fraction(1, 4) * norm2(chv)
        rhs_c = gram_determinant([u, v, w], g)
        if lhs_c != rhs_c:
            raise AssertionError(f"calibration decomposition fails on {tag}")

    basis = [[1 if k == i else 0 for k in range(7)] for i in range(7)]
    count = 0
    for i in range(7):
        for j in range(7):
            for k in range(7):
                check_triple(basis[i], basis[j], basis[k], f"basis ({i},{j},{k})")
                count += 1
    for s in range(samples):
        u = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(7)]
        v = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(7)]
        w = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(7)]
        check_triple(u, v, w, f"sample {s}")
        count += 1

    # the standard triple of 2-forms on R^4 and its wedge relations
    wI = form_from_terms(2, 4, [(1, "12"), (1, "34")])
    wJ = form_from_terms(2, 4, [(1, "13"), (-1, "24")])
    wK = form_from_terms(2, 4, [(1, "14"), (1, "23")])
    squares = [w.wedge(w).top_coefficient() for w in (wI, wJ, wK)]
    if not (squares[0] == squares[1] == squares[2] == 2):
        raise AssertionError("squares of the standard 2-form triple disagree")
    for a, b in ((wI, wJ), (wJ, wK), (wK, wI)):
        if not a.wedge(b).is_zero():
            raise AssertionError("mixed wedge of the standard 2-form triple is nonzero")
    return {"triples_checked": count, "hk_square": squares[0]}
