"""Integer lattices, sublattices, discriminant groups and vector search.

A Lattice is a symmetric integer Gram matrix; a Sublattice is a basis matrix
(rows are generators in ambient coordinates) inside an ambient Lattice.
"""

from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from . import exactalg as xa


class DegenerateLattice(ValueError):
    pass


class EnumerationBudgetExceeded(RuntimeError):
    pass


class Signature:
    __slots__ = ("positives", "negatives")

    def __init__(self, positives, negatives):
        self.positives = positives
        self.negatives = negatives

    def as_pair(self):
        return (self.positives, self.negatives)

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self.as_pair() == other
        return isinstance(other, Signature) and self.as_pair() == other.as_pair()

    def __repr__(self):
        return f"Signature({self.positives}, {self.negatives})"


class Lattice:
    """Nondegenerate-or-not integer lattice given by a symmetric Gram matrix."""

    def __init__(self, gram):
        g = np.array(gram, dtype=object)
        if g.size == 0:
            g = xa.zeros(0, 0)
        else:
            g = xa.mat(gram)
        if g.shape[0] != g.shape[1]:
            raise ValueError("Gram matrix must be square")
        for i in range(g.shape[0]):
            for j in range(g.shape[0]):
                if g[i, j] != g[j, i]:
                    raise ValueError("Gram matrix must be symmetric")
        self.gram = g
        self.rank = g.shape[0]

    def det(self):
        return xa.det(self.gram)

    def is_nondegenerate(self):
        return self.rank == 0 or self.det() != 0

    def is_even(self):
        return all(self.gram[i, i] % 2 == 0 for i in range(self.rank))

    def pair(self, x, y):
        x = xa.vec(x)
        y = xa.vec(y)
        return int(x @ self.gram @ y)

    def norm(self, x):
        return self.pair(x, x)

    def __eq__(self, other):
        return isinstance(other, Lattice) and xa.to_lists(self.gram) == xa.to_lists(other.gram)

    def __repr__(self):
        return f"Lattice(rank={self.rank})"


def direct_sum(*lattices):
    n = sum(l.rank for l in lattices)
    g = xa.zeros(n, n)
    off = 0
    for l in lattices:
        g[off : off + l.rank, off : off + l.rank] = l.gram
        off += l.rank
    return Lattice(g)


def U(k=1):
    """Hyperbolic plane, scaled: Gram [[0, k], [k, 0]]."""
    return Lattice([[0, k], [k, 0]])


def diag_lattice(*entries):
    n = len(entries)
    g = xa.zeros(n, n)
    for i, e in enumerate(entries):
        g[i, i] = int(e)
    return Lattice(g)


def A2(sign=1):
    g = [[2 * sign, -sign], [-sign, 2 * sign]]
    return Lattice(g)


# E8 Cartan matrix: chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
_E8_ROWS = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
]


def E8(sign=1):
    """The even unimodular definite rank-8 lattice; sign=-1 negates the form."""
    return Lattice([[sign * x for x in row] for row in _E8_ROWS])


class Sublattice:
    """Rows of `basis` are generators, in ambient coordinates; independent over Q."""

    def __init__(self, ambient, basis):
        self.ambient = ambient
        b = xa.mat(basis) if len(basis) else xa.zeros(0, ambient.rank)
        if b.shape[0] and b.shape[1] != ambient.rank:
            raise ValueError("basis rows must live in the ambient lattice")
        if b.shape[0] and xa.rank(b) != b.shape[0]:
            raise ValueError("basis rows must be independent over Q")
        self.basis = b

    @property
    def rank(self):
        return self.basis.shape[0]

    def induced_gram(self):
        if self.rank == 0:
            return xa.zeros(0, 0)
        return self.basis @ self.ambient.gram @ self.basis.T

    def lattice(self):
        """The sublattice as an abstract Lattice with the induced form."""
        return Lattice(self.induced_gram())

    def hnf_basis(self):
        return xa.hnf(self.basis, prune=True) if self.rank else self.basis

    def same_module(self, other):
        return xa.to_lists(self.hnf_basis()) == xa.to_lists(other.hnf_basis())

    def __repr__(self):
        return f"Sublattice(rank={self.rank}, ambient_rank={self.ambient.rank})"


class DiscGroup:
    """Finite abelian group N*/N: invariant factors plus, for even lattices,
    the Q/2Z quadratic form and Q/Z bilinear form on the chosen generators."""

    __slots__ = ("invariant_factors", "q_values", "b_values")

    def __init__(self, invariant_factors, q_values=None, b_values=None):
        self.invariant_factors = list(invariant_factors)
        self.q_values = q_values
        self.b_values = b_values

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def is_trivial(self):
        return not self.invariant_factors

    def __eq__(self, other):
        if isinstance(other, (list, tuple)):
            return self.invariant_factors == list(other)
        return isinstance(other, DiscGroup) and self.invariant_factors == other.invariant_factors

    def __repr__(self):
        return f"DiscGroup({self.invariant_factors})"


def signature(L):
    """Sylvester signature via exact symmetric Gaussian elimination."""
    if not L.is_nondegenerate():
        raise DegenerateLattice("degenerate")
    n = L.rank
    M = np.array([[Fraction(L.gram[i, j]) for j in range(n)] for i in range(n)], dtype=object)
    pos = neg = 0
    idx = list(range(n))
    while idx:
        piv = next((i for i in idx if M[i, i] != 0), None)
        if piv is None:
            # all remaining diagonal entries zero; split off a hyperbolic pair (1, 1)
            i = idx[0]
            j = next(j for j in idx[1:] if M[i, j] != 0)
            pos += 1
            neg += 1
            rest = [k for k in idx if k not in (i, j)]
            s = M[i, j]
            # project the rest orthogonally to the isotropic pair (i, j):
            # v -> v - (<v,j>/s) i - (<v,i>/s) j, so <v',w'> = <v,w> - (<v,i><w,j> + <v,j><w,i>)/s
            updated = {}
            for a in rest:
                for b in rest:
                    updated[(a, b)] = M[a, b] - (M[a, i] * M[b, j] + M[a, j] * M[b, i]) / s
            for (a, b), val in updated.items():
                M[a, b] = val
            idx = rest
            continue
        d = M[piv, piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in idx if k != piv]
        for a in rest:
            if M[a, piv] != 0:
                c = M[a, piv] / d
                for b in rest:
                    M[a, b] = M[a, b] - c * M[piv, b]
                M[a, piv] = Fraction(0)
        for b in rest:
            M[piv, b] = Fraction(0)
        idx = rest
    return Signature(pos, neg)


def positive_norm_vector(L):
    """An integer vector of positive norm, via congruence diagonalization;
    None when the form is negative semidefinite."""
    n = L.rank
    if n == 0:
        return None
    M = np.array([[Fraction(L.gram[i, j]) for j in range(n)] for i in range(n)], dtype=object)
    P = np.array([[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)], dtype=object)

    def clear_denoms(row):
        from math import lcm

        d = 1
        for x in row:
            d = lcm(d, x.denominator)
        return xa.vec([int(x * d) for x in row])

    idx = list(range(n))
    while idx:
        piv = next((i for i in idx if M[i, i] > 0), None)
        if piv is not None:
            return clear_denoms(P[piv])
        piv = next((i for i in idx if M[i, i] != 0), None)
        if piv is None:
            i = idx[0]
            j = next((j for j in idx[1:] if M[i, j] != 0), None)
            if j is None:
                idx = idx[1:]
                continue
            s = M[i, j]
            v = P[i] + P[j] if s > 0 else P[i] - P[j]
            return clear_denoms(v)
        d = M[piv, piv]
        rest = [k for k in idx if k != piv]
        for a in rest:
            if M[a, piv] != 0:
                c = M[a, piv] / d
                P[a] = P[a] - c * P[piv]
                for b in rest:
                    M[a, b] = M[a, b] - c * M[piv, b]
                M[a, piv] = Fraction(0)
        for b in rest:
            M[piv, b] = Fraction(0)
        idx = rest
    return None


def discriminant_group(L):
    """Invariant factors of coker(G), with q (mod 2Z) and b (mod 1) on generators."""
    if not L.is_nondegenerate():
        raise DegenerateLattice("degenerate")
    if L.rank == 0:
        return DiscGroup([])
    res = xa.snf(L.gram)
    ds = res.diagonal
    Vinv = xa.unimodular_inverse(res.V)
    gens = [np.array(Vinv[i], dtype=object) for i in range(L.rank) if ds[i] > 1]
    factors = [d for d in ds if d > 1]
    q_values = None
    b_values = None
    if L.is_even() and gens:
        Ginv = xa.rational_inverse(L.gram)
        q_values = []
        b_values = []
        for g in gens:
            q = (g @ Ginv @ g) % 2
            q_values.append(q)
        for i, gi in enumerate(gens):
            row = []
            for gj in gens:
                row.append((gi @ Ginv @ gj) % 1)
            b_values.append(row)
    return DiscGroup(factors, q_values, b_values)


def disc_generators(L):
    """Generators of N*/N in dual-basis coordinates, with their orders (> 1)."""
    res = xa.snf(L.gram)
    ds = res.diagonal
    Vinv = xa.unimodular_inverse(res.V)
    return [(np.array(Vinv[i], dtype=object), ds[i]) for i in range(L.rank) if ds[i] > 1]


def ell(L):
    """Minimal number of generators of the discriminant group."""
    return len(discriminant_group(L).invariant_factors)


def orthogonal_complement(S):
    """Saturated sublattice of everything pairing to zero with S (primitive by construction)."""
    amb = S.ambient
    if not amb.is_nondegenerate():
        raise DegenerateLattice("degenerate ambient")
    if S.rank == 0:
        return Sublattice(amb, xa.eye(amb.rank))
    pairing = amb.gram @ S.basis.T  # n x k; complement = left kernel
    ker = xa.kernel_basis(pairing)
    return Sublattice(amb, xa.hnf(ker, prune=True) if ker.shape[0] else ker)


def saturation(S):
    """Smallest primitive sublattice containing S."""
    if S.rank == 0:
        return S
    res = xa.snf(S.basis)
    Vinv = xa.unimodular_inverse(res.V)
    rows = [Vinv[i] for i in range(res.rank)]
    return Sublattice(S.ambient, xa.hnf(np.array(rows, dtype=object), prune=True))


def is_primitive(S):
    if S.rank == 0:
        return True
    return all(d == 1 for d in xa.snf(S.basis).diagonal[: S.rank])


def intersect(S1, S2):
    """Exact intersection module (saturated whenever both inputs are primitive)."""
    if S1.ambient.rank != S2.ambient.rank:
        raise ValueError("sublattices must share the ambient lattice")
    if S1.rank == 0 or S2.rank == 0:
        return Sublattice(S1.ambient, xa.zeros(0, S1.ambient.rank))
    # kernel of x . stacked = 0 where x = (y | z) encodes y . B1 = z . B2
    stacked = np.vstack([S1.basis, -S2.basis])
    ker = xa.kernel_basis(stacked)
    if ker.shape[0] == 0:
        return Sublattice(S1.ambient, xa.zeros(0, S1.ambient.rank))
    ypart = ker[:, : S1.rank]
    rows = ypart @ S1.basis
    return Sublattice(S1.ambient, xa.hnf(rows, prune=True))


def sum_sublattices(S1, S2):
    """The (possibly non-primitive) sum, basis in pruned HNF."""
    if S1.ambient.rank != S2.ambient.rank:
        raise ValueError("sublattices must share the ambient lattice")
    if S1.rank == 0:
        return S2
    if S2.rank == 0:
        return S1
    stacked = np.vstack([S1.basis, S2.basis])
    return Sublattice(S1.ambient, xa.hnf(stacked, prune=True))


def quotient_torsion(amb, S):
    """Invariant factors > 1 of the torsion of amb / S."""
    if S.rank == 0:
        return DiscGroup([])
    return DiscGroup(xa.snf(S.basis).invariant_factors())


def coker_map(S, T_dual_target):
    """Torsion of coker(S -> T*), T* in the dual basis of T_dual_target's basis."""
    if S.ambient.rank != T_dual_target.ambient.rank:
        raise ValueError("sublattices must share the ambient lattice")
    if S.rank == 0 or T_dual_target.rank == 0:
        return DiscGroup([])
    M = S.basis @ S.ambient.gram @ T_dual_target.basis.T
    return DiscGroup(xa.snf(M).invariant_factors())


def norm_residues(L, k, budget=10**7):
    """{x . G . x^T mod k} over all x in (Z/k)^rank, by exhaustive enumeration."""
    if k < 2:
        raise ValueError("modulus must be >= 2")
    total = k**L.rank
    if total > budget:
        raise EnumerationBudgetExceeded(f"{total} vectors exceeds budget {budget}")
    out = set()
    x = [0] * L.rank
    G = [[int(L.gram[i, j]) % k for j in range(L.rank)] for i in range(L.rank)]
    while True:
        acc = 0
        for i in range(L.rank):
            if x[i]:
                row = G[i]
                acc += x[i] * sum(row[j] * x[j] for j in range(L.rank) if x[j])
        out.add(acc % k)
        i = 0
        while i < L.rank and x[i] == k - 1:
            x[i] = 0
            i += 1
        if i == L.rank:
            break
        x[i] += 1
    return out


def _coordinate_order(bound, first):
    if first:
        seq = [1, 0, -1]
    else:
        seq = [0, 1, -1]
    for m in range(2, bound + 1):
        seq.extend([m, -m])
    return [c for c in seq if abs(c) <= bound]


def candidate_vectors(n, bound):
    """Deterministic search order: shells of increasing max-abs coordinate;
    within a shell, position-major with the first coordinate cycling
    1, 0, -1, 2, -2, ... and later coordinates 0, 1, -1, 2, -2, ...."""
    for shell in range(1, bound + 1):
        orders = [_coordinate_order(shell, i == 0) for i in range(n)]
        stack = [[]]
        while stack:
            prefix = stack.pop()
            if len(prefix) == n:
                if max(abs(c) for c in prefix) == shell:
                    yield tuple(prefix)
                continue
            pos = len(prefix)
            for c in reversed(orders[pos]):
                stack.append(prefix + [c])


def find_primitive_vector(L, norm, bound):
    """A primitive vector of the requested norm with coordinates in [-bound, bound],
    or None (not a nonexistence proof)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    for x in candidate_vectors(L.rank, bound):
        g = 0
        for c in x:
            g = gcd(g, c)
        if g != 1:
            continue
        if L.norm(x) == norm:
            return xa.vec(x)
    return None


def _definite_decomposition(G):
    """G positive definite -> list of (d_i, row_i) with x G x^T = sum d_i (x_i + u_i . x_{>i})^2."""
    n = G.shape[0]
    M = np.array([[Fraction(G[i, j]) for j in range(n)] for i in range(n)], dtype=object)
    ds = []
    us = []
    for i in range(n):
        d = M[i, i]
        if d <= 0:
            raise ValueError("not positive definite")
        u = [M[i, j] / d for j in range(i + 1, n)]
        ds.append(d)
        us.append(u)
        for a in range(i + 1, n):
            for b in range(i + 1, n):
                M[a, b] = M[a, b] - M[a, i] * M[i, b] / d
        for a in range(i + 1, n):
            M[a, i] = M[i, a] = Fraction(0)
    return ds, us


def _floor_sqrt_fraction(f):
    if f < 0:
        return -1
    return isqrt((f.numerator * f.denominator)) // f.denominator if f.denominator != 1 else isqrt(f.numerator)


def definite_form_represents(L, m):
    """Exact decision: does some integer vector have norm exactly m?  Positive definite only."""
    sig = signature(L)
    if sig.negatives != 0:
        raise ValueError("indefinite: use find_primitive_vector")
    if m == 0:
        return True
    if m < 0:
        return False
    ds, us = _definite_decomposition(L.gram)
    n = L.rank

    def walk(i, remaining, tail):
        # remaining = m - sum of completed squares; tail holds x_{i+1..n-1}
        if i < 0:
            return remaining == 0
        shift = sum(us[i][j - i - 1] * tail[j - i - 1] for j in range(i + 1, n))
        # d_i (x_i + shift)^2 <= remaining
        bound = Fraction(remaining) / ds[i]
        # |x_i + shift| <= sqrt(bound)
        r = _floor_sqrt_fraction(bound)
        lo = -r - 2
        hi = r + 2
        for xi in range(int(lo - shift) - 1, int(hi - shift) + 2):
            val = ds[i] * (xi + shift) ** 2
            if val <= remaining:
                if walk(i - 1, remaining - val, [xi] + tail):
                    return True
        return False

    return walk(n - 1, Fraction(m), [])
