"""Primitive embeddings of even lattices into the K3 lattice: sufficiency and
necessity criteria, modular obstructions, and constructive search.

Fixed basis order for the K3 lattice: U, U, U, E8(-1), E8(-1), with the E8
Gram of lattice.E8 (chain 1-2-3-4-5-6-7, node 8 attached to node 5), negated.
Embedding matrices in reports are reproducible bit-for-bit against this basis.
"""

from math import gcd

import numpy as np

from . import exactalg as xa
from . import lattice as lat

EXISTS_BY_CRITERION = "ExistsPrimitiveByCriterion"
EXISTS_CONSTRUCTED = "ExistsConstructed"
IMPOSSIBLE_NECESSARY = "ImpossibleByNecessary"
IMPOSSIBLE_OBSTRUCTION = "ImpossibleByObstruction"
UNKNOWN = "Unknown"


class EmbeddingVerdict:
    def __init__(self, status, basis=None, primitive=None, criterion=None,
                 modulus=None, residue=None, unique=None):
        self.status = status
        self.basis = basis
        self.primitive = primitive
        self.criterion = criterion
        self.modulus = modulus
        self.residue = residue
        self.unique = unique

    def __repr__(self):
        extra = ""
        if self.criterion:
            extra = f"({self.criterion})"
        if self.status == IMPOSSIBLE_OBSTRUCTION:
            extra = f"(mod {self.modulus}, residue {self.residue})"
        return f"EmbeddingVerdict({self.status}{extra})"


_K3 = None


def k3_lattice():
    """2E8(-1) + 3U, basis order U, U, U, E8(-1), E8(-1); even unimodular (3, 19)."""
    global _K3
    if _K3 is None:
        _K3 = lat.direct_sum(lat.U(), lat.U(), lat.U(), lat.E8(-1), lat.E8(-1))
    return _K3


K3_SIGNATURE = (3, 19)
K3_RANK = 22


def nikulin_sufficient(W, target_sig=K3_SIGNATURE, target_rank=K3_RANK):
    """True with criterion tag when the sufficient conditions apply; False
    means the criterion is silent, not that embedding is impossible."""
    sig = lat.signature(W)
    if not (sig.positives <= target_sig[0] and sig.negatives <= target_sig[1]):
        return None
    if 2 * W.rank <= target_rank:
        return "i"
    if W.rank + lat.ell(W) < target_rank:
        return "ii"
    return None


def necessary_condition(W, target_rank=K3_RANK):
    """rk W + l(W) <= rk L; False rules out any primitive embedding."""
    return W.rank + lat.ell(W) <= target_rank


def uniqueness(W, target_rank=K3_RANK):
    """True: unique up to automorphisms of the target (given existence);
    False: undetermined."""
    return W.rank + lat.ell(W) + 2 <= target_rank


def verify_embedding(W, ambient, basis):
    """Exact Gram check plus primitivity of the image."""
    B = xa.mat(basis)
    sub = lat.Sublattice(ambient, B)
    if xa.to_lists(sub.induced_gram()) != xa.to_lists(W.gram):
        return None
    return lat.is_primitive(sub)


def cotorsion(ambient, basis):
    """Invariant factors > 1 of Tor(ambient / image)."""
    return lat.quotient_torsion(ambient, lat.Sublattice(ambient, xa.mat(basis)))


def mod_obstruction(T, m, k, budget=10**7):
    """True iff m mod k misses the norm residues of T, certifying that T
    represents no vector of norm m (hence no perpendicular rank-1 partner)."""
    return (m % k) not in lat.norm_residues(T, k, budget=budget)


def embed_into_complement(T, m, bound):
    """A primitive norm-m vector of T within the coordinate bound, or None."""
    return lat.find_primitive_vector(T, m, bound)


def _gram_blocks(gram):
    """Connected components of the Gram matrix as (sorted index tuple) lists."""
    n = gram.shape[0]
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and gram[i, j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _e8_vector_of_norm(norm):
    """First vector of the given positive norm in E8 (definite search)."""
    E8 = lat.E8()
    for bound in (1, 2, 3):
        for x in lat.candidate_vectors(8, bound):
            if E8.norm(x) == norm:
                return xa.vec(x)
    return None


class _SlotAllocator:
    """Tracks which U / E8 slots of the K3 basis are still free."""

    def __init__(self):
        self.u_slots = [0, 2, 4]  # coordinate offsets of the three U factors
        self.e8_slots = [6, 14]

    def take_u(self):
        return self.u_slots.pop(0) if self.u_slots else None

    def take_e8(self):
        return self.e8_slots.pop(0) if self.e8_slots else None


# Verbatim constructions for blocks the hand patterns cover awkwardly.
# Keyed by the exact Gram (as nested lists); values are rows in the K3 basis.
def _builtin_embeddings():
    rows_2n0_3u = [
        [4, 1, 0, 0, 0, 0],
        [0, 0, -8, 1, 0, 0],
        [0, 0, 0, 0, 4, 1],
        [-4, 1, 0, 0, -4, 1],
    ]
    gram_2n0 = [
        [8, 0, 0, 0],
        [0, -16, 0, 0],
        [0, 0, 8, 0],
        [0, 0, 0, -16],
    ]
    rows_w44_2u = [
        [2, 1, 2, 0],
        [0, 1, 0, 1],
        [-2, 0, 2, 1],
        [0, -1, 0, 1],
    ]
    gram_w44 = [
        [4, 4, 0, 0],
        [4, 0, 0, 0],
        [0, 0, 4, 4],
        [0, 0, 4, 0],
    ]
    rows_w11_3u = [
        [0, 0, 1, 2, 2, 2],
        [0, 0, 1, 0, 1, 0],
        [1, 0, 2, 2, -1, -2],
        [0, -1, 0, 2, 0, -1],
    ]
    gram_w11 = [
        [12, 4, 0, 0],
        [4, 0, 0, 1],
        [0, 0, 12, 4],
        [0, 1, 4, 0],
    ]
    return [
        (gram_2n0, rows_2n0_3u, 6),
        (gram_w44, rows_w44_2u, 4),
        (gram_w11, rows_w11_3u, 6),
    ]


def _pad_rows(rows, offset, total):
    out = []
    for row in rows:
        full = [0] * total
        for j, v in enumerate(row):
            full[offset + j] = v
        out.append(full)
    return out


def _library_block(block_gram, slots):
    """Rows in K3 coordinates realizing one connected Gram block, or None."""
    k = len(block_gram)
    total = K3_RANK
    if k == 1:
        d = block_gram[0][0]
        if d % 2 != 0:
            return None
        off = slots.take_u()
        if off is None:
            return None
        row = [0] * total
        row[off] = 1
        row[off + 1] = d // 2
        return [row]
    if k == 2:
        g = block_gram
        if g == [[0, 1], [1, 0]]:
            off = slots.take_u()
            if off is None:
                return None
            rows = [[0] * total, [0] * total]
            rows[0][off] = 1
            rows[1][off + 1] = 1
            return rows
        if g[0][0] == 0 and g[1][1] == 0 and g[0][1] == g[1][0] and g[0][1] > 1:
            kk = g[0][1]
            # U(k) via two U slots when available: (1,0 | 0,0), (-1,k | k,1)
            if len(slots.u_slots) >= 2:
                o1 = slots.take_u()
                o2 = slots.take_u()
                r1 = [0] * total
                r1[o1] = 1
                r2 = [0] * total
                r2[o1] = -1
                r2[o1 + 1] = kk
                r2[o2] = kk
                r2[o2 + 1] = 1
                return [r1, r2]
            # else one U slot plus a norm -2k vector in an E8(-1) slot
            ou = slots.take_u()
            oe = slots.take_e8()
            if ou is None or oe is None:
                return None
            y = _e8_vector_of_norm(2 * kk)
            if y is None:
                return None
            r1 = [0] * total
            r1[ou] = 1
            r2 = [0] * total
            r2[ou] = 1
            r2[ou + 1] = kk
            for j, v in enumerate(y):
                r2[oe + j] = int(v)
            return [r1, r2]
        if g == [[-2, 1], [1, -2]]:
            oe = slots.take_e8()
            if oe is None:
                return None
            rows = [[0] * total, [0] * total]
            rows[0][oe] = 1
            rows[1][oe + 1] = 1
            return rows
    if k == 8 and block_gram == xa.to_lists(lat.E8(-1).gram):
        oe = slots.take_e8()
        if oe is None:
            return None
        rows = []
        for i in range(8):
            row = [0] * total
            row[oe + i] = 1
            rows.append(row)
        return rows
    return None


def _library_strategy(W):
    target = k3_lattice()
    glists = xa.to_lists(W.gram)
    for gram, rows, _width in _builtin_embeddings():
        if glists == gram:
            padded = _pad_rows(rows, 0, K3_RANK)
            prim = verify_embedding(W, target, padded)
            if prim is not None:
                return padded, prim
    comps = _gram_blocks(W.gram)
    slots = _SlotAllocator()
    rows_by_index = {}
    for comp in comps:
        block = [[int(W.gram[i, j]) for j in comp] for i in comp]
        got = _library_block(block, slots)
        if got is None:
            return None
        for i, row in zip(comp, got):
            rows_by_index[i] = row
    rows = [rows_by_index[i] for i in range(W.rank)]
    prim = verify_embedding(W, target, rows)
    if prim is None:
        return None
    return rows, prim


_POOL_SIZE_CAP = 30000


def _block_pool(block_gram, bound):
    """All vectors of one ambient block with coordinates in [-bound, bound],
    as (coords, norm) in deterministic order; includes the zero vector.

    High-rank blocks cap the coordinate bound so the pool stays enumerable."""
    n = len(block_gram)
    b = bound
    while b > 1 and (2 * b + 1) ** n > _POOL_SIZE_CAP:
        b -= 1
    L = lat.Lattice(block_gram)
    pool = [((0,) * n, 0)]
    for x in lat.candidate_vectors(n, b):
        pool.append((x, L.norm(x)))
    return pool


def _backtracking_strategy(W, ambient, bound, require_primitive=False, prefix=None):
    """Blockwise DFS with interval pruning; deterministic; honest None on failure.

    With `prefix`, those rows are fixed as the first basis vectors and only the
    remaining rows of W's Gram are searched."""
    comps = _gram_blocks(ambient.gram)
    blocks = []
    for comp in comps:
        bg = [[int(ambient.gram[i, j]) for j in comp] for i in comp]
        pool = _block_pool(bg, bound)
        blocks.append((comp, bg, pool))
    target = xa.to_lists(W.gram)
    n = ambient.rank
    placed = [list(map(int, row)) for row in prefix] if prefix is not None else []

    norm_ranges = []
    for comp, bg, pool in blocks:
        norms = [nm for _, nm in pool]
        norm_ranges.append((min(norms), max(norms)))

    def pair_block(bg, x, y):
        return sum(x[a] * bg[a][b] * y[b] for a in range(len(x)) for b in range(len(x)) if x[a] and bg[a][b] and y[b])

    def pieces_of(vec_full):
        return [tuple(vec_full[i] for i in comp) for comp, _, _ in blocks]

    def place(i):
        if i == W.rank:
            return not require_primitive or lat.is_primitive(lat.Sublattice(ambient, xa.mat(placed)))
        prev_pieces = [pieces_of(v) for v in placed]

        def extend(bi, chosen, norm_acc, pair_acc):
            if bi == len(blocks):
                if norm_acc != target[i][i]:
                    return False
                for t in range(i):
                    if pair_acc[t] != target[i][t]:
                        return False
                full = [0] * n
                for (comp, _, _), piece in zip(blocks, chosen):
                    for idx, v in zip(comp, piece):
                        full[idx] = v
                if any(full):
                    rows = placed + [full]
                    if xa.rank(xa.mat(rows)) == len(rows):
                        placed.append(full)
                        if place(i + 1):
                            return True
                        placed.pop()
                return False
            comp, bg, pool = blocks[bi]
            lo_rest = sum(norm_ranges[bj][0] for bj in range(bi + 1, len(blocks)))
            hi_rest = sum(norm_ranges[bj][1] for bj in range(bi + 1, len(blocks)))
            # max |pairing| contribution of later blocks against previous vectors
            pair_caps = []
            for t in range(i):
                cap = 0
                for bj in range(bi + 1, len(blocks)):
                    compj, bgj, poolj = blocks[bj]
                    prev_piece = prev_pieces[t][bj]
                    cap += max(abs(pair_block(bgj, x, prev_piece)) for x, _ in poolj)
                pair_caps.append(cap)
            for piece, nm in pool:
                na = norm_acc + nm
                if not (target[i][i] - hi_rest <= na <= target[i][i] - lo_rest):
                    continue
                pa = list(pair_acc)
                ok = True
                for t in range(i):
                    pa[t] += pair_block(bg, piece, prev_pieces[t][bi])
                    if abs(pa[t] - target[i][t]) > pair_caps[t]:
                        ok = False
                        break
                if ok and extend(bi + 1, chosen + [piece], na, pa):
                    return True
            return False

        return extend(0, [], 0, [0] * i)

    if place(len(placed)):
        return [list(map(int, row)) for row in placed]
    return None


def extend_rows(W, ambient, prefix_rows, bound=3, require_primitive=False):
    """Complete fixed leading rows to a full basis matching W's Gram, or None."""
    return _backtracking_strategy(W, ambient, bound, require_primitive=require_primitive,
                                  prefix=prefix_rows)


def construct_embedding(W, strategy="library", bound=3, ambient=None, require_primitive=False):
    """Explicit basis into the ambient (default: K3 lattice) verified isometric,
    or Unknown within the search bound."""
    target = ambient if ambient is not None else k3_lattice()
    if W.rank > target.rank:
        raise ValueError("dimension mismatch: W larger than the ambient lattice")
    if strategy == "library":
        got = _library_strategy(W) if ambient is None else None
        if got is None:
            return EmbeddingVerdict(UNKNOWN)
        rows, prim = got
        return EmbeddingVerdict(EXISTS_CONSTRUCTED, basis=xa.mat(rows), primitive=prim,
                                unique=uniqueness(W, target.rank) or None)
    if strategy == "backtracking":
        rows = _backtracking_strategy(W, target, bound, require_primitive=require_primitive)
        if rows is None:
            return EmbeddingVerdict(UNKNOWN)
        prim = verify_embedding(W, target, rows)
        return EmbeddingVerdict(EXISTS_CONSTRUCTED, basis=xa.mat(rows), primitive=prim,
                                unique=uniqueness(W, target.rank) or None)
    raise ValueError(f"unknown strategy {strategy!r}")


def pad_to_k3(rows, offset=0):
    """Rows given in a leading sub-block of the K3 basis, zero-padded to rank 22."""
    return xa.mat(_pad_rows(xa.to_lists(xa.mat(rows)), offset, K3_RANK))
