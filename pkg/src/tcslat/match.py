"""Matching certificates, pair enumeration over the catalog, and geography
reports: which pairs of building blocks can be glued, with which lattice data,
and what census of invariants results."""

from math import gcd

import numpy as np

from . import blocks as blk
from . import embed
from . import exactalg as xa
from . import glue
from . import lattice as lat
from . import tcs
from .embed import k3_lattice

PUSHOUT_FAILURE = "PushoutFailure"
EMBEDDING_IMPOSSIBLE = "EmbeddingImpossible"
EMBEDDING_UNKNOWN = "EmbeddingUnknown"
SIGNATURE_MISMATCH = "SignatureMismatch"
AMPLE_CONE_UNASSERTED = "AmpleConeUnasserted"


class MatchFailure:
    def __init__(self, code, detail=""):
        self.code = code
        self.detail = detail

    def __repr__(self):
        return f"MatchFailure({self.code}, {self.detail!r})"


class PerpendicularPrimitive:
    mode_name = "perpendicular-primitive"


class PerpendicularOverlattice:
    mode_name = "perpendicular-overlattice"

    def __init__(self, glue_index):
        # smallest nontrivial overlattice index to use, or an OverlatticeSpec
        self.glue_index = glue_index


class Orthogonal:
    mode_name = "orthogonal"

    def __init__(self, r_gram, r_in_plus, r_in_minus, w_embedding=None):
        self.r_gram = r_gram
        self.r_in_plus = r_in_plus
        self.r_in_minus = r_in_minus
        self.w_embedding = w_embedding  # optional explicit rows of W in the ambient


class Handcrafted:
    mode_name = "handcrafted"

    def __init__(self, w_gram, n_plus_rows, n_minus_rows, w_embedding=None):
        self.w_gram = w_gram
        self.n_plus_rows = n_plus_rows  # N+ basis in W coordinates
        self.n_minus_rows = n_minus_rows
        self.w_embedding = w_embedding


class MatchingTriple:
    def __init__(self, k_plus, k_minus, k_0, norms):
        self.k_plus = k_plus
        self.k_minus = k_minus
        self.k_0 = k_0
        self.norms = norms


class MatchCertificate:
    def __init__(self, block_plus, block_minus, mode, w, embedding, sig_check,
                 emb_plus=None, emb_minus=None, w_plus=None, w_minus=None, t=None,
                 positivity=None, ample_auto=False, ample_cone_asserted=False,
                 rho=0):
        self.block_plus = block_plus
        self.block_minus = block_minus
        self.mode = mode
        self.w = w
        self.embedding = embedding
        self.sig_check = sig_check
        self.emb_plus = emb_plus
        self.emb_minus = emb_minus
        self.w_plus = w_plus
        self.w_minus = w_minus
        self.t = t
        self.positivity = positivity
        self.ample_auto = ample_auto
        self.ample_cone_asserted = ample_cone_asserted
        self.rho = rho
        self.triple = None

    def is_explicit(self):
        return self.emb_plus is not None

    def to_config(self, resolution_plus=None, resolution_minus=None, div_c2_mod_image=None,
                  name=""):
        if not self.is_explicit():
            raise ValueError("certificate has no explicit embedding")
        return tcs.GluingConfig(
            self.block_plus,
            self.block_minus,
            xa.to_lists(self.emb_plus.basis),
            xa.to_lists(self.emb_minus.basis),
            resolution_plus=resolution_plus,
            resolution_minus=resolution_minus,
            div_c2_mod_image=div_c2_mod_image,
            ample_cone_asserted=self.ample_cone_asserted or self.ample_auto,
            name=name or f"{self.block_plus.id}x{self.block_minus.id}",
        )

    def dump(self):
        lines = [
            f"blocks = {self.block_plus.id} x {self.block_minus.id}",
            f"mode = {self.mode.mode_name}",
            f"w_rank = {self.w.rank}",
            f"embedding = {self.embedding!r}",
            f"sig_check = {self.sig_check}",
            f"positivity = {self.positivity}",
            f"ample_hypothesis = {'auto' if self.ample_auto else ('asserted' if self.ample_cone_asserted else 'unasserted')}",
        ]
        if self.is_explicit():
            lines.append(f"emb_plus = {xa.to_lists(self.emb_plus.basis)}")
            lines.append(f"emb_minus = {xa.to_lists(self.emb_minus.basis)}")
        if self.triple is not None:
            lines.append(f"triple_norms = {self.triple.norms}")
        return "\n".join(lines)


def _embed_factor_pair_disjoint(gp, gm):
    """Perpendicular primitive embeddings of two small lattices in disjoint slots."""
    L = k3_lattice()
    n_used = 0
    out = []
    layouts = (
        (0, lat.direct_sum(lat.U(), lat.U()), (0, 1, 2, 3)),
        (1, lat.direct_sum(lat.U(), lat.E8(-1)), (4, 5, 6, 7, 8, 9, 10, 11, 12, 13)),
    )
    for gram, (slot, amb, coords) in zip((gp, gm), layouts):
        W = lat.Lattice(gram)
        if W.rank > amb.rank:
            return None
        bound = max(3, max(abs(int(x)) for row in gram for x in row) // 2 + 1)
        v = embed.construct_embedding(W, strategy="backtracking", bound=bound, ambient=amb,
                                      require_primitive=True)
        if v.status != embed.EXISTS_CONSTRUCTED or not v.primitive:
            return None
        rows = []
        for row in xa.to_lists(v.basis):
            full = [0] * 22
            for j, c in enumerate(row):
                full[coords[j]] = c
            rows.append(full)
        out.append(rows)
    return out


def _rank1_partner_embedding(big, small):
    """Explicit embeddings for the rank-16 block against a rank-1 partner, or a
    machine-readable failure: modular obstructions first, then bounded search."""
    bs = blk.burkhardt_structure()
    T = lat.direct_sum(lat.A2(-1), lat.U(3), lat.U(3))
    m = small.n_gram[0][0]
    for k in (2, 3, 4, 5):
        try:
            if embed.mod_obstruction(T, m, k):
                return MatchFailure(EMBEDDING_IMPOSSIBLE, f"mod-{k} obstruction, m = {m}")
        except lat.EnumerationBudgetExceeded:
            continue
    x = embed.embed_into_complement(T, m, bound=5)
    if x is None:
        return MatchFailure(EMBEDDING_UNKNOWN, f"no primitive norm-{m} vector within bound")
    x_in_L = [int(t) for t in (xa.vec(list(x)) @ bs.t_rows)]
    return xa.to_lists(bs.n_basis), [x_in_L]


def _perpendicular_certificate(plus, minus, explicit):
    L = k3_lattice()
    Np_gram = lat.Lattice(plus.n_gram)
    Nm_gram = lat.Lattice(minus.n_gram)
    W = glue.perpendicular_sum(Np_gram, Nm_gram)
    r = W.rank
    sig_ok = lat.signature(W).as_pair() == (2, r - 2)
    if not sig_ok:
        return MatchFailure(SIGNATURE_MISMATCH, f"W has signature {lat.signature(W).as_pair()}")
    if not embed.necessary_condition(W):
        # a primitive W is ruled out; explicit construction may still succeed
        if explicit is None:
            return MatchFailure(EMBEDDING_IMPOSSIBLE, "necessary rank/discriminant condition fails")
    criterion = embed.nikulin_sufficient(W)
    verdict = None
    emb_rows = explicit
    if emb_rows is None:
        got = _embed_factor_pair_disjoint(plus.n_gram, minus.n_gram)
        if got is not None:
            emb_rows = got
    if emb_rows is not None:
        ep, em = emb_rows
        stacked = xa.mat(list(ep) + list(em))
        prim = embed.verify_embedding(W, L, stacked)
        if prim is None:
            return MatchFailure(EMBEDDING_IMPOSSIBLE, "explicit rows are not isometric to W")
        verdict = embed.EmbeddingVerdict(embed.EXISTS_CONSTRUCTED, basis=stacked, primitive=prim,
                                         unique=embed.uniqueness(W) or None)
    elif criterion is not None:
        verdict = embed.EmbeddingVerdict(embed.EXISTS_BY_CRITERION, criterion=criterion,
                                         unique=embed.uniqueness(W) or None)
    else:
        return MatchFailure(EMBEDDING_UNKNOWN, "criterion silent and no construction found")
    cert = MatchCertificate(plus, minus, PerpendicularPrimitive(), W, verdict, sig_ok,
                            ample_auto=True, rho=0)
    if verdict.status == embed.EXISTS_CONSTRUCTED:
        ep, em = emb_rows
        _attach_geometry(cert, ep, em)
    else:
        cert.positivity = {
            "w_plus": (1, plus.rank - 1),
            "w_minus": (1, minus.rank - 1),
            "t": (1, 21 - r),
        }
    return cert


def _attach_geometry(cert, ep, em, check_rank_formula=True):
    L = k3_lattice()
    cert.emb_plus = lat.Sublattice(L, ep)
    cert.emb_minus = lat.Sublattice(L, em)
    Tp = lat.orthogonal_complement(cert.emb_plus)
    Tm = lat.orthogonal_complement(cert.emb_minus)
    cert.w_plus = lat.intersect(cert.emb_plus, Tm)
    cert.w_minus = lat.intersect(cert.emb_minus, Tp)
    w_image = lat.sum_sublattices(cert.emb_plus, cert.emb_minus)
    cert.t = lat.orthogonal_complement(w_image)
    r = w_image.rank
    if check_rank_formula:
        # ranks as in the orthogonal-pushout matching argument
        expect_ranks = (cert.emb_plus.rank - cert.rho, cert.emb_minus.rank - cert.rho, 22 - r)
        got_ranks = (cert.w_plus.rank, cert.w_minus.rank, cert.t.rank)
        if expect_ranks != got_ranks:
            raise AssertionError(f"rank mismatch: expected {expect_ranks}, got {got_ranks}")
    got = {
        "w_plus": lat.signature(cert.w_plus.lattice()).as_pair(),
        "w_minus": lat.signature(cert.w_minus.lattice()).as_pair(),
        "t": lat.signature(cert.t.lattice()).as_pair(),
    }
    cert.positivity = got
    # each piece must carry exactly one positive direction
    expect = {name: (1, sub.rank - 1) for name, sub in
              (("w_plus", cert.w_plus), ("w_minus", cert.w_minus), ("t", cert.t))}
    if got != expect:
        raise AssertionError(f"positivity mismatch: expected {expect}, got {got}")


def build_certificate(plus, minus, mode, ample_cone_asserted=False, explicit=None):
    """Assemble the arithmetic evidence that the pair can be matched, or a
    failure with a machine-readable reason."""
    L = k3_lattice()
    if isinstance(mode, PerpendicularPrimitive):
        use_explicit = explicit
        if use_explicit is None and plus.id == "Ex7.7" and minus.rank == 1:
            got = _rank1_partner_embedding(plus, minus)
            if isinstance(got, MatchFailure):
                return got
            use_explicit = got
        cert = _perpendicular_certificate(plus, minus, use_explicit)
        return cert
    if isinstance(mode, PerpendicularOverlattice):
        specs = glue.enumerate_overlattices(lat.Lattice(plus.n_gram), lat.Lattice(minus.n_gram),
                                            max_index=mode.glue_index)
        specs = [s for s in specs if s.index == mode.glue_index]
        if not specs:
            return MatchFailure(EMBEDDING_IMPOSSIBLE, f"no index-{mode.glue_index} overlattice")
        spec = specs[0]
        Wp = spec.w_gram
        r = Wp.rank
        if lat.signature(Wp).as_pair() != (2, r - 2):
            return MatchFailure(SIGNATURE_MISMATCH, "overlattice signature")
        v = embed.construct_embedding(Wp, strategy="backtracking", bound=3,
                                      ambient=lat.direct_sum(lat.U(), lat.U(), lat.U()),
                                      require_primitive=True)
        if v.status != embed.EXISTS_CONSTRUCTED or not v.primitive:
            return MatchFailure(EMBEDDING_UNKNOWN, "no primitive placement of the overlattice found")
        B = [row + [0] * 16 for row in xa.to_lists(v.basis)]
        Binv = xa.rational_inverse(spec.basis_rational)
        np_rows = [[1 if i == j else 0 for j in range(r)] for i in range(plus.rank)]
        nm_rows = [[1 if i + plus.rank == j else 0 for j in range(r)] for i in range(minus.rank)]
        ep = xa.to_lists(xa.mat([[int(x) for x in (xa.vec(row) @ Binv)] for row in np_rows]) @ xa.mat(B))
        em = xa.to_lists(xa.mat([[int(x) for x in (xa.vec(row) @ Binv)] for row in nm_rows]) @ xa.mat(B))
        stacked_gram = lat.Sublattice(L, ep + em).induced_gram()
        W = lat.Lattice(stacked_gram)
        verdict = embed.EmbeddingVerdict(embed.EXISTS_CONSTRUCTED, basis=xa.mat(ep + em),
                                         primitive=False)
        cert = MatchCertificate(plus, minus, mode, W, verdict,
                                lat.signature(W).as_pair() == (2, W.rank - 2),
                                ample_auto=True, rho=0)
        _attach_geometry(cert, ep, em)
        return cert
    if isinstance(mode, (Orthogonal, Handcrafted)):
        if isinstance(mode, Orthogonal):
            spec = glue.PushoutSpec(lat.Lattice(plus.n_gram), lat.Lattice(minus.n_gram),
                                    lat.Lattice(mode.r_gram), mode.r_in_plus, mode.r_in_minus)
            res = glue.orthogonal_pushout(spec)
            if isinstance(res, glue.IntegralityFailure):
                return MatchFailure(PUSHOUT_FAILURE, repr(res))
            W = res.w
            rho = spec.r.rank
            n_plus_in_w = res.n_plus_in_w.basis
            n_minus_in_w = res.n_minus_in_w.basis
            # hypothesis on the positive cones
            if plus.kind == "nonsymplectic" and minus.kind == "nonsymplectic":
                neg_r = [[-x for x in row] for row in mode.r_gram]
                if lat.definite_form_represents(lat.Lattice(neg_r), 2):
                    return MatchFailure(AMPLE_CONE_UNASSERTED, "R contains a -2 class")
                ample_ok = True
            else:
                if not ample_cone_asserted:
                    return MatchFailure(
                        AMPLE_CONE_UNASSERTED,
                        "non-perpendicular gluing of these blocks needs the positive-cone assertion",
                    )
                ample_ok = True
        else:
            W = lat.Lattice(mode.w_gram)
            rho = plus.rank + minus.rank - W.rank
            n_plus_in_w = xa.mat(mode.n_plus_rows)
            n_minus_in_w = xa.mat(mode.n_minus_rows)
            if not ample_cone_asserted:
                return MatchFailure(AMPLE_CONE_UNASSERTED, "handcrafted gluing needs the positive-cone assertion")
            ample_ok = True
        r = W.rank
        if lat.signature(W).as_pair() != (2, r - 2):
            return MatchFailure(SIGNATURE_MISMATCH, f"W has signature {lat.signature(W).as_pair()}")
        if mode.w_embedding is not None:
            rows = mode.w_embedding
            prim = embed.verify_embedding(W, L, rows)
            if prim is None:
                return MatchFailure(EMBEDDING_IMPOSSIBLE, "provided rows are not isometric to W")
        else:
            v = None
            for bound in (2, 3, 4):
                cand = embed.construct_embedding(W, strategy="backtracking", bound=bound,
                                                 ambient=lat.direct_sum(lat.U(), lat.U(), lat.U()),
                                                 require_primitive=True)
                if cand.status == embed.EXISTS_CONSTRUCTED and cand.primitive:
                    v = cand
                    break
            if v is None:
                return MatchFailure(EMBEDDING_UNKNOWN, "no primitive placement of W found")
            rows = [row + [0] * 16 for row in xa.to_lists(v.basis)]
            prim = True
        verdict = embed.EmbeddingVerdict(embed.EXISTS_CONSTRUCTED, basis=xa.mat(rows), primitive=prim)
        ep = xa.to_lists(xa.mat(n_plus_in_w) @ xa.mat(rows))
        em = xa.to_lists(xa.mat(n_minus_in_w) @ xa.mat(rows))
        cert = MatchCertificate(plus, minus, mode, W, verdict,
                                True, ample_cone_asserted=ample_cone_asserted, rho=rho)
        cert.ample_auto = ample_ok and isinstance(mode, Orthogonal) and plus.kind == "nonsymplectic"
        _attach_geometry(cert, ep, em, check_rank_formula=isinstance(mode, Orthogonal))
        return cert
    raise ValueError(f"unknown mode {mode!r}")


def _first_positive_combination(sub):
    """Deterministic positive-norm vector: basis rows, then pairwise sums and
    differences, then an exact diagonalization fallback."""
    amb = sub.ambient
    k = sub.rank
    for i in range(k):
        v = sub.basis[i]
        if int(v @ amb.gram @ v) > 0:
            return v
    for i in range(k):
        for j in range(i + 1, k):
            for s in (1, -1):
                v = sub.basis[i] + s * sub.basis[j]
                if int(v @ amb.gram @ v) > 0:
                    return v
    coeffs = lat.positive_norm_vector(sub.lattice())
    if coeffs is None:
        return None
    return coeffs @ sub.basis


def propose_triple(cert):
    """Deterministic rational matching triple from a complete certificate."""
    if not cert.is_explicit():
        raise ValueError("certificate has no explicit embedding")
    amb = k3_lattice()

    def a_image(emb, rec, w_side):
        v = xa.vec(rec.anticanonical_class) @ emb.basis
        if int(v @ amb.gram @ v) > 0 and xa.solve_integer(w_side.basis, list(v)) is not None:
            return v
        return None

    kp = a_image(cert.emb_plus, cert.block_plus, cert.w_plus)
    if kp is None:
        kp = _first_positive_combination(cert.w_plus)
    km = a_image(cert.emb_minus, cert.block_minus, cert.w_minus)
    if km is None:
        km = _first_positive_combination(cert.w_minus)
    k0 = _first_positive_combination(cert.t)
    if kp is None or km is None or k0 is None:
        raise AssertionError("no positive vector found: signature bookkeeping is wrong")
    norms = tuple(int(v @ amb.gram @ v) for v in (kp, km, k0))
    triple = MatchingTriple(kp, km, k0, norms)
    ok, reasons = verify_triple(triple, cert.emb_plus, cert.emb_minus)
    if not ok:
        raise AssertionError(f"proposed triple fails verification: {reasons}")
    cert.triple = triple
    return triple


def verify_triple(triple, emb_plus, emb_minus):
    """Membership, pairwise orthogonality and positivity, all exact over Q."""
    amb = emb_plus.ambient
    reasons = []
    Tp = lat.orthogonal_complement(emb_plus)
    Tm = lat.orthogonal_complement(emb_minus)

    def in_span(v, sub):
        if sub.rank == 0:
            return False
        scaled, denom = _clear_denominators(v)
        aug = np.vstack([sub.basis, [scaled]])
        return xa.rank(aug) == sub.rank

    checks = (
        ("k_plus in span(N+)", triple.k_plus, emb_plus),
        ("k_plus in span(T-)", triple.k_plus, Tm),
        ("k_minus in span(N-)", triple.k_minus, emb_minus),
        ("k_minus in span(T+)", triple.k_minus, Tp),
        ("k_0 in span(T+)", triple.k_0, Tp),
        ("k_0 in span(T-)", triple.k_0, Tm),
    )
    for label, v, sub in checks:
        if not in_span(v, sub):
            reasons.append(f"membership fails: {label}")
    vecs = (triple.k_plus, triple.k_minus, triple.k_0)
    names = ("k_plus", "k_minus", "k_0")
    for i in range(3):
        for j in range(i + 1, 3):
            if int(vecs[i] @ amb.gram @ vecs[j]) != 0:
                reasons.append(f"orthogonality fails: {names[i]} . {names[j]} != 0")
    for name, v in zip(names, vecs):
        if int(v @ amb.gram @ v) <= 0:
            reasons.append(f"positivity fails: {name}")
    return (not reasons), reasons


def _clear_denominators(v):
    from fractions import Fraction
    from math import lcm

    denom = 1
    for x in v:
        denom = lcm(denom, Fraction(x).denominator)
    return [int(Fraction(x) * denom) for x in v], denom


def enumerate_pairs(cat, pair_filter="none"):
    """Unordered pairs with repetition (self-pairs allowed)."""
    recs = sorted(cat, key=lambda r: r.id)
    out = []
    for i, a in enumerate(recs):
        for b in recs[i:]:
            if pair_filter == "none":
                out.append((a, b))
                continue
            if pair_filter == "rank_11":
                if a.rank + b.rank <= 11:
                    out.append((a, b))
                continue
            if pair_filter == "rank_ell_22":
                if a.gramless or b.gramless:
                    ell_bound = (a.ell() or 0) + (b.ell() or 0)
                else:
                    ell_bound = lat.ell(lat.direct_sum(lat.Lattice(a.n_gram), lat.Lattice(b.n_gram)))
                if a.rank + b.rank + ell_bound < 22:
                    out.append((a, b))
                continue
            raise ValueError(f"unknown filter {pair_filter!r}")
    return out


class GeographyReport:
    def __init__(self, rows, totals, summary, key="b"):
        self.rows = rows  # list of (b, count, {div: n})
        self.totals = totals  # (count, {div: n})
        self.summary = summary  # dict of key-value lines
        self.key = key

    DIVS = (4, 8, 12, 16, 24, 48)

    def to_tsv(self):
        lines = ["\t".join([self.key, "count"] + [f"d{d}" for d in self.DIVS])]
        for b, count, divs in self.rows:
            lines.append("\t".join([str(b), str(count)] + [str(divs.get(d, 0)) for d in self.DIVS]))
        count, divs = self.totals
        lines.append("\t".join(["total", str(count)] + [str(divs.get(d, 0)) for d in self.DIVS]))
        return "\n".join(lines)

    def to_human(self):
        header = [self.key, "count"] + [f"d{d}" for d in self.DIVS]
        body = [[str(b), str(count)] + [str(divs.get(d, 0)) for d in self.DIVS]
                for b, count, divs in self.rows]
        count, divs = self.totals
        body.append(["total", str(count)] + [str(divs.get(d, 0)) for d in self.DIVS])
        widths = [max(len(header[i]), max(len(row[i]) for row in body)) for i in range(len(header))]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        lines.append("  ".join("-" * w for w in widths))
        for row in body:
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
        return "\n".join(lines)

    def summary_lines(self):
        return "\n".join(f"{k} = {v}" for k, v in self.summary.items())

    def row_for(self, b):
        for row in self.rows:
            if row[0] == b:
                return row
        return None


def _pair_div_p1_values(a, b, resolutions):
    if not a.div_c2 or not b.div_c2:
        return []
    values = sorted({2 * gcd(x, y) for x in a.div_c2 for y in b.div_c2})
    if resolutions == "all":
        return values
    return [max(values)]


def _pair_stat(a, b, resolutions):
    if a.b3_Z is None or b.b3_Z is None:
        return None
    return (a.b3_Z + b.b3_Z, tuple(_pair_div_p1_values(a, b, resolutions)))


def _pair_stats(pairs, resolutions, jobs):
    if jobs <= 1:
        return [_pair_stat(a, b, resolutions) for a, b in pairs]
    # data-parallel map; the aggregation below is associative and commutative,
    # and the input order is already deterministic
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_pair_stat, *zip(*((a, b) for a, b in pairs)),
                             [resolutions] * len(pairs), chunksize=32))


def _geography(pairs, resolutions, jobs=1):
    rows = {}
    types = set()
    no_c2 = 0
    skipped_gramless = 0
    total = 0
    for stat in _pair_stats(list(pairs), resolutions, jobs):
        if stat is None:
            skipped_gramless += 1
            continue
        total += 1
        bsum, values = stat
        entry = rows.setdefault(bsum, [0, {}])
        entry[0] += 1
        if not values:
            no_c2 += 1
        for v in values:
            entry[1][v] = entry[1].get(v, 0) + 1
            types.add((bsum, v))
    ordered = [(b, c, divs) for b, (c, divs) in sorted(rows.items())]
    col_totals = {}
    for _, _, divs in ordered:
        for d, n in divs.items():
            col_totals[d] = col_totals.get(d, 0) + n
    summary = {
        "pairs": total,
        "distinct_b": len(rows),
        "distinct_types": len(types),
    }
    if rows:
        summary["b3_min"] = min(rows) + 23
        summary["b3_max"] = max(rows) + 23
    if no_c2:
        summary["pairs_without_c2_data"] = no_c2
    if skipped_gramless:
        summary["pairs_without_b3_data"] = skipped_gramless
    return GeographyReport(ordered, (total, col_totals), summary)


def geography_rank1(cat, resolutions="best", jobs=1):
    """The census over the 17 rank-1 blocks: all 153 unordered pairs."""
    return _geography(enumerate_pairs(cat, "none"), resolutions, jobs=jobs)


def geography_general(cat, pair_filter="none", resolutions="best", jobs=1):
    """Same statistics over an arbitrary catalog, reporting actual coverage."""
    return _geography(enumerate_pairs(cat, pair_filter), resolutions, jobs=jobs)
