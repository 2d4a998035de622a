"""Command-line front end: reproducible batch commands over the library.

Exit codes: 0 success, 1 domain failure (a verdict or certificate failed),
2 usage or parse errors (argparse's own convention)."""

import argparse
import ast
import sys

from . import blocks, embed, glue, match, tcs
from . import exactalg as xa
from . import lattice as lat


def _parse_gram(text):
    try:
        rows = ast.literal_eval(text)
        return lat.Lattice(rows)
    except (ValueError, SyntaxError) as exc:
        raise SystemExit(2) from exc


def _load_catalogs(paths):
    cat = blocks.full_catalog()
    for p in paths or ():
        cat = cat.merged_with(blocks.load_catalog(p))
    return cat


def cmd_catalog(args):
    cat = blocks.all_catalogs()
    for p in args.catalog or ():
        cat = cat.merged_with(blocks.load_catalog(p))
    if args.action == "list":
        for rec in sorted(cat, key=lambda r: r.id):
            kind = rec.kind + (" (gramless)" if rec.gramless else "")
            print(f"{rec.id}\trank {rec.rank}\t{kind}")
        return 0
    if args.action == "show":
        if args.id not in cat.records:
            print(f"unknown block id {args.id}", file=sys.stderr)
            return 1
        rec = cat[args.id]
        print(f"id = {rec.id}")
        print(f"kind = {rec.kind}")
        print(f"rank = {rec.rank}")
        if not rec.gramless:
            print(f"gram = {rec.n_gram}")
            print(f"A = {rec.anticanonical_class}")
            print(f"b3_Z = {rec.b3_Z}")
            print(f"rk_K = {rec.rk_K}")
            print(f"div_c2 = {sorted(rec.div_c2)}")
            if rec.div_c2_mod_Aperp is not None:
                print(f"div_c2_mod_Aperp = {rec.div_c2_mod_Aperp}")
            print(f"e = {rec.e_rigid}")
            print(f"ell = {rec.ell()}")
        else:
            print(f"ell = {rec.ell_N}")
            print(f"disc = {rec.meta.get('disc')}")
        if rec.notes:
            print(f"notes = {rec.notes}")
        return 0
    if args.action == "validate":
        failures = 0
        for rec in sorted(cat, key=lambda r: r.id):
            if rec.kind == "fano_rank1":
                ok, reason = blocks.validate_rank1(rec)
                status = "ok" if ok else f"FAIL ({reason})"
                if not ok:
                    failures += 1
                print(f"{rec.id}\t{status}")
            else:
                print(f"{rec.id}\tok")
        return 1 if failures else 0
    raise SystemExit(2)


def _find_r_vector(N, r_lattice, bound):
    if r_lattice.rank != 1:
        print("only rank-1 R is supported on the command line", file=sys.stderr)
        return None
    target = int(r_lattice.gram[0, 0])
    v = lat.find_primitive_vector(N, target, bound)
    if v is None:
        print(f"no primitive vector of norm {target} within bound {bound}", file=sys.stderr)
    return v


def cmd_pushout(args):
    cat = _load_catalogs(args.catalog)
    R = _parse_gram(args.r)
    plus, minus = cat[args.plus], cat[args.minus]
    Np, Nm = plus.lattice(), minus.lattice()
    vp = _find_r_vector(Np, R, args.search_bound)
    vm = _find_r_vector(Nm, R, args.search_bound)
    if vp is None or vm is None:
        return 1
    res = glue.orthogonal_pushout(glue.PushoutSpec(Np, Nm, R, [list(vp)], [list(vm)]))
    if isinstance(res, glue.IntegralityFailure):
        print(f"IntegralityFailure: pairing {res.value} between basis vectors "
              f"{res.plus_index} and {res.minus_index}")
        return 1
    W = res.w
    print(f"rank = {W.rank}")
    print(f"gram = {xa.to_lists(W.gram)}")
    print(f"signature = {lat.signature(W).as_pair()}")
    print(f"det = {W.det()}")
    return 0


def cmd_embed(args):
    fields = {}
    with open(args.w, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            key, raw = stripped.split("=", 1)
            fields[key.strip()] = blocks._parse_value(raw, args.w, lineno)
    W = lat.Lattice(fields["gram"])
    if not embed.necessary_condition(W):
        print("verdict = ImpossibleByNecessary")
        return 1
    verdict = embed.construct_embedding(W, strategy="library")
    if verdict.status != embed.EXISTS_CONSTRUCTED and W.rank <= 6:
        verdict = embed.construct_embedding(W, strategy="backtracking", bound=args.search_bound,
                                            ambient=lat.direct_sum(lat.U(), lat.U(), lat.U()),
                                            require_primitive=True)
        if verdict.status == embed.EXISTS_CONSTRUCTED:
            verdict.basis = xa.mat([row + [0] * 16 for row in xa.to_lists(verdict.basis)])
    if verdict.status == embed.EXISTS_CONSTRUCTED:
        print(f"status = {verdict.status}")
        print(f"primitive = {verdict.primitive}")
        print(f"basis = {xa.to_lists(verdict.basis)}")
        cot = embed.cotorsion(embed.k3_lattice(), verdict.basis)
        print(f"cotorsion = {cot.invariant_factors if not cot.is_trivial() else []}")
        return 0
    criterion = embed.nikulin_sufficient(W)
    if criterion:
        print(f"verdict = ExistsPrimitiveByCriterion ({criterion})")
        print(f"unique = {embed.uniqueness(W)}")
        return 0
    print("verdict = Unknown")
    return 1


def cmd_match(args):
    cat = _load_catalogs(args.catalog)
    plus, minus = cat[args.plus], cat[args.minus]
    if args.mode == "perp":
        mode = match.PerpendicularPrimitive()
    elif args.mode == "perp-over":
        mode = match.PerpendicularOverlattice(args.glue_index)
    elif args.mode == "orth":
        if not args.r:
            print("--mode orth needs --r", file=sys.stderr)
            raise SystemExit(2)
        R = _parse_gram(args.r)
        vp = _find_r_vector(plus.lattice(), R, args.search_bound)
        vm = _find_r_vector(minus.lattice(), R, args.search_bound)
        if vp is None or vm is None:
            return 1
        mode = match.Orthogonal(xa.to_lists(R.gram), [list(vp)], [list(vm)])
    else:
        raise SystemExit(2)
    cert = match.build_certificate(plus, minus, mode, ample_cone_asserted=args.assert_ample)
    if isinstance(cert, match.MatchFailure):
        print(f"failure = {cert.code}")
        if cert.detail:
            print(f"reason = {cert.detail}")
        return 1
    if cert.is_explicit():
        match.propose_triple(cert)
    print(cert.dump())
    return 0


def cmd_invariants(args):
    cat = _load_catalogs(args.catalog)
    cfg = tcs.load_config(args.config, cat)
    inv = tcs.compute_invariants(cfg)
    if args.format == "tsv":
        print(tcs.report_tsv_header())
        print(tcs.report_tsv_row(inv, cfg.name))
    else:
        print(tcs.report_keyvalue(inv, cfg.name))
    failures = [c for c in tcs.sanity_suite(inv) if not c[1]]
    for name, _, detail in failures:
        print(f"sanity failure: {name}: {detail}", file=sys.stderr)
    return 1 if failures else 0


def cmd_geography(args):
    if args.table == "table3":
        rep = match.geography_rank1(blocks.rank1_catalog(), resolutions=args.resolutions)
    else:
        cat = _load_catalogs(args.catalog)
        pair_filter = {"rank11": "rank_11", "rankell22": "rank_ell_22", None: "none"}[args.filter]
        rep = match.geography_general(cat, pair_filter, resolutions=args.resolutions,
                                      jobs=args.jobs)
    print(rep.to_human() if args.format == "human" else rep.to_tsv())
    print()
    print(rep.summary_lines())
    return 0


def cmd_g2(args):
    if args.action != "verify":
        raise SystemExit(2)
    from . import g2alg

    try:
        report = g2alg.verify_identity_suite(samples=args.samples, seed=args.seed)
    except AssertionError as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return 1
    print(f"triples_checked = {report['triples_checked']}")
    print(f"hk_square = {report['hk_square']}")
    print("all identities hold")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="tcslat", description=__doc__)
    p.add_argument("--catalog", action="append", metavar="FILE",
                   help="extra catalog file(s) merged with the bundled tables")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("catalog", help="list, show or validate catalog records")
    pc.add_argument("action", choices=("list", "show", "validate"))
    pc.add_argument("id", nargs="?")
    pc.set_defaults(func=cmd_catalog)

    pp = sub.add_parser("pushout", help="orthogonal pushout of two blocks along rank-1 R")
    pp.add_argument("--plus", required=True)
    pp.add_argument("--minus", required=True)
    pp.add_argument("--r", required=True, metavar="GRAM")
    pp.add_argument("--search-bound", type=int, default=6)
    pp.set_defaults(func=cmd_pushout)

    pe = sub.add_parser("embed", help="embed a lattice into the rank-22 ambient")
    pe.add_argument("--w", required=True, metavar="FILE")
    pe.add_argument("--search-bound", type=int, default=3)
    pe.set_defaults(func=cmd_embed)

    pm = sub.add_parser("match", help="build a matching certificate")
    pm.add_argument("--plus", required=True)
    pm.add_argument("--minus", required=True)
    pm.add_argument("--mode", choices=("perp", "perp-over", "orth"), required=True)
    pm.add_argument("--r", metavar="GRAM")
    pm.add_argument("--glue-index", type=int, default=2)
    pm.add_argument("--assert-ample", action="store_true")
    pm.add_argument("--search-bound", type=int, default=6)
    pm.set_defaults(func=cmd_match)

    pi = sub.add_parser("invariants", help="invariants of a gluing configuration")
    pi.add_argument("--config", required=True, metavar="FILE")
    pi.add_argument("--format", choices=("human", "tsv"), default="human")
    pi.set_defaults(func=cmd_invariants)

    pg = sub.add_parser("geography", help="census tables over a catalog")
    pg.add_argument("table", choices=("table3", "general"))
    pg.add_argument("--filter", choices=("rank11", "rankell22"))
    pg.add_argument("--resolutions", choices=("best", "all"), default="best")
    pg.add_argument("--jobs", type=int, default=1)
    pg.add_argument("--format", choices=("human", "tsv"), default="tsv")
    pg.set_defaults(func=cmd_geography)

    pv = sub.add_parser("g2", help="verify the pointwise identities of the model forms")
    pv.add_argument("action", choices=("verify",))
    pv.add_argument("--samples", type=int, default=100)
    pv.add_argument("--seed", type=int, default=0)
    pv.set_defaults(func=cmd_g2)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (blocks.CatalogError, tcs.ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"unknown id: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
