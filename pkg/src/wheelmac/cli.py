"""Command-line front end: one subcommand per verifiable claim.

Groups:  macd {compute, pieri, cauchy, integrality}
         wheel {subs, check, dim, basis}
         current {relation, rank, reduce}
         char {chi, recursion, w-dim}
         verify {theorem1, prop302, stability, rho, lemma21, lemma22}

Output is JSON by default (--format table for aligned text).  Exit codes:
0 all requested checks pass, 1 a check failed, 2 usage error, 3 internal
assertion (an exactness witness broke, i.e. a bug).
"""

import argparse
import json
import random
import sys

from . import current_algebra as ca
from . import partitions as pt
from . import wheel_ideal as wi
from .macdonald import (ExactDivisionError, MacdonaldTable,
                        cauchy_row_check, check_integrality,
                        pieri_failures, specialize_P)
from .scalars import ParameterSpec, PoleError, UniRatFunc, render_scalar
from .symfunc import SymPoly

__all__ = ["main", "run"]


def _load_table(args, n):
    if getattr(args, "cache", None):
        try:
            with open(args.cache) as fh:
                data = json.load(fh)
            if data.get("n") == n:
                return MacdonaldTable.from_json_dict(data)
        except FileNotFoundError:
            pass
    return MacdonaldTable(n)


def _save_table(args, table):
    if getattr(args, "cache", None):
        with open(args.cache, "w") as fh:
            json.dump(table.to_json_dict(), fh, indent=1)


def _sympoly_json(f):
    return [{"partition": pt.format_partition(lam),
             "coefficient": render_scalar(c)}
            for lam, c in sorted(f.coeffs.items(), reverse=True)]


def _emit(args, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
        return
    _emit_table(payload)


def _emit_table(payload, indent=""):
    if isinstance(payload, dict):
        width = max((len(str(k)) for k in payload), default=0)
        for k in sorted(payload):
            v = payload[k]
            if isinstance(v, (dict, list)):
                print("%s%-*s:" % (indent, width, k))
                _emit_table(v, indent + "  ")
            else:
                print("%s%-*s: %s" % (indent, width, k, v))
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _emit_table(v, indent + "  ")
                print()
            else:
                print("%s%s" % (indent, v))
    else:
        print("%s%s" % (indent, payload))


# ---------------------------------------------------------------------------

def _cmd_macd_compute(args):
    table = _load_table(args, args.n)
    lam = pt.parse_partition(args.lam)
    f = table.compute_P(lam)
    _save_table(args, table)
    return 0, {"n": args.n, "lambda": pt.format_partition(lam),
               "coefficients": _sympoly_json(f)}


def _cmd_macd_pieri(args):
    table = _load_table(args, args.n)
    lam = pt.parse_partition(args.lam)
    failures = pieri_failures(lam, args.n, table)
    _save_table(args, table)
    return (0 if not failures else 1), {
        "n": args.n, "lambda": pt.format_partition(lam),
        "ok": not failures, "failures": failures}


def _cmd_macd_cauchy(args):
    table = _load_table(args, args.n)
    ok = cauchy_row_check(args.n, args.l_max, table)
    _save_table(args, table)
    return (0 if ok else 1), {"n": args.n, "l_max": args.l_max, "ok": ok}


def _cmd_macd_integrality(args):
    table = _load_table(args, args.n)
    lam = pt.parse_partition(args.lam)
    ok = check_integrality(lam, args.n, table)
    _save_table(args, table)
    return (0 if ok else 1), {"n": args.n, "lambda": pt.format_partition(lam),
                              "ok": ok}


def _cmd_wheel_subs(args):
    subs = wi.wheel_substitutions(args.k, args.r)
    return 0, {"k": args.k, "r": args.r, "count": len(subs),
               "substitutions": [",".join(map(str, s)) for s in subs]}


def _cmd_wheel_check(args):
    p = ParameterSpec(args.k, args.r)
    table = _load_table(args, args.n)
    lam = pt.parse_partition(args.lam)
    f = specialize_P(lam, args.n, p, table)
    ok = wi.satisfies_wheel(f, p)
    _save_table(args, table)
    return (0 if ok else 1), {
        "k": args.k, "r": args.r, "n": args.n,
        "lambda": pt.format_partition(lam),
        "admissible": pt.is_admissible(lam, args.k, args.r, args.n),
        "satisfies_wheel": ok}


def _cmd_wheel_dim(args):
    p = ParameterSpec(args.k, args.r)
    dim = wi.dim_J(args.k, args.r, args.n, args.d, p,
                   mode=args.mode, seed=args.probe_seed)
    payload = {"k": args.k, "r": args.r, "n": args.n, "d": args.d,
               "mode": args.mode, "dim_J": dim}
    if args.mode == "probe":
        exact = wi.dim_J(args.k, args.r, args.n, args.d, p)
        payload["dim_J_exact"] = exact
        if exact != dim:
            payload["probe_disagreement"] = True
            return 1, payload
    return 0, payload


def _cmd_wheel_basis(args):
    p = ParameterSpec(args.k, args.r)
    table = _load_table(args, args.n)
    basis = wi.basis_I(args.k, args.r, args.n, args.d, p, table)
    labels = pt.enumerate_admissible(args.k, args.r, args.n, args.d)
    _save_table(args, table)
    return 0, {"k": args.k, "r": args.r, "n": args.n, "d": args.d,
               "basis": [{"lambda": pt.format_partition(lam),
                          "coefficients": _sympoly_json(f)}
                         for lam, f in zip(labels, basis)]}


def _cmd_current_relation(args):
    if args.field == "rootofunity":
        nu = tuple(int(x) for x in args.profile.split(","))
        rel = ca.relation_rootofunity(args.d, nu, args.k, args.r)
        profile = args.profile
    else:
        sigma = tuple(int(x) for x in args.sigma.split(",")) if args.sigma else ()
        p = ParameterSpec(args.k, args.r)
        rel = ca.relation_generic(args.d, sigma, args.k, args.r, p)
        profile = args.sigma or ""
    terms = [{"partition": pt.format_partition(mu, args.k + 1),
              "coefficient": render_scalar(c)}
             for mu, c in sorted(rel.terms.items(), reverse=True)]
    return 0, {"degree": args.d, "profile": profile, "field": args.field,
               "terms": terms}


def _cmd_current_rank(args):
    p = ParameterSpec(args.k, args.r)
    dim = ca.quotient_dim(args.k, args.r, args.n, args.d, p, field=args.field)
    return 0, {"k": args.k, "r": args.r, "n": args.n, "d": args.d,
               "field": args.field, "quotient_dim": dim,
               "admissible_count": pt.count_admissible(
                   args.k, args.r, args.n, args.d)}


def _cmd_current_reduce(args):
    lam = tuple(int(x) for x in args.lam.split(","))
    out = ca.reduce_to_admissible(lam, args.k, args.r)
    return 0, {"input": args.lam,
               "terms": [{"partition": pt.format_partition(mu, len(lam)),
                          "coefficient": render_scalar(c)}
                         for mu, c in sorted(out.terms.items(), reverse=True)]}


def _parse_profile(args):
    return tuple(int(x) for x in args.b.split(","))


def _cmd_char_chi(args):
    chi = ca.chi_C(_parse_profile(args), args.k, args.r, args.d_max, args.n_max)
    coeffs = [[d, n, c] for (d, n), c in sorted(chi.coeffs.items())]
    return 0, {"d_max": args.d_max, "n_max": args.n_max, "coefficients": coeffs}


def _cmd_char_recursion(args):
    ok = ca.verify_recursion(_parse_profile(args), args.k, args.r,
                             args.d_max, args.n_max)
    return (0 if ok else 1), {"b": args.b, "ok": ok}


def _cmd_char_wdim(args):
    p = ParameterSpec(args.k, args.r)
    dim = ca.W_space_dim(_parse_profile(args), args.k, args.r,
                         args.n, args.d, p)
    return 0, {"k": args.k, "r": args.r, "b": args.b, "n": args.n,
               "d": args.d, "w_dim": dim}


def _cmd_verify_theorem1(args):
    p = ParameterSpec(args.k, args.r)
    reports = []
    ok = True
    tables = {}
    for n in range(args.n_max + 1):
        table = tables.setdefault(n, MacdonaldTable(n))
        for d in range(args.d_max + 1):
            rep = wi.verify_theorem1(args.k, args.r, n, d, p,
                                     mode=args.mode, table=table,
                                     seed=args.probe_seed)
            if args.mode == "probe":
                exact = wi.dim_J(args.k, args.r, n, d, p)
                if exact != rep["dim_J"]:
                    rep["probe_disagreement"] = True
                    rep["dim_J_exact"] = exact
                    rep["dims_equal"] = exact == rep["admissible_count"]
            if not (rep["inclusion_ok"] and rep["dims_equal"]
                    and not rep.get("probe_disagreement")):
                ok = False
            reports.append(rep)
    return (0 if ok else 1), {"k": args.k, "r": args.r, "ok": ok,
                              "components": reports}


def _cmd_verify_prop302(args):
    p = ParameterSpec(args.k, args.r)
    if args.b:
        profiles = [_parse_profile(args)]
    else:
        from itertools import combinations_with_replacement
        profiles = list(combinations_with_replacement(range(args.k + 1),
                                                      args.r - 1))
    results = []
    ok = True
    for b in profiles:
        good = ca.verify_prop302(b, args.k, args.r, args.d_max, args.n_max, p)
        ok = ok and good
        results.append({"b": ",".join(map(str, b)), "ok": good})
    return (0 if ok else 1), {"k": args.k, "r": args.r, "ok": ok,
                              "profiles": results}


def _cmd_verify_stability(args):
    p = ParameterSpec(args.k, args.r)
    basis = wi.wheel_kernel_basis(args.k, args.r, args.n, args.d, p)
    if not basis:
        return 0, {"k": args.k, "r": args.r, "n": args.n, "d": args.d,
                   "ok": True, "note": "wheel ideal component is zero"}
    rng = random.Random(args.seed)
    ops = [("D", 1), ("D", 2), ("E", 0), ("E", 1), ("E", 2)]
    ops = [(kind, a) for kind, a in ops if not (kind == "D" and a > args.n)]
    ok = True
    for _ in range(args.count):
        f = SymPoly.zero(args.n)
        while f.is_zero():
            f = SymPoly.zero(args.n)
            for g in basis:
                f = f + g.scale(UniRatFunc.const(p.N, rng.randint(-5, 5)))
        if not wi.verify_stability(f, p, ops):
            ok = False
            break
    return (0 if ok else 1), {"k": args.k, "r": args.r, "n": args.n,
                              "d": args.d, "combinations": args.count,
                              "ok": ok}


def _cmd_verify_rho(args):
    p = ParameterSpec(args.k, args.r)
    n = args.n if args.n else args.k + 2
    table = _load_table(args, n)
    lam = pt.parse_partition(args.lam)
    ok = wi.verify_rho_inclusion(lam, args.k, args.r, n, args.j_max, p, table)
    _save_table(args, table)
    return (0 if ok else 1), {"k": args.k, "r": args.r, "n": n,
                              "lambda": pt.format_partition(lam),
                              "j_max": args.j_max, "ok": ok}


def _cmd_verify_lemma21(args):
    failures = []
    checked = 0
    for n in range(1, args.n_max + 1):
        for d in range(args.size_max + 1):
            for lam in pt.enumerate_admissible(args.k, args.r, n, d):
                checked += 1
                if not pt.check_lemma21(lam, args.k, args.r, n):
                    failures.append({"n": n, "lambda": pt.format_partition(lam)})
    return (0 if not failures else 1), {
        "k": args.k, "r": args.r, "checked": checked,
        "ok": not failures, "failures": failures}


def _cmd_verify_lemma22(args):
    p = ParameterSpec(args.k, args.r)
    failures = []
    checked = 0
    tables = {}
    for n in range(1, args.n_max + 1):
        table = tables.setdefault(n, MacdonaldTable(n))
        seen = set()
        for d in range(args.size_max + 1):
            for lam in pt.enumerate_admissible(args.k, args.r, n, d):
                cases = {lam}
                for j in range(1, pt.length(lam) + 2):
                    try:
                        mu = pt.add_node(lam, j)
                        if pt.length(mu) <= n:
                            cases.add(mu)
                    except ValueError:
                        pass
                for j in range(1, pt.length(lam) + 1):
                    try:
                        cases.add(pt.remove_node(lam, j))
                    except ValueError:
                        pass
                for mu in cases - seen:
                    seen.add(mu)
                    checked += 1
                    try:
                        specialize_P(mu, n, p, table)
                    except PoleError as exc:
                        failures.append({"n": n,
                                         "lambda": pt.format_partition(mu),
                                         "error": str(exc)})
    return (0 if not failures else 1), {
        "k": args.k, "r": args.r, "checked": checked,
        "ok": not failures, "failures": failures}


# ---------------------------------------------------------------------------

def _add_kr(sp, r_required=True):
    sp.add_argument("--k", type=int, required=True, help="admissibility width")
    sp.add_argument("--r", type=int, required=r_required,
                    help="admissibility gap (>= 2)")


def _add_cache(sp):
    sp.add_argument("--cache", help="JSON cache file for Macdonald tables")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="wheelmac",
        description="Exact Macdonald polynomials at t^(k+1) q^(r-1) = 1 and "
                    "the wheel-condition ideal they span.")
    ap.add_argument("--format", choices=("json", "table"), default="json")
    top = ap.add_subparsers(dest="group", required=True)

    macd = top.add_parser("macd", help="Macdonald polynomial computations")
    macd_sub = macd.add_subparsers(dest="cmd", required=True)
    sp = macd_sub.add_parser("compute", help="expand P_lambda in the m-basis")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    _add_cache(sp)
    sp.set_defaults(fn=_cmd_macd_compute)
    sp = macd_sub.add_parser("pieri", help="check the three expansion identities")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    _add_cache(sp)
    sp.set_defaults(fn=_cmd_macd_pieri)
    sp = macd_sub.add_parser("cauchy", help="row Cauchy identity up to a y-degree")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--l-max", type=int, default=6)
    _add_cache(sp)
    sp.set_defaults(fn=_cmd_macd_cauchy)
    sp = macd_sub.add_parser("integrality", help="c_lambda P_lambda is polynomial")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    _add_cache(sp)
    sp.set_defaults(fn=_cmd_macd_integrality)

    wheel = top.add_parser("wheel", help="wheel-condition ideal")
    wheel_sub = wheel.add_subparsers(dest="cmd", required=True)
    sp = wheel_sub.add_parser("subs", help="list the wheel substitutions")
    _add_kr(sp)
    sp.set_defaults(fn=_cmd_wheel_subs)
    sp = wheel_sub.add_parser("check", help="does specialized P_lambda satisfy the wheel")
    _add_kr(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    _add_cache(sp)
    sp.set_defaults(fn=_cmd_wheel_check)
    sp = wheel_sub.add_parser("dim", help="dim of the wheel subspace")
    _add_kr(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--mode", choices=("exact", "probe"), default="exact")
    sp.add_argument("--probe-seed", type=int, default=0)
    sp.set_defaults(fn=_cmd_wheel_dim)
    sp = wheel_sub.add_parser("basis", help="specialized admissible Macdonald basis")
    _add_kr(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    _add_cache(sp)
    sp.set_defaults(fn=_cmd_wheel_basis)

    cur = top.add_parser("current", help="commuting-current relations")
    cur_sub = cur.add_subparsers(dest="cmd", required=True)
    sp = cur_sub.add_parser("relation", help="one Fourier-coefficient relation")
    _add_kr(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--field", choices=("rootofunity", "generic"),
                    default="rootofunity")
    sp.add_argument("--profile", help="residue profile nu, e.g. 1,2 (rootofunity)")
    sp.add_argument("--sigma", help="cumulative exponents (generic)")
    sp.set_defaults(fn=_cmd_current_relation)
    sp = cur_sub.add_parser("rank", help="graded quotient dimension")
    _add_kr(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--field", choices=("rootofunity", "generic"),
                    default="rootofunity")
    sp.set_defaults(fn=_cmd_current_rank)
    sp = cur_sub.add_parser("reduce", help="rewrite e_lambda into admissible terms")
    _add_kr(sp)
    sp.add_argument("--lambda", dest="lam", required=True,
                    help="all n parts, zeros included, e.g. 2,2,0")
    sp.set_defaults(fn=_cmd_current_reduce)

    char = top.add_parser("char", help="character combinatorics")
    char_sub = char.add_subparsers(dest="cmd", required=True)
    sp = char_sub.add_parser("chi", help="chi^C coefficients")
    _add_kr(sp)
    sp.add_argument("--b", required=True, help="prefix bounds, e.g. 1,2")
    sp.add_argument("--d-max", type=int, default=8)
    sp.add_argument("--n-max", type=int, default=8)
    sp.set_defaults(fn=_cmd_char_chi)
    sp = char_sub.add_parser("recursion", help="character recursion in b_0")
    _add_kr(sp)
    sp.add_argument("--b", required=True)
    sp.add_argument("--d-max", type=int, default=8)
    sp.add_argument("--n-max", type=int, default=8)
    sp.set_defaults(fn=_cmd_char_recursion)
    sp = char_sub.add_parser("w-dim", help="dim of a W-space component")
    _add_kr(sp)
    sp.add_argument("--b", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(fn=_cmd_char_wdim)

    ver = top.add_parser("verify", help="batch claim verification")
    ver_sub = ver.add_subparsers(dest="cmd", required=True)
    sp = ver_sub.add_parser("theorem1", help="I = J on a grid of components")
    _add_kr(sp)
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--d-max", type=int, default=8)
    sp.add_argument("--mode", choices=("exact", "probe"), default="exact")
    sp.add_argument("--probe-seed", type=int, default=0)
    sp.set_defaults(fn=_cmd_verify_theorem1)
    sp = ver_sub.add_parser("prop302", help="W-space dims match chi^C")
    _add_kr(sp)
    sp.add_argument("--b", help="single profile; default all profiles")
    sp.add_argument("--d-max", type=int, default=8)
    sp.add_argument("--n-max", type=int, default=4)
    sp.set_defaults(fn=_cmd_verify_prop302)
    sp = ver_sub.add_parser("stability", help="operator stability of the wheel ideal")
    _add_kr(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=_cmd_verify_stability)
    sp = ver_sub.add_parser("rho", help="restricted derivatives stay in the ideal")
    _add_kr(sp)
    sp.add_argument("--n", type=int, default=0, help="defaults to k+2")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--j-max", type=int, default=2)
    _add_cache(sp)
    sp.set_defaults(fn=_cmd_verify_rho)
    sp = ver_sub.add_parser("lemma21", help="non-resonance of admissible exponents")
    _add_kr(sp)
    sp.add_argument("--n-max", type=int, default=5)
    sp.add_argument("--size-max", type=int, default=12)
    sp.set_defaults(fn=_cmd_verify_lemma21)
    sp = ver_sub.add_parser("lemma22", help="no poles for admissible +- one node")
    _add_kr(sp)
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--size-max", type=int, default=8)
    sp.set_defaults(fn=_cmd_verify_lemma22)
    return ap


def run(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "k", 1) < 1 or getattr(args, "r", 2) < 2:
        ap.error("need k >= 1 and r >= 2")
    for name in ("n", "d", "n_max", "d_max"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            ap.error("--%s must be >= 0" % name.replace("_", "-"))
    try:
        code, payload = args.fn(args)
    except (ExactDivisionError, AssertionError) as exc:
        print("internal assertion failed: %s" % exc, file=sys.stderr)
        return 3
    _emit(args, payload)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
