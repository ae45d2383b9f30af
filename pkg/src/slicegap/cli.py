"""slicegap command line: one subcommand per operation, canonical JSON on stdout.

Exit codes: 0 ok, 1 a checked assertion came out false, 2 usage or input errors.
Elapsed time goes to stderr so stdout stays byte-identical between runs.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import arf as arfmod
from . import bredon as br
from . import classes as cl
from . import cyclic as cy
from . import equivariant as eq
from . import fgl as fg
from . import slices as sl
from .algebra import PrimeField
from .verify import verify_all

OK, CHECK_FAILED, ERROR = 0, 1, 2


class UsageError(ValueError):
    pass


def _loose_json(text):
    """Accept {a:1,b:[1,2]} as well as strict JSON."""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        fixed = re.sub(r"([{,]\s*)([A-Za-z_]\w*)\s*:", r'\1"\2":', text)
        try:
            return json.loads(fixed)
        except json.JSONDecodeError as exc:
            raise UsageError(f"cannot parse {text!r}: {exc}") from None


def _int_list(text):
    if text is None or text == "":
        return []
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _rep(group, text):
    obj = _loose_json(text)
    if not isinstance(obj, dict):
        raise UsageError("--rep must be an object like {a:1,b:0,c:[1]}")
    return eq.RealRep.from_json(group, obj)


def _groups_json(groups):
    return {str(k): {"betti": b, "torsion": list(t), "group": eq_group(b, t)}
            for k, (b, t) in sorted(br.nonzero_groups(groups).items())}


def eq_group(b, t):
    parts = ["Z"] * b + [f"Z/{x}" for x in t]
    return " + ".join(parts) if parts else "0"


# handlers: each returns (result payload, ok flag) ------------------------------------------


def cmd_arf(a):
    if a.hyperbolic:
        Q = arfmod.hyperbolic()
    elif a.arf_one:
        Q = arfmod.arf_one_plane()
    else:
        if a.q is None:
            raise UsageError("give --hyperbolic, --arf-one, or --q with optional --B")
        q = _int_list(a.q)
        B = _loose_json(a.B) if a.B else None
        if B is None:
            rows = arfmod.standard_form(len(q) // 2)
            Q = arfmod.QuadraticSpace(len(q), tuple(x & 1 for x in q), rows)
        else:
            Q = arfmod.QuadraticSpace.from_lists(q, B)
    w = arfmod.witt_class(Q)
    val = arfmod.arf(Q)
    return {"arf": val, "gauss": arfmod.gauss_sum(Q), "witt": w,
            "histogram": {str(k): v for k, v in arfmod.value_histogram(Q).items()},
            "space": Q.to_json()}, w == val


def cmd_fgl(a):
    if a.action == "mu-cn":
        rep = fg.mu_cn_check(a.e, cutoff=a.cutoff, precision=a.precision)
        return rep.to_json(), rep.ok
    if a.action == "height":
        if a.law == "hazewinkel":
            return {"law": "hazewinkel", "e": a.e, "height": fg.hazewinkel_height(a.e, precision=a.precision)}, True
        F2 = PrimeField(2)
        law = fg.additive(F2, a.cutoff) if a.law == "additive" else fg.multiplicative(F2, a.cutoff)
        return {"law": a.law, "cutoff": a.cutoff, "height": fg.height(law, 2)}, True
    if a.action == "log":
        l = fg.hazewinkel_log(a.e, a.cutoff)
        coeffs = {str(i): l.ring.fmt(c) for i, c in enumerate(l.univariate_list()) if not l.ring.is_zero(c)}
        return {"e": a.e, "cutoff": a.cutoff, "log": coeffs}, True
    if a.action == "verify":
        M = fg.formal_A_module(a.e, a.cutoff, a.precision)
        rep = fg.fgl_verify(M.F0)
        return {"e": a.e, "cutoff": a.cutoff, "ok": rep.ok, "failing": rep.failing}, rep.ok
    raise UsageError(f"unknown fgl action {a.action}")


def cmd_cohomology(a):
    m = a.group
    if a.module == "trivial":
        X = cy.trivial_module(m)
    elif a.module == "sign":
        X = cy.sign_module(m)
    elif a.module == "field":
        X = cy.finite_field_module(m, a.p, a.n)
    else:
        X = cy.cyclotomic_module(a.k, m, a.e)
    out = {str(s): cy.periodic_cohomology(X, s).describe() for s in range(a.smin, a.smax + 1)}
    return {"module": X.name, "group": m, "cohomology": out}, True


def cmd_detect(a):
    if a.pattern:
        rep = cy.detection_pattern_check(a.p, smax=a.smax)
        return {"p": a.p, "dims": rep.dims, "hSquaredZero": rep.h_squared_zero,
                "bPowersNonzero": rep.b_powers_nonzero, "hbNonzero": rep.hb_nonzero, "ok": rep.ok}, rep.ok
    exps = _int_list(a.exponents)
    nz = cy.monomial_nonvanishing(a.p, exps)
    img = cy.monomial_image(a.p, exps)
    return {"p": a.p, "exponents": exps, "image": img.to_json(), "nonzero": nz,
            "consistent": img.consistent()}, nz


def cmd_kervaire(a):
    T = cy.kervaire_target(a.j)
    return T.to_json(), True


def cmd_gset(a):
    m = a.group
    if a.action == "marks":
        return {"group": m, "divisors": eq.divisors(m), "marks": eq.table_of_marks(m)}, True
    if a.action == "product":
        X = eq.burnside_product(m, eq.GSet.orbit(m, a.a), eq.GSet.orbit(m, a.b))
        ok = X == eq.brute_force_product(m, a.a, a.b)
        return X.to_json() | {"matchesBruteForce": ok}, ok
    if a.action == "restrict":
        X = eq.double_coset_restrict(m, a.a, a.b, eq.GSet.orbit(a.a, a.a))
        ok = X == eq.brute_force_restrict_induced(m, a.a, a.b, eq.GSet.orbit(a.a, a.a))
        return X.to_json() | {"matchesBruteForce": ok}, ok
    raise UsageError(f"unknown gset action {a.action}")


def cmd_rep(a):
    V = _rep(a.group, a.rep)
    fixed = {str(d): eq.rep_fixed(V, d) for d in eq.divisors(a.group)}
    res = {str(d): eq.rep_res(V, d).to_json() for d in eq.divisors(a.group)}
    out = {"rep": V.to_json(), "dim": V.dim, "fixed": fixed, "restrictions": res,
           "orientable": eq.is_orientable(V), "genuine": V.is_genuine()}
    ok = True
    if V.is_genuine():
        numeric = {str(d): eq.rep_fixed_numeric(V, d) for d in eq.divisors(a.group)}
        ok = numeric == fixed
        out["decomposed"] = eq.rep_decompose(a.group, eq.rep_matrix(V)).to_json()
        ok &= out["decomposed"] == V.to_json()
    if a.induce_to:
        out["induced"] = eq.rep_ind(V, a.induce_to).to_json()
    return out, ok


def cmd_bredon(a):
    V = _rep(a.group, a.rep)
    Mc = eq.MackeyCoefficient(a.coeff, a.group)
    if a.oracle:
        groups = br.simplicial_oracle(V, Mc, a.variance)
    else:
        groups = br.bredon(br.chain_model(V, a.shift), Mc, a.variance)
    return {"group": a.group, "rep": V.to_json(), "coeff": Mc.kind, "variance": a.variance,
            "shift": a.shift, "groups": _groups_json(groups)}, True


def cmd_cell_lemma(a):
    ok = br.cell_lemma_check(a.group, a.k, a.m)
    groups = br.slice_sphere_homology(a.group, a.k, a.m)
    detail = {"groups": {str(j): eq_group(b, t) for j, (b, t) in sorted(groups.items())}}
    return ok, ok, detail


def _cell(a, k=None, m=None, regular=True):
    return sl.SliceCell(a.group, a.k if k is None else k, a.m if m is None else m, regular)


def cmd_slice(a):
    if a.action == "dim":
        S = _cell(a, regular=not a.irregular)
        ok = sl.check_cw_range(S)
        return {"cell": S.to_json(), "dimension": S.dimension, "cwRange": list(sl.cw_range(S)),
                "cellDimensions": sl.cell_dimensions(S)}, ok
    if a.action == "smash":
        W = sl.smash(_cell(a), _cell(a, k=a.k2, m=a.m2))
        ok = W == sl.smash_brute(_cell(a), _cell(a, k=a.k2, m=a.m2))
        return {"wedge": W.to_json(), "matchesBruteForce": ok}, ok
    if a.action == "norm-wedge":
        degs = _int_list(a.degrees) or list(range(4))
        W = sl.norm_wedge(a.group, a.k, degs, a.dmax)
        return {"group": a.group, "h": a.k, "degrees": degs, "wedge": W.to_json()}, True
    if a.action == "census":
        e = a.group.bit_length() - 1
        cen = sl.refinement_census(e, a.dmax)
        ok = sl.census_matches_series(e, a.dmax)
        return {"group": a.group, "dmax": a.dmax,
                "census": {str(d): W.to_json() for d, W in cen.items()}, "matchesSeries": ok}, ok
    if a.action == "gap":
        return cmd_gap(a)
    if a.action == "support":
        return {"order": a.group, "s": a.s, "t": a.t,
                "support": sl.slice_ss_support(a.group, a.s, a.t)}, True
    raise UsageError(f"unknown slice action {a.action}")


def cmd_gap(a):
    e = a.group.bit_length() - 1
    rep = sl.gap_check(e, a.l, a.tmax)
    return rep.to_json() | {"e": e, "l": a.l, "tmax": a.tmax}, rep.ok


def cmd_classes(a):
    w = a.what
    if w == "D":
        D = cl.build_D()
        cert = {str(k): v for k, v in cl.divisibility_certificate(D).items()}
        return cl.format_degree(D.degree), True, {"class": D.to_json(), "certificate": cert}
    if w == "omega":
        om = cl.build_omega(a.k)
        return cl.format_degree(om.degree), True, {"class": om.to_json()}
    if w == "diffcheck":
        ok = cl.differential_consistency(a.e, a.k)
        return {"e": a.e, "k": a.k, "r": 1 + 2 ** a.e * (2 ** a.k - 1), "result": ok}, ok
    if w == "deduce":
        return {"j": a.j, "dimension": 2 ** a.j - 2, "result": cl.skeleton_deduction(a.j)}, True
    if w == "adams":
        return cl.adams_fixtures(a.tmax), True
    if w == "periodicity":
        ks = _int_list(a.ks) or [4, 2, 1]
        if len(ks) != 3:
            raise UsageError("--ks takes three integers k1,k2,k3")
        return {"k": ks, "result": cl.periodicity_requirements(*ks)}, True
    raise UsageError(f"unknown classes target {w}")


def cmd_verify(a):
    only = set(_int_list(a.only)) or None
    rows = verify_all(a.profile, only=only, fault=a.inject_fault)
    for r in rows:
        print(r.line(), file=sys.stderr)
    ok = all(r.passed for r in rows)
    return {"profile": a.profile, "rows": [r.to_json() for r in rows], "allPassed": ok}, ok


# parser ---------------------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-indent", type=int, default=None, help="indent JSON output")

    p = argparse.ArgumentParser(prog="slicegap", parents=[common],
                                description="Exact checks around slice cells, formal groups and Bredon homology.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("arf", parents=[common], help="Arf invariant of a quadratic form over F_2")
    s.add_argument("--hyperbolic", action="store_true")
    s.add_argument("--arf-one", action="store_true")
    s.add_argument("--q", help="values of q on the basis, e.g. 1,1")
    s.add_argument("--B", help="bilinear form as a JSON matrix (default: standard form)")
    s.set_defaults(fn=cmd_arf)

    s = sub.add_parser("fgl", parents=[common], help="formal group laws and the Hazewinkel A-module")
    s.add_argument("action", choices=["mu-cn", "height", "log", "verify"])
    s.add_argument("--e", type=int, default=3)
    s.add_argument("--law", choices=["additive", "multiplicative", "hazewinkel"], default="hazewinkel")
    s.add_argument("--cutoff", type=int, default=10)
    s.add_argument("--precision", type=int, default=16)
    s.set_defaults(fn=cmd_fgl)

    s = sub.add_parser("cohomology", parents=[common], help="cohomology of cyclic groups")
    s.add_argument("--group", type=int, default=2)
    s.add_argument("--module", choices=["trivial", "sign", "field", "cyclotomic"], default="trivial")
    s.add_argument("--p", type=int, default=3)
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--e", type=int, default=3)
    s.add_argument("--smin", type=int, default=0)
    s.add_argument("--smax", type=int, default=4)
    s.set_defaults(fn=cmd_cohomology)

    s = sub.add_parser("detect", parents=[common], help="detection in cyclic group cohomology")
    s.add_argument("--p", type=int, default=3)
    s.add_argument("--exponents", default="1")
    s.add_argument("--pattern", action="store_true")
    s.add_argument("--smax", type=int, default=8)
    s.set_defaults(fn=cmd_detect)

    s = sub.add_parser("kervaire-target", parents=[common], help="target group of the Kervaire class")
    s.add_argument("--j", type=int, required=True)
    s.set_defaults(fn=cmd_kervaire)

    s = sub.add_parser("gset", parents=[common], help="finite C_m-sets")
    s.add_argument("action", choices=["marks", "product", "restrict"])
    s.add_argument("--group", type=int, default=8)
    s.add_argument("--a", type=int, default=2)
    s.add_argument("--b", type=int, default=4)
    s.set_defaults(fn=cmd_gset)

    s = sub.add_parser("rep", parents=[common], help="real representations of C_m")
    s.add_argument("--group", type=int, default=8)
    s.add_argument("--rep", required=True)
    s.add_argument("--induce-to", type=int, default=None)
    s.set_defaults(fn=cmd_rep)

    s = sub.add_parser("bredon", parents=[common], help="Bredon (co)homology of a representation sphere")
    s.add_argument("--group", type=int, default=8)
    s.add_argument("--rep", required=True)
    s.add_argument("--coeff", default="constZ")
    s.add_argument("--variance", choices=["homology", "cohomology"], default="homology")
    s.add_argument("--shift", type=int, choices=[0, -1], default=0)
    s.add_argument("--oracle", action="store_true", help="use the simplicial join model")
    s.set_defaults(fn=cmd_bredon)

    s = sub.add_parser("cell-lemma", parents=[common], help="H_j, -3 <= j <= -1, of Ind_K^G S^{m rho_K}")
    s.add_argument("--group", type=int, default=8)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(fn=cmd_cell_lemma)

    s = sub.add_parser("slice", parents=[common], help="slice cells and their algebra")
    s.add_argument("action", choices=["dim", "smash", "norm-wedge", "census", "gap", "support"])
    s.add_argument("--group", type=int, default=8)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--k2", type=int, default=2)
    s.add_argument("--m2", type=int, default=1)
    s.add_argument("--irregular", action="store_true")
    s.add_argument("--degrees", default=None)
    s.add_argument("--dmax", type=int, default=16)
    s.add_argument("--tmax", type=int, default=16)
    s.add_argument("--l", type=int, default=19)
    s.add_argument("--s", type=int, default=0)
    s.add_argument("--t", type=int, default=0)
    s.set_defaults(fn=cmd_slice)

    s = sub.add_parser("gap", parents=[common], help="gap check over twisted census cells")
    s.add_argument("--group", type=int, default=8)
    s.add_argument("--l", type=int, default=19)
    s.add_argument("--tmax", type=int, default=16)
    s.set_defaults(fn=cmd_gap)

    s = sub.add_parser("classes", parents=[common], help="RO(G) degree calculus for named classes")
    s.add_argument("what", choices=["D", "omega", "diffcheck", "deduce", "adams", "periodicity"])
    s.add_argument("--k", type=int, default=4)
    s.add_argument("--e", type=int, default=3)
    s.add_argument("--j", type=int, default=8)
    s.add_argument("--tmax", type=int, default=20)
    s.add_argument("--ks", default=None)
    s.set_defaults(fn=cmd_classes)

    s = sub.add_parser("verify", parents=[common], help="run the acceptance criteria")
    s.add_argument("--profile", choices=["quick", "full"], default="quick")
    s.add_argument("--only", default=None, help="comma separated criterion indices")
    s.add_argument("--inject-fault", action="store_true", help="corrupt one boundary coefficient first")
    s.set_defaults(fn=cmd_verify)
    return p


def run(argv=None):
    """Parse, dispatch and return (payload dict, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("fn", "command", "json_indent")}
    t0 = time.perf_counter()
    try:
        out = args.fn(args)
        result, ok = out[0], out[1]
        detail = out[2] if len(out) > 2 else None
        status = "ok" if ok else "check-failed"
        code = OK if ok else CHECK_FAILED
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        result, status, code = {"error": f"{type(exc).__name__}: {exc}"}, "error", ERROR
        detail = None
    elapsed = int((time.perf_counter() - t0) * 1000)
    payload = {"command": args.command, "params": params, "result": result, "status": status}
    if detail is not None:
        payload["detail"] = detail
    return payload, code, elapsed, args.json_indent


def main(argv=None):
    payload, code, elapsed, indent = run(argv)
    print(json.dumps(payload, sort_keys=True, indent=indent))
    print(f"elapsed {elapsed} ms", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
