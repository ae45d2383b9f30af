"""The acceptance criteria as callable checks with time budgets.

Each criterion returns a Row; verify_all runs them in index order.  The
quick profile halves cutoffs and dimensions.
"""

from __future__ import annotations

import itertools
import random
import time
from contextlib import nullcontext
from dataclasses import dataclass, field

from . import arf as arfmod
from .algebra import PrimeField
from .bredon import cell_lemma_check, compare_with_oracle, chain_model, inject_fault, orbit_identity_holds
from .classes import (
    build_D,
    build_omega,
    deduction_consistent,
    differential_consistency,
    format_degree,
    periodicity_requirements,
    skeleton_deduction,
)
from .cyclic import kervaire_target, monomial_nonvanishing, detection_pattern_check
from .equivariant import all_genuine_reps, divisors
from .fgl import INFINITE, additive, hazewinkel_height, height, multiplicative, mu_cn_check
from .slices import (
    SliceCell,
    census_matches_series,
    gap_check,
    norm_wedge,
    norm_wedge_brute,
    smash,
    smash_brute,
)


@dataclass
class Row:
    index: int
    name: str
    ok: bool
    seconds: float
    limit: float
    detail: dict = field(default_factory=dict)

    @property
    def in_time(self):
        return self.seconds < self.limit

    @property
    def passed(self):
        return self.ok and self.in_time

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.index}. {self.name}: ok={self.ok} time={self.seconds:.2f}s (limit {self.limit:.0f}s)"

    def to_json(self):
        return {"index": self.index, "name": self.name, "ok": self.ok, "withinLimit": self.in_time,
                "limitSeconds": int(self.limit), "detail": self.detail}


def _quick(profile):
    return profile == "quick"


def check_cell_lemma(profile="full"):
    ms = range(-2, 0) if _quick(profile) else range(-4, 0)
    bad = []
    count = 0
    for G in (2, 4, 8):
        for K in divisors(G):
            if K == 1:
                continue
            for m in ms:
                count += 1
                if not cell_lemma_check(G, K, m):
                    bad.append([G, K, m])
    return not bad, {"cases": count, "failures": bad}


def check_oracle(profile="full"):
    dmax = 3 if _quick(profile) else 6
    bad, orbit_bad = [], []
    count = 0
    for G in (2, 4, 8):
        for V in all_genuine_reps(G, dmax):
            count += 1
            if not compare_with_oracle(V):
                bad.append([G, V.a, V.b, list(V.c)])
            if not orbit_identity_holds(chain_model(V)):
                orbit_bad.append([G, V.a, V.b, list(V.c)])
    return not bad and not orbit_bad, {"reps": count, "oracleFailures": bad, "orbitFailures": orbit_bad}


def check_mu_cn(profile="full"):
    cutoff = 5 if _quick(profile) else 10
    out = {}
    for e in (1, 2, 3):
        rep = mu_cn_check(e, cutoff=cutoff, precision=16)
        out[str(e)] = rep.ok
    return all(out.values()), {"cutoff": cutoff, "precision": 16, "byE": out}


def check_heights(profile="full"):
    F2 = PrimeField(2)
    cut = 8 if _quick(profile) else 16
    h_add = height(additive(F2, cut), 2)
    h_mult = height(multiplicative(F2, cut), 2)
    hz = {str(e): hazewinkel_height(e) for e in (1, 2, 3)}
    ok = h_add == INFINITE and h_mult == 1 and hz == {"1": 1, "2": 2, "3": 4}
    return ok, {"additive": h_add, "multiplicative": h_mult, "hazewinkel": hz}


def check_detection(profile="full"):
    smax = 4 if _quick(profile) else 8
    esum = 3 if _quick(profile) else 6
    pat = {str(p): detection_pattern_check(p, smax=smax).ok for p in (3, 5)}
    mono_bad = []
    count = 0
    for p in (3, 5):
        for exps in itertools.product(range(esum + 1), repeat=3):
            if sum(exps) <= esum:
                count += 1
                if not monomial_nonvanishing(p, exps):
                    mono_bad.append([p, list(exps)])
    kt = {}
    for j in range(4, 11):
        T = kervaire_target(j)
        kt[str(j)] = T.group.describe()
    kt_ok = all(v == kervaire_target(4).group.describe() for v in kt.values()) and \
        kervaire_target(4).group.torsion == [8, 8, 8, 8] and kervaire_target(4).group.betti == 0
    ok = all(pat.values()) and not mono_bad and kt_ok
    return ok, {"pattern": pat, "monomials": count, "monomialFailures": mono_bad, "kervaire": kt}


def check_degrees(profile="full"):
    D = build_D()
    om = build_omega(4)
    diff = all(differential_consistency(e, k) for e in (1, 2, 3) for k in range(1, 6))
    per = periodicity_requirements(4, 2, 1)
    ded = all(skeleton_deduction(j) == (j >= 8) for j in range(1, 20)) and deduction_consistent()
    ok = format_degree(D.degree) == "19*rho_8" and om.degree.dim == 256 and \
        format_degree(om.degree) == "256" and diff and per == 4 and ded
    return ok, {"D": format_degree(D.degree), "omega4": format_degree(om.degree),
                "differentials": diff, "periodicity": per, "deduction": ded}


def check_arf(profile="full", sample=20000, seed=0):
    """arf = Gauss sign everywhere; arf = witt_class exhaustively for g <= 2 and on samples at g = 3."""
    gmax = 2 if _quick(profile) else 3
    detail = {}
    ok = True
    for g in range(1, gmax + 1):
        forms, arfs, gauss = arfmod.exhaustive_invariants(g)
        sign_ok = bool(((gauss > 0) == (arfs == 0)).all()) and bool((abs(gauss) == 2 ** g).all())
        detail[f"g{g}Spaces"] = int(arfs.size)
        ok &= sign_ok
        dim = 2 * g
        if g <= 2:
            pairs = [(i, l) for i in range(len(forms)) for l in range(1 << dim)]
        else:
            std = forms.index(arfmod.standard_form(g))
            rng = random.Random(seed)
            pairs = [(std, l) for l in range(1 << dim)]
            pairs += [(rng.randrange(len(forms)), rng.randrange(1 << dim)) for _ in range(sample)]
        for i, l in pairs:
            Q = arfmod.QuadraticSpace(dim, tuple((l >> b) & 1 for b in range(dim)), forms[i])
            if arfmod.witt_class(Q) != arfs[i, l]:
                ok = False
        detail[f"g{g}WittChecked"] = len(pairs)
    # additivity under orthogonal sum, g1 + g2 <= gmax
    spaces = {g: list(arfmod.all_spaces(g)) for g in (1, 2)}
    add_count = 0
    for g1, g2 in ((1, 1), (1, 2)):
        if g1 + g2 > gmax:
            continue
        for Q1 in spaces[g1]:
            for Q2 in spaces[g2]:
                add_count += 1
                if arfmod.arf(arfmod.orthogonal_sum(Q1, Q2)) != arfmod.arf(Q1) ^ arfmod.arf(Q2):
                    ok = False
    detail["additivityPairs"] = add_count
    hyp = arfmod.arf(arfmod.hyperbolic())
    detail["hyperbolic"] = hyp
    return bool(ok and hyp == 0), detail


def check_slices(profile="full"):
    quick = _quick(profile)
    r = 1 if quick else 3
    smash_bad = []
    count = 0
    for G in (1, 2, 4, 8):
        for h in divisors(G):
            for k in divisors(G):
                for a in range(-r, r + 1):
                    for b in range(-r, r + 1):
                        count += 1
                        S1, S2 = SliceCell(G, h, a), SliceCell(G, k, b)
                        if smash(S1, S2) != smash_brute(S1, S2):
                            smash_bad.append([G, h, k, a, b])
    norm_bad = []
    ncount = 0
    for G, h in ((4, 2), (8, 4), (8, 2), (16, 4)):
        for size in range(1, (4 if quick else 6) + 1):
            ncount += 1
            degs = list(range(size))
            if norm_wedge(G, h, degs) != norm_wedge_brute(G, h, degs):
                norm_bad.append([G, h, size])
    dmax = 12 if quick else 24
    census = {str(e): census_matches_series(e, dmax) for e in (1, 2, 3)}
    ok = not smash_bad and not norm_bad and all(census.values())
    return ok, {"smashCases": count, "smashFailures": smash_bad, "normCases": ncount,
                "normFailures": norm_bad, "censusDmax": dmax, "census": census}


def check_gap(profile="full"):
    tmax = 8 if _quick(profile) else 16
    rep = gap_check(3, 19, tmax)
    return rep.ok, rep.to_json() | {"tmax": tmax}


CRITERIA = [
    (1, "Cell Lemma suite", check_cell_lemma, 60),
    (2, "Oracle equivalence", check_oracle, 120),
    (3, "mu-cn verification", check_mu_cn, 60),
    (4, "Heights", check_heights, 10),
    (5, "Detection fixtures", check_detection, 30),
    (6, "Degree calculus fixtures", check_degrees, 1),
    (7, "Arf suite", check_arf, 10),
    (8, "Slice-cell algebra", check_slices, 60),
    (9, "Gap check at scale", check_gap, 120),
]


def run_criterion(index: int, profile="full", fault=False) -> Row:
    idx, name, fn, limit = CRITERIA[index - 1]
    ctx = inject_fault() if fault else nullcontext()
    t0 = time.perf_counter()
    with ctx:
        try:
            ok, detail = fn(profile)
        except Exception as exc:  # a crash is a failed criterion, not a harness crash
            ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
    return Row(idx, name, bool(ok), time.perf_counter() - t0, limit, detail)


def verify_all(profile="full", only=None, fault=False):
    rows = []
    for idx, *_ in CRITERIA:
        if only and idx not in only:
            continue
        rows.append(run_criterion(idx, profile, fault))
    return rows
