"""Seeded verification suites.

Each suite is a list of independent trials. Trial ``k`` of suite ``s`` under
master seed ``S`` draws from ``make_rng(derive_seed(S, s, k))``, so results do
not depend on trial order or on ``jobs``.

A trial ends as ``pass``, ``fail`` (a checked claim is false) or
``genericity`` (every resample hit a non-generic sample). Resampling is used
only where the claim is about generic input; each resample is recorded as an
incident.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil, comb
from typing import Callable

from .edges import classify_graph, edge_graph, nine_products_span_dim4
from .errors import CrossCheckMismatch, ExhaustedTries
from .exactnum import GaussianRational, is_psd_exact, rank_exact
from .exdim import exdim_formula, exdim_report
from .factorization import enumerate_rank2, form_from_roots, random_root_set
from .forms import BinaryForm, are_coprime
from .gram import gram_affine_dim, gram_from_sos, is_extreme_point, segment_face_dim
from .pataki import pataki_binary, pataki_general, pataki_inequalities_hold
from .quadindep import random_qi_tuple
from .rng import derive_seed, make_rng

__all__ = [
    "SUITES",
    "DEFAULT_TRIALS",
    "TrialOutcome",
    "SuiteReport",
    "run_suite",
    "leibniz_det",
    "minor_rank",
    "principal_minors_nonnegative",
]

RETRIES = 5
QI_MAX_DEGREE = 15
EXDIM_MAX_DEGREE = 10


@dataclass
class TrialOutcome:
    trial: int
    params: str
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    incidents: list = field(default_factory=list)
    witness: dict | None = None
    genericity_exhausted: bool = False

    @property
    def outcome(self) -> str:
        if not all(self.checks.values()):
            return "fail"
        if self.genericity_exhausted:
            return "genericity"
        return "pass"

    def to_json(self) -> dict:
        out = {
            "trial": self.trial,
            "params": self.params,
            "outcome": self.outcome,
            "checks": self.checks,
            "details": self.details,
            "incidents": self.incidents,
        }
        if self.outcome != "pass":
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    trials: int
    seed: int
    outcomes: list
    aggregate_checks: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(o.outcome == "pass" for o in self.outcomes) and all(self.aggregate_checks.values())

    @property
    def failed(self) -> bool:
        return any(o.outcome == "fail" for o in self.outcomes) or not all(self.aggregate_checks.values())

    @property
    def genericity_exhausted(self) -> bool:
        return any(o.outcome == "genericity" for o in self.outcomes)

    @property
    def incidents(self) -> list:
        return [i for o in self.outcomes for i in o.incidents]

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "aggregate_checks": self.aggregate_checks,
            "outcomes": [o.to_json() for o in self.outcomes],
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


# -- independent oracles -----------------------------------------------------

def leibniz_det(M) -> Fraction:
    """Determinant by Laplace expansion along the first row."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(M[0][0])
    total = Fraction(0)
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * leibniz_det(minor)
    return total


def minor_rank(M) -> int:
    """Largest ``k`` with a nonzero ``k x k`` minor."""
    rows, cols = len(M), len(M[0]) if M else 0
    for k in range(min(rows, cols), 0, -1):
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                if leibniz_det([[M[i][j] for j in ci] for i in ri]) != 0:
                    return k
    return 0


def principal_minors_nonnegative(M) -> bool:
    n = len(M)
    return all(
        leibniz_det([[M[i][j] for j in idx] for i in idx]) >= 0
        for k in range(1, n + 1) for idx in combinations(range(n), k))


# -- helpers -----------------------------------------------------------------

def _random_gaussian_form(d, rng, bound=5):
    return BinaryForm(d, tuple(GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))
                               for _ in range(d + 1)))


def _forms_witness(forms):
    return {"forms": [f.to_json() for f in forms]}


def _edge_trial(trial, rng, d, accept: Callable, params):
    """Build edge graphs on fresh root sets until ``accept`` returns no
    genericity complaint, or the retry budget is spent.

    ``accept(E)`` returns ``(checks, details, generic)``; ``generic=False``
    asks for a resample.
    """
    out = TrialOutcome(trial=trial, params=params)
    for attempt in range(RETRIES + 1):
        R = random_root_set(d, rng)
        out.witness = {"roots": R.to_json()}
        try:
            E = edge_graph(R)
        except CrossCheckMismatch as exc:
            out.incidents.append(f"attempt {attempt}: CrossCheckMismatch: {exc}")
            out.details["cross_check_mismatches"] = out.details.get("cross_check_mismatches", 0) + 1
            continue
        checks, details, generic = accept(E)
        if not generic:
            out.incidents.append(f"attempt {attempt}: non-generic root set, {details}")
            continue
        out.checks.update(checks)
        out.details.update(details)
        out.details["attempts"] = attempt + 1
        return out
    out.genericity_exhausted = True
    return out


# -- trials ------------------------------------------------------------------

def _trial_rank2(trial, rng):
    out = TrialOutcome(trial=trial, params="d=1..8")
    ok = {"count": True, "distinct": True, "rank2": True, "psd": True, "extreme": True, "mu": True}
    roots = []
    for d in range(1, 9):
        R = random_root_set(d, rng)
        roots.append(R.to_json())
        f = form_from_roots(R)
        points = [p for _, p in enumerate_rank2(R)]
        ok["count"] &= len(points) == 2 ** (d - 1)
        ok["distinct"] &= len({p.G for p in points}) == len(points)
        ok["rank2"] &= all(p.rank == 2 for p in points)
        ok["psd"] &= all(p.is_psd for p in points)
        ok["extreme"] &= all(is_extreme_point(p) for p in points)
        ok["mu"] &= all(p.f == f for p in points)
    out.checks = ok
    out.witness = {"roots": roots}
    return out


def _trial_d1d2(trial, rng):
    out = TrialOutcome(trial=trial, params="d=1,2")
    R1 = random_root_set(1, rng)
    pts1 = enumerate_rank2(R1)
    P = pataki_binary(1)
    out.checks["d1_single_point"] = len(pts1) == 1 and pts1[0][1].rank == 2
    out.checks["d1_pataki"] = (P.r_min, P.r_max) == (2, 2)
    out.checks["d1_affine_dim"] = gram_affine_dim(1) == 0
    R2 = random_root_set(2, rng)
    pts2 = enumerate_rank2(R2)
    out.checks["d2_two_points"] = len(pts2) == 2 and all(p.rank == 2 for _, p in pts2)
    seg = segment_face_dim(pts2[0][1], pts2[1][1])
    out.checks["d2_segment_face_dim"] = seg.face_dim == 1 == gram_affine_dim(2)
    out.checks["d2_midpoint_rank"] = seg.midpoint_rank == 3
    out.details = {"d2_face_dim": seg.face_dim, "d2_midpoint_rank": seg.midpoint_rank}
    out.witness = {"roots": [R1.to_json(), R2.to_json()]}
    return out


def _accept_d3(E):
    pairs = E.pairs
    checks = {
        "four_points": len(E.vertices) == 4,
        "all_extreme": all(is_extreme_point(p) for p in E.points),
        "midpoint_rank_4": all(p.midpoint_rank == 4 for p in pairs),
        "face_dim_3": all(p.face_dim == 3 for p in pairs),
        "no_edges": E.edge_count == 0,
    }
    return checks, {"edge_count": E.edge_count, "pairs": len(pairs)}, True


def _accept_d4(E):
    shape = classify_graph(E)
    checks = {
        "edge_count_16": E.edge_count == 16,
        "pairs_28": len(E.pairs) == 28,
        "k44": shape.label == "complete_bipartite(4,4)",
        "class_rule": bool(shape.class_rule_holds),
        "midpoint_rank_4": all(p.midpoint_rank == 4 for p in E.pairs),
    }
    return checks, {"edge_count": E.edge_count, "classification": shape.label}, True


def _accept_complete(E):
    n = len(E.vertices)
    complete = E.edge_count == comb(n, 2)
    checks = {"complete": complete, "pair_count": len(E.pairs) == comb(n, 2)}
    details = {"edge_count": E.edge_count, "classification": classify_graph(E).label}
    return checks, details, complete


def _trial_d3(trial, rng):
    return _edge_trial(trial, rng, 3, _accept_d3, "d=3")


def _trial_d4(trial, rng):
    return _edge_trial(trial, rng, 4, _accept_d4, "d=4")


def _trial_d5plus(trial, rng, d):
    return _edge_trial(trial, rng, d, _accept_complete, f"d={d}")


def _trial_quadratic_nine(trial, rng):
    forms = [_random_gaussian_form(2, rng) for _ in range(4)]
    dim = nine_products_span_dim4(*forms)
    out = TrialOutcome(trial=trial, params="deg=(2,2,2,2)", witness=_forms_witness(forms))
    out.checks["dependent"] = dim <= 8
    out.details["nine_dim"] = dim
    return out


def _coprime_pair(deg, rng):
    while True:
        a, b = _random_gaussian_form(deg, rng), _random_gaussian_form(deg, rng)
        if not a.is_zero and not b.is_zero and are_coprime(a, b):
            return a, b


def _trial_cubic_linear_nine(trial, rng):
    g1, g2 = _coprime_pair(3, rng)
    h1, h2 = _coprime_pair(1, rng)
    dim = nine_products_span_dim4(g1, g2, h1, h2)
    out = TrialOutcome(trial=trial, params="deg=(3,3,1,1) coprime",
                       witness=_forms_witness([g1, g2, h1, h2]))
    out.checks["independent"] = dim == 9
    out.details["nine_dim"] = dim
    return out


def _trial_ge5(trial, rng, delta, eps):
    out = TrialOutcome(trial=trial, params=f"deg=({delta},{delta},{eps},{eps}) generic")
    for attempt in range(RETRIES + 1):
        forms = [_random_gaussian_form(delta, rng), _random_gaussian_form(delta, rng),
                 _random_gaussian_form(eps, rng), _random_gaussian_form(eps, rng)]
        out.witness = _forms_witness(forms)
        if any(f.is_zero for f in forms):
            out.incidents.append(f"attempt {attempt}: zero form drawn")
            continue
        dim = nine_products_span_dim4(*forms)
        out.details["nine_dim"] = dim
        if dim == 9:
            out.checks["independent"] = True
            return out
        out.incidents.append(f"attempt {attempt}: nine-product dim {dim}")
    out.genericity_exhausted = True
    return out


def _trial_qi(trial, rng, d, r, seed):
    out = TrialOutcome(trial=trial, params=f"d={d} r={r}")
    try:
        w = random_qi_tuple(d, r, seed)
    except ExhaustedTries as exc:
        out.incidents.append(str(exc))
        out.witness = {"d": d, "r": r, "seed": seed,
                       "samples": [[f.to_json() for f in s] for s in exc.samples]}
        out.genericity_exhausted = True
        return out
    theta = gram_from_sos(w.forms)
    out.witness = w.to_json()
    out.checks["within_tries"] = w.tries_used <= 5
    out.checks["extreme"] = is_extreme_point(theta)
    out.checks["rank_r"] = theta.rank == r
    out.checks["in_pataki"] = r in pataki_binary(d)
    out.details["tries_used"] = w.tries_used
    return out


def _trial_exdim(trial, rng, d, r, seed):
    out = TrialOutcome(trial=trial, params=f"d={d} r={r}")
    try:
        rep = exdim_report(d, r, seed)
    except ExhaustedTries as exc:
        out.incidents.append(str(exc))
        out.genericity_exhausted = True
        return out
    out.checks["identity"] = rep.identity_holds
    out.checks["jacobian_full"] = rep.certified
    out.details = {"formula_value": rep.formula_value, "jacobian_rank": rep.jacobian_rank,
                   "fiber_dim": rep.fiber_dim}
    out.witness = {"d": d, "r": r, "seed": seed}
    return out


def _trial_exdim_identity(trial, rng):
    out = TrialOutcome(trial=trial, params="identity d<=50")
    ok = True
    for d in range(1, 51):
        for r in pataki_binary(d).ranks():
            ok &= r * (d + 1) - (2 * d + 1) - comb(r, 2) == exdim_formula(d, r)
            ok &= 2 * exdim_formula(d, r) == (r - 2) * (2 * d - r + 1)
    out.checks["identity"] = ok
    return out


def _trial_pataki(trial, rng):
    out = TrialOutcome(trial=trial, params="d<=50, n<=40")
    out.checks["binary_vs_general"] = all(
        (lambda a, b: (a.r_min, a.r_max) == (b.r_min, b.r_max))(pataki_binary(d), pataki_general(d + 1, comb(d, 2)))
        for d in range(1, 51))
    brute = True
    for n in range(1, 41):
        for m in range(comb(n + 1, 2) + 1):
            P = pataki_general(n, m)
            brute &= [r for r in range(n + 1) if pataki_inequalities_hold(n, m, r)] == list(P.ranks())
    out.checks["brute_force"] = brute
    return out


def _random_int_matrix(rng, rows, cols, bound=3):
    return [[Fraction(rng.randint(-bound, bound)) for _ in range(cols)] for _ in range(rows)]


def _random_symmetric(rng, n):
    # mix of Gram products (often psd, often singular) and plain symmetric draws
    kind = rng.randrange(3)
    if kind == 0:
        B = _random_int_matrix(rng, n, rng.randint(1, n), bound=2)
        return [[sum(B[i][k] * B[j][k] for k in range(len(B[0]))) for j in range(n)] for i in range(n)]
    M = _random_int_matrix(rng, n, n, bound=3)
    S = [[M[i][j] + M[j][i] for j in range(n)] for i in range(n)]
    if kind == 1:
        shift = rng.randint(0, 3 * n)
        for i in range(n):
            S[i][i] += shift
    return S


def _trial_linalg(trial, rng, psd_count, rank_count):
    out = TrialOutcome(trial=trial, params=f"psd x{psd_count}, rank x{rank_count}")
    psd_ok = True
    psd_true = 0
    for _ in range(psd_count):
        n = rng.randint(1, 6)
        S = _random_symmetric(rng, n)
        expected = principal_minors_nonnegative(S)
        psd_true += expected
        if is_psd_exact(S) != expected:
            psd_ok = False
            out.witness = {"matrix": [[str(x) for x in row] for row in S]}
    rank_ok = True
    for _ in range(rank_count):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        k = rng.randint(0, min(rows, cols))
        A = _random_int_matrix(rng, rows, k, bound=3) if k else [[Fraction(0)] for _ in range(rows)]
        B = _random_int_matrix(rng, len(A[0]), cols, bound=3)
        M = [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(cols)] for i in range(rows)]
        if rank_exact(M) != minor_rank(M):
            rank_ok = False
            out.witness = {"matrix": [[str(x) for x in row] for row in M]}
    out.checks = {"psd_vs_minors": psd_ok, "rank_vs_minors": rank_ok}
    out.details = {"psd_instances": psd_count, "psd_true": psd_true}
    return out


# -- suite plans ---------------------------------------------------------------
# A plan is a list of (params-free) callables trial(rng) -> TrialOutcome,
# indexed by trial number.

def _plan(suite, trials, seed):
    if suite == "rank2":
        return [lambda k, rng: _trial_rank2(k, rng)] * trials
    if suite == "d1d2":
        return [_trial_d1d2] * trials
    if suite == "d3":
        return [_trial_d3] * trials
    if suite == "d4":
        return [_trial_d4] * trials
    if suite == "d5plus":
        n6 = ceil(3 * trials / 10)
        return ([lambda k, rng: _trial_d5plus(k, rng, 5)] * trials
                + [lambda k, rng: _trial_d5plus(k, rng, 6)] * n6)
    if suite == "lemma22":
        return [_trial_quadratic_nine] * trials
    if suite == "lemma31":
        per = max(1, trials // 5)
        plan = [_trial_cubic_linear_nine] * trials
        for delta, eps in ((3, 2), (4, 1), (2, 3)):
            plan += [lambda k, rng, a=delta, b=eps: _trial_ge5(k, rng, a, b)] * per
        return plan
    if suite == "qi":
        plan = []
        for rep in range(trials):
            for d in range(1, QI_MAX_DEGREE + 1):
                for r in pataki_binary(d).ranks():
                    s = derive_seed(seed, "qi-witness", rep, d, r)
                    plan.append(lambda k, rng, d=d, r=r, s=s: _trial_qi(k, rng, d, r, s))
        return plan
    if suite == "exdim":
        plan = [_trial_exdim_identity]
        for rep in range(trials):
            for d in range(1, EXDIM_MAX_DEGREE + 1):
                for r in pataki_binary(d).ranks():
                    s = derive_seed(seed, "exdim-witness", rep, d, r)
                    plan.append(lambda k, rng, d=d, r=r, s=s: _trial_exdim(k, rng, d, r, s))
        return plan
    if suite == "pataki":
        return [_trial_pataki] * trials
    if suite == "linalg":
        return [lambda k, rng: _trial_linalg(k, rng, 500, 200)] * trials
    raise KeyError(suite)


SUITES = ("rank2", "d1d2", "d3", "d4", "d5plus", "lemma22", "lemma31", "qi", "exdim", "pataki", "linalg")

DEFAULT_TRIALS = {
    "rank2": 5, "d1d2": 1, "d3": 20, "d4": 20, "d5plus": 10, "lemma22": 100,
    "lemma31": 100, "qi": 1, "exdim": 1, "pataki": 1, "linalg": 1,
}


def _run_trial(args):
    suite, trials, seed, k = args
    fn = _plan(suite, trials, seed)[k]
    return fn(k, make_rng(derive_seed(seed, suite, k)))


def _aggregate(suite, outcomes):
    if suite == "lemma22":
        return {"dim_8_attained": any(o.details.get("nine_dim") == 8 for o in outcomes)}
    return {}


def run_suite(suite: str, trials: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteReport:
    """Run one suite. ``jobs > 1`` spreads trials over processes; the report
    is identical either way."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    trials = DEFAULT_TRIALS[suite] if trials is None else trials
    if trials < 1:
        raise ValueError("trials must be >= 1")
    start = time.perf_counter()
    n = len(_plan(suite, trials, seed))
    tasks = [(suite, trials, seed, k) for k in range(n)]
    if jobs > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_trial, tasks))
    else:
        outcomes = [_run_trial(t) for t in tasks]
    return SuiteReport(suite=suite, trials=trials, seed=seed, outcomes=outcomes,
                       aggregate_checks=_aggregate(suite, outcomes),
                       elapsed=time.perf_counter() - start)
