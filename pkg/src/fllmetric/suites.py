"""Verification suites: every exhaustive check the package knows how to run.

Each suite turns a parameter map into a list of :class:`Check` records. The
worker count never appears in the report, so serial and parallel runs of the
same suite serialise identically apart from ``runtime_ms``.
"""

from __future__ import annotations

import random
import time
from collections import deque
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable

import numpy as np

from . import anticodes as ac
from . import codes as cd
from .average import QUANTITIES, expectation_report
from .balls import ball_size_table, closed_form_table, fll_ball1_size_closed_form, hamming_ball_size
from .errors import UsageError
from .extremal import (
    balanced_ball_size,
    balanced_word,
    balanced_words,
    crossover_predicate,
    exhaustive_extremes,
    has_max_nonbinary_shape,
    max_ball_size_binary,
    max_ball_size_nonbinary,
    t_selector,
)
from .lcs import distance_matrix
from .report import DOCUMENTED_DELTA, FAIL, PASS, Check, VerificationReport
from .spheres import deletions, deletions_insertions, intersection_size_matrices, pairwise_intersection_sizes
from .sweep import DEFAULT_MAX_SPACE, check_capacity
from .words import Word, all_words

BALL_FORMULA_RANGES = {2: 12, 3: 7, 4: 5}
AVERAGE_RANGES = {2: 10, 3: 6, 4: 4, 5: 4}


def _words(ws) -> list[str]:
    return sorted(str(w) for w in ws)


def _n_range(params: dict, n_min: int, n_max: int) -> range:
    return range(int(params.get("n_min", n_min)), int(params.get("n_max", n_max)) + 1)


def suite_ball_formula(params: dict, workers: int, max_space: int) -> list[Check]:
    m = int(params.get("m", 2))
    checks = []
    for n in _n_range(params, 1, BALL_FORMULA_RANGES.get(m, 3)):
        check_capacity(n, m, max_space)
        oracle = ball_size_table(n, m, 1, workers, max_space)
        closed = closed_form_table(n, m)
        agree = sum(a == b for a, b in zip(oracle, closed))
        checks.append(Check.equal(f"ball1-closed-form-vs-llcs-filter[m={m},n={n}]", m**n, agree,
                                  note="words agreeing"))
    return checks


def suite_extremal(params: dict, workers: int, max_space: int) -> list[Check]:
    m = int(params.get("m", 2))
    checks = []
    for n in _n_range(params, 2, 12 if m == 2 else 7):
        check_capacity(n, m, max_space)
        ex = exhaustive_extremes(n, m, workers, max_space)
        tag = f"[m={m},n={n}]"
        checks.append(Check.equal(f"min-value{tag}", hamming_ball_size(n, m, 1), ex.min_value))
        checks.append(Check.equal(f"minimizers{tag}", _words(Word.constant(s, n, m) for s in range(m)),
                                  _words(ex.minimizers)))
        if m == 2:
            best = max_ball_size_binary(n, with_centers=True)
            checks.append(Check.equal(f"max-value{tag}", best.value, ex.max_value,
                                      note=f"alpha in {sorted(best.alpha_set)}"))
            checks.append(Check.equal(f"maximizers-are-balanced{tag}", _words(best.argmax_set),
                                      _words(ex.maximizers)))
        else:
            checks.append(Check.equal(f"max-value{tag}", max_ball_size_nonbinary(n, m), ex.max_value))
            shaped = {w for w in all_words(n, m) if has_max_nonbinary_shape(w)}
            checks.append(Check.equal(f"maximizers-have-n-runs-and-no-period-2{tag}", True,
                                      all(has_max_nonbinary_shape(w) for w in ex.maximizers)))
            checks.append(Check.equal(f"shaped-words-are-maximizers{tag}", _words(shaped),
                                      _words(ex.maximizers)))
    if m == 2:
        checks.extend(_extremal_formula_checks(params))
    return checks


def _extremal_formula_checks(params: dict) -> list[Check]:
    n_formula = int(params.get("formula_n_max", 200))
    n_closed = int(params.get("closed_form_n_max", 12))
    mismatches = [
        (n, a) for n in range(2, n_formula + 1) for a in range(2, n + 1)
        if crossover_predicate(n, a) != (balanced_ball_size(n, a) > balanced_ball_size(n, a - 1))
    ]
    checks = [Check.equal(f"crossover-biconditional[n<={n_formula}]", [], mismatches)]
    checks.append(Check.equal("crossover-boundary-witness[n=4,alpha=2]", [False, 11, 11],
                              [crossover_predicate(4, 2), balanced_ball_size(4, 2), balanced_ball_size(4, 1)]))
    bad_selector = []
    for n in range(1, n_formula + 1):
        sizes = {a: balanced_ball_size(n, a) for a in range(1, n + 1)}
        best = max(sizes.values())
        if {a for a, v in sizes.items() if v == best} != set(t_selector(n)):
            bad_selector.append(n)
    checks.append(Check.equal(f"selector-is-argmax[n<={n_formula}]", [], bad_selector))
    bad_closed = [(n, a) for n in range(1, n_closed + 1) for a in range(1, n + 1)
                  if fll_ball1_size_closed_form(balanced_word(n, a)) != balanced_ball_size(n, a)]
    checks.append(Check.equal(f"balanced-word-size[n<={n_closed}]", [], bad_closed))
    return checks


# printed closed form minus enumeration, in units of 1/m^n
KNOWN_DELTAS = {"sum_si_sq": -2, "ball1": 1}


def suite_average(params: dict, workers: int, max_space: int) -> list[Check]:
    m = int(params.get("m", 2))
    checks = []
    for n in _n_range(params, 2, AVERAGE_RANGES.get(m, 3)):
        check_capacity(n, m, max_space)
        report = expectation_report(n, m, workers, max_space)
        tag = f"[m={m},n={n}]"
        for q in QUANTITIES:
            row = report[q]
            if q in ("sum_si", "a", "rho"):
                checks.append(Check.equal(f"E[{q}]{tag}", str(row.closed), str(row.oracle)))
            else:
                # only the known gap is excused; any other mismatch fails
                known = Fraction(KNOWN_DELTAS[q], m**n)
                status = PASS if row.delta == 0 else DOCUMENTED_DELTA if row.delta == known else FAIL
                note = f"delta={row.delta}; delta*m^n={row.delta * m**n}"
                checks.append(Check(f"E[{q}]{tag}", str(row.closed), str(row.oracle), status, note))
        closed_mean = Fraction(sum(closed_form_table(n, m)), m**n)
        checks.append(Check.equal(f"E[ball1]-closed-form-mean-vs-oracle{tag}",
                                  str(report["ball1"].oracle), str(closed_mean)))
    return checks


def suite_anticodes(params: dict, workers: int, max_space: int) -> list[Check]:
    t = int(params.get("t", 1))
    duality_n_max = int(params.get("duality_n_max", 5))
    checks = []
    for n in _n_range(params, 3, 8):
        tag = f"[n={n},t={t}]"
        found = ac.enumerate_maximal_anticodes(n, 2, t, workers)
        sizes = [len(a) for a in found]
        if t == 1:
            checks.append(Check.equal(f"max-maximal-anticode{tag}", n + 1, max(sizes)))
            checks.append(Check.equal(f"min-maximal-anticode{tag}", 4, min(sizes)))
            wt = ac.weight_le_one_anticode(n)
            checks.append(Check.equal(f"weight-le-one-is-maximal{tag}", True,
                                      ac.is_anticode(wt, 1) and ac.is_maximal_anticode(wt, 1)))
            for name, pred in (("suffix-00-lemma", ac.suffix00_lemma_holds),
                               ("suffix-01-lemma", ac.suffix01_lemma_holds),
                               ("twin-prefix-lemma", ac.twin_prefix_lemma_holds),
                               ("puncture-lemmas", ac.puncture_lemmas_hold)):
                violations = sum(not pred(a) for a in found)
                checks.append(Check.equal(f"{name}{tag}", 0, violations, note=f"{len(found)} anticodes"))
        if n <= duality_n_max:
            ok = sum(ac.is_anticode(a, t) and ac.is_maximal_anticode(a, t) for a in found)
            checks.append(Check.equal(f"cliques-are-maximal-anticodes{tag}", len(found), ok))
    return checks


def _code_equivalences(code: cd.Codebook, budget: int, dist: np.ndarray | None) -> list[str]:
    """Names of the equivalences that fail for this code."""
    bad = []
    n = code.n
    min_d = cd.min_fll_distance(code)
    for s in range(min(budget, n) + 1):
        deletion = cd.is_t_deletion_correcting(code, s)
        if cd.is_t_deletion_correcting(code, s, method="spheres") != deletion:
            bad.append(f"deletion-llcs-vs-spheres[s={s}]")
        if cd.is_t_insertion_correcting(code, s) != deletion:
            bad.append(f"deletion-vs-insertion[s={s}]")
        for t1 in range(s + 1):
            if cd.is_del_ins_correcting(code, t1, s - t1) != deletion:
                bad.append(f"deletion-vs-split[{t1},{s - t1}]")
        if (min_d >= s + 1) != deletion:
            bad.append(f"deletion-vs-min-distance[s={s}]")
    for t in range(budget):
        if 2 * t + 1 > min(budget, n):
            break
        profile = cd.correct_and_detect_profile(code, t, dist_matrix=dist)
        if profile != cd.is_t_deletion_correcting(code, 2 * t + 1):
            bad.append(f"profile-vs-deletion[t={t}]")
        if profile != (min_d >= 2 * t + 2):
            bad.append(f"profile-vs-min-distance[t={t}]")
    return bad


def suite_codes(params: dict, workers: int, max_space: int) -> tuple[list[Check], int]:
    budget = int(params.get("budget", 3))
    trials = int(params.get("trials", 500))
    seed = int(params.get("seed", 0))
    random_n_max = int(params.get("random_n_max", 8))
    size_max = int(params.get("size_max", 8))
    checks = []
    for n in _n_range(params, 1, 7):
        dist = distance_matrix(n, 2, workers)
        failures: list[str] = []
        for a, b in combinations(list(all_words(n, 2)), 2):
            failures += [f"{a},{b}:{f}" for f in _code_equivalences(cd.Codebook((a, b)), budget, dist)]
        checks.append(Check.equal(f"two-word-codes[m=2,n={n},budget<={budget}]", [], failures[:10],
                                  note=f"{2**n * (2**n - 1) // 2} codes"))
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        n = rng.randint(2, random_n_max)
        size = rng.randint(2, min(size_max, 2**n))
        code = cd.random_codebook(rng, n, 2, size)
        dist = distance_matrix(n, 2, workers)
        failures += [f"trial {trial}: {f}" for f in _code_equivalences(code, budget, dist)]
    checks.append(Check.equal(f"random-codes[trials={trials},n<={random_n_max},size<={size_max}]",
                              [], failures[:10]))
    return checks, seed


def _bfs_distances(source: tuple[int, ...], m: int) -> dict[tuple[int, ...], int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        y = queue.popleft()
        for z in deletions_insertions(y, 1, 1, m):
            if z not in dist:
                dist[z] = dist[y] + 1
                queue.append(z)
    return dist


def suite_metric_axioms(params: dict, workers: int, max_space: int) -> list[Check]:
    m = int(params.get("m", 2))
    bfs_n_max = int(params.get("bfs_n_max", 7))
    duality_n_max = int(params.get("duality_n_max", 7))
    checks = []
    for n in _n_range(params, 1, 8):
        tag = f"[m={m},n={n}]"
        d = distance_matrix(n, m, workers)
        size = len(d)
        checks.append(Check.equal(f"symmetry{tag}", True, bool((d == d.T).all())))
        off_diag = d[~np.eye(size, dtype=bool)]
        checks.append(Check.equal(f"identity{tag}", True,
                                  bool((np.diag(d) == 0).all() and (off_diag > 0).all())))
        triangle = sum(int((d[:, k:k + 1] + d[k:k + 1, :] < d).sum()) for k in range(size))
        checks.append(Check.equal(f"triangle-inequality{tag}", 0, triangle))
        if n <= bfs_n_max:
            words = [w.symbols for w in all_words(n, m)]
            mismatches = 0
            for i, w in enumerate(words):
                bfs = _bfs_distances(w, m)
                mismatches += sum(bfs.get(v, -1) != d[i, j] for j, v in enumerate(words))
            checks.append(Check.equal(f"graphic-metric-bfs{tag}", 0, mismatches))
        if n <= duality_n_max:
            words = [w.symbols for w in all_words(n, m)]
            mismatches = 0
            for t in range(n + 1):
                spheres = [deletions(w, t) for w in words]
                for i, j in combinations(range(size), 2):
                    meets = not spheres[i].isdisjoint(spheres[j])
                    mismatches += meets != (n - d[i, j] >= n - t)
            checks.append(Check.equal(f"deletion-sphere-lcs-duality{tag}", 0, mismatches))
    return checks


def suite_intersections(params: dict, workers: int, max_space: int) -> list[Check]:
    m = int(params.get("m", 2))
    checks = []
    overall = [0, 0]
    for n in _n_range(params, 1, 10):
        check_capacity(n, m, max_space)
        dmat, imat = intersection_size_matrices(n, m)
        np.fill_diagonal(dmat, 0)
        np.fill_diagonal(imat, 0)
        dmax, imax = int(dmat.max()), int(imat.max())
        overall = [max(overall[0], dmax), max(overall[1], imax)]
        for label, value in (("D1", dmax), ("I1", imax)):
            checks.append(Check(f"max|{label}&{label}|[m={m},n={n}]", "<=2", value,
                                PASS if value <= 2 else FAIL))
    checks.append(Check.equal("bound-attained", [2, 2], overall))
    witness = Word((0, 1), m), Word((1, 0), m)
    checks.append(Check.equal("witness[01,10]", [2, 2], list(pairwise_intersection_sizes(*witness))))
    return checks


SUITES: dict[str, Callable] = {
    "ball-formula": suite_ball_formula,
    "extremal": suite_extremal,
    "average": suite_average,
    "anticodes": suite_anticodes,
    "codes": suite_codes,
    "metric-axioms": suite_metric_axioms,
    "intersections": suite_intersections,
}


def run_suite(name: str, params: dict[str, Any] | None = None, workers: int = 1,
              max_space: int = DEFAULT_MAX_SPACE) -> VerificationReport:
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    params = dict(params or {})
    start = time.perf_counter()
    result = SUITES[name](params, workers, max_space)
    seed = None
    if isinstance(result, tuple):
        result, seed = result
    runtime_ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(name, dict(sorted(params.items())), result, runtime_ms, seed)
