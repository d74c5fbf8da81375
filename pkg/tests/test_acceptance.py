"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py``; the lines are also
collected into an "acceptance criteria" section of the terminal summary.
"""

import math
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from conftest import produced_requirements, record_acceptance
from corpus_runner import run_corpus
from growth_fixtures import CASE_TABLE, EMPIRICAL_FIXTURES
from hilbert_resources import cases, counts, oracle
from hilbert_resources.counts import Kind
from hilbert_resources.growth import GrowthClass, classify_dof, classify_fock, empirical_check
from hilbert_resources.solver import min_modes, min_particles


def test_criterion_01_oracle_equivalence():
    start = time.perf_counter()
    # the two largest distinguishable specs (K = D = 8, L = 7 and 8) hold ~1.7e7 configurations each
    budget = oracle.Budget(max_configs=2 * 10**7)
    report = oracle.verify_formulas(8, 8, families=oracle.ALL_FAMILIES, budget=budget)
    elapsed = time.perf_counter() - start
    families = {row[0] for row in report.rows}
    dist_ok = all(
        row[1]["K"] * row[1]["D"] <= 64 and row[1]["L"] <= row[1]["K"]
        for row in report.rows
        if row[0] == "distinguishable"
    )
    ok = report.passed and families == set(oracle.ALL_FAMILIES) and dist_ok and elapsed < 10
    detail = f"{report.specs_checked} specs, {report.configurations} configurations, {elapsed:.2f}s < 10s"
    assert record_acceptance(1, "oracle equivalence on M, L <= 8", ok, detail)


def test_criterion_02_symmetry_suite():
    start = time.perf_counter()
    failures = 0
    checks = 0
    for M in range(1, 31):
        for L in range(0, 31):
            checks += 3
            failures += counts.bose_dimension(M, L).value != counts.bose_dimension(L + 1, M - 1).value
            failures += (
                counts.bose_dimension_variable(M, L).value != counts.bose_dimension(M + 1, L).value
            )
            if L >= 1:
                checks += 1
                failures += (
                    counts.bose_dimension_variable(M, L).value
                    != counts.bose_dimension_variable(L, M).value
                )
            if L <= M:
                failures += counts.fermi_dimension(M, L).value != counts.fermi_dimension(M, M - L).value
            else:
                checks -= 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 1
    assert record_acceptance(
        2, "particle-mode, variable-count, phantom-mode, particle-hole symmetries", ok,
        f"{checks} exact identities, {failures} failures, {elapsed:.3f}s < 1s",
    )


def test_criterion_03_entropy_asymptotics():
    M = 10**4
    # log2_binomial takes the log-gamma (log-beta) route for these sizes
    bose = counts.bose_log2(M, M) / M
    fermi = counts.fermi_log2(M, M // 2) / M
    d_bose = abs(bose - counts.mode_entropy(1))
    d_fermi = abs(fermi - counts.binary_entropy(0.5))
    ok = d_bose <= 0.01 and d_fermi <= 0.01
    assert record_acceptance(
        3, "entropy asymptotics at M = 10^4", ok,
        f"|bose - S(1)| = {d_bose:.2e}, |fermi - H(1/2)| = {d_fermi:.2e}, tol 0.01",
    )


def test_criterion_04_hydrogen_case_study():
    asym = cases.hydrogen_for_qubits(100, cases.ASYMPTOTIC).outputs
    exact = cases.hydrogen_for_qubits(100, cases.EXACT_COUNT).outputs
    km = asym["radius_km"].value
    suns = asym["sun_diameters"].value
    factor = exact["radius"].value / asym["radius"].value
    ok = 5e6 <= km <= 7e6 and 4 <= suns <= 5.5 and 1 / 2.2 <= factor <= 2.2
    assert record_acceptance(
        4, "hydrogen radius for N = 100", ok,
        f"r = {km:.4e} km, {suns:.3f} sun diameters, exact/asymptotic = {factor:.4f}",
    )


def test_criterion_05_hydrogen_dimension_formula():
    mismatches = 0
    for n in range(1, 201):
        brute = sum(2 * l + 1 for k in range(1, n + 1) for l in range(k))
        mismatches += cases.cumulative_dimension(n) != brute
    exact = cases.cumulative_dimension(100)
    rel = abs(100**3 / 3 - exact) / exact
    ok = mismatches == 0 and rel < 0.02
    assert record_acceptance(
        5, "hydrogen cumulative dimension", ok,
        f"{mismatches} mismatches for n <= 200, n^3/3 error at n = 100 is {rel:.4%}",
    )


def test_criterion_06_nmr_case_study():
    n_max = cases.nmr_max_qubits(2e-5, 1e20)
    worst = max(
        abs(p.repetitions * p.epsilon**2 - 1)
        for p in (cases.nmr_pseudopure(2e-5, N) for N in range(1, 61))
    )
    ok = n_max == 22 and abs(n_max - 20) <= 3 and worst <= 1e-12
    assert record_acceptance(
        6, "NMR pseudopure scaling", ok,
        f"max qubits = {n_max}, max |reps eps^2 - 1| = {worst:.1e}",
    )


def test_criterion_07_classical_wave():
    n = cases.min_qubits_for_waist(8.8e26, 5e-7)
    ok = n == 221 and abs(n - 220) <= 10
    assert record_acceptance(7, "classical-wave qubits at universe size", ok, f"N = {n}")


def test_criterion_08_classifier_table():
    start = time.perf_counter()
    wrong = []
    for row in CASE_TABLE:
        growth = GrowthClass.parse(row["growth"])
        if row["family"] == "dof":
            v = classify_dof(growth)
        else:
            v = classify_fock(row["family"], row["parameter"], growth)
        got = (v.case_label, v.verdict.value, str(v.complement).split(":")[0])
        if got != (row["case"], row["verdict"], row["complement"]):
            wrong.append((row, got))
    labels = {row["case"] for row in CASE_TABLE}
    disagree = []
    for name, family, parameter, policy, ns, declared, D in EMPIRICAL_FIXTURES:
        if not empirical_check(family, parameter, policy, ns, declared, D).agrees:
            disagree.append(name)
    elapsed = time.perf_counter() - start
    ok = not wrong and not disagree and len(labels) == 14 and elapsed < 30
    assert record_acceptance(
        8, "classifier table and empirical agreement", ok,
        f"{len(CASE_TABLE)} table rows over {len(labels)} case labels, {len(wrong)} wrong; "
        f"{len(EMPIRICAL_FIXTURES) - len(disagree)}/{len(EMPIRICAL_FIXTURES)} fixtures agree; {elapsed:.2f}s",
    )


def test_criterion_09_solver_exactness():
    bad = []
    for N in range(0, 61):
        a = min_modes(Kind.BOSE_FIXED, 1, N)
        b = min_particles(Kind.BOSE_VARIABLE, N, M=1)
        if a.solved_value != 2**N or b.solved_value != 2**N - 1:
            bad.append(N)
    # every requirement produced so far in this session, these included
    produced = produced_requirements()
    not_minimal = [r for r in produced if not r.is_minimal()]
    ok = not bad and not not_minimal
    assert record_acceptance(
        9, "solver exactness and minimality", ok,
        f"{61 - len(bad)}/61 targets exact; {len(produced) - len(not_minimal)}/{len(produced)} outputs minimal",
    )


def test_criterion_10_determinism():
    runner = Path(__file__).with_name("corpus_runner.py")
    outputs = []
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run(
            [sys.executable, str(runner)], capture_output=True, env=env, check=True
        )
        outputs.append(proc.stdout)
    in_process = [run_corpus(), run_corpus()]
    ok = outputs[0] == outputs[1] and in_process[0] == in_process[1] and len(outputs[0]) > 0
    assert record_acceptance(
        10, "byte-identical CLI output over the corpus", ok,
        f"{len(in_process[0])} commands, {len(outputs[0])} bytes per run",
    )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
