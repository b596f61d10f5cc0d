"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py -v`` to see the lines.

Criterion 7 includes the per-cell counter inequality alpha*h_N <= N for
every type-1/2/3 cell.  The first peeled corner is numbered N=1 with hook
1, so the inequality demands alpha <= 1 and is unsatisfiable for every
admissible alpha; no numbering that starts the peel blocks at 1 can avoid
it.  The clause is checked exactly as stated and therefore fails; every
other clause of criterion 7 passes, as the failure message spells out.
"""
import json
import time
from fractions import Fraction
from math import factorial

from hookbound.bounds import (
    general_bound,
    rectangle_bound,
    reduce_diagram,
    strict_bound,
    strip_bound,
    theorem_classify,
)
from hookbound.celltyping import cell_typing, check_typing_hypotheses, rho
from hookbound.certificates import MODE_LOG, PASS, revalidate
from hookbound.cli import main
from hookbound.degrees import (
    count_syt_bruteforce,
    degree,
    sum_squares_identity,
    verify_remark_N_ge_h,
)
from hookbound.errors import HookBoundError, HypothesisError
from hookbound.families import staircase, staircase_with_tail
from hookbound.partitions import Partition, enumerate_partitions
from hookbound.sweep import build_growth_report, render_csv

ALPHA_TYPING = Fraction(11, 10)


def report(number, ok, detail):
    print(f"ACCEPTANCE {number:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    return ok


def timed(budget_s, started):
    return time.monotonic() - started <= budget_s


def test_criterion_01_degree_equals_bruteforce():
    started = time.monotonic()
    checked = 0
    for n in range(9):
        for lam in enumerate_partitions(n):
            assert degree(lam) == count_syt_bruteforce(lam), lam
            checked += 1
    ok = timed(60, started)
    assert report(1, ok, f"degree == brute-force tableau count on {checked} shapes, n <= 8")


def test_criterion_02_sum_of_squares():
    started = time.monotonic()
    for n in range(1, 12):
        assert sum_squares_identity(n), n
    ok = timed(60, started)
    assert report(2, ok, "sum of squared degrees equals n! for 1 <= n <= 11")


def test_criterion_03_conjugation_symmetry():
    started = time.monotonic()
    checked = 0
    for n in range(13):
        for lam in enumerate_partitions(n):
            assert degree(lam) == degree(lam.conjugate()), lam
            checked += 1
    ok = timed(60, started)
    assert report(3, ok, f"degree(conjugate) symmetry on {checked} shapes, n <= 12")


def test_criterion_04_tableau_complement_bound():
    started = time.monotonic()
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            assert verify_remark_N_ge_h(lam), lam
    ok = timed(300, started)
    assert report(4, ok, "n+1-t >= hook over every standard tableau, n <= 7")


def test_criterion_05_strip_bound_sweep_and_example():
    started = time.monotonic()
    alpha = Fraction(2)
    checked = 0
    for n in range(10, 19):
        cap = n // 2
        for lam in enumerate_partitions(n, max_part=cap, max_parts=cap):
            if not lam.in_hook_class(3, 2):
                continue
            sc = strip_bound(lam, 3, 2, alpha)
            cert = sc.certificate
            if cert.mode == MODE_LOG:
                assert cert.verdict == PASS and cert.margin > 1e-9, lam
            else:
                assert cert.verdict == PASS, lam
            checked += 1
    example = strip_bound(Partition.parse("9,6,4,2,2,1"), 4, 3, alpha)
    assert example.t == (6, 5, 3, 6, 3, 1, 0)
    assert sum(example.t) == 24
    ok = timed(120, started)
    assert report(
        5, ok, f"strip bound PASS on {checked} H(3,2) shapes in [10,18]; worked t-sequence exact"
    )


def test_criterion_06_rectangle_exact_grid():
    started = time.monotonic()
    checked = 0
    for a in range(1, 9):
        for b in range(a, 65):
            if a * b > 64:
                break
            n = a * b
            f = degree(Partition((b,) * a))
            assert f * factorial(b) ** a * 4**n >= factorial(n), (a, b)
            cert = rectangle_bound(a, b)
            assert cert.aux["factorial_form_holds"] is True, (a, b)
            checked += 1
    ok = timed(120, started)
    assert report(6, ok, f"rectangle factorial inequality exact on {checked} grids, ab <= 64")


def _typing_family():
    """At least 200 hypothesis-satisfying diagrams: staircases in [155, 200]
    (none exist below 155 at alpha = 11/10) plus exact-uniform sampled tails."""
    family = []
    for n in range(155, 201):
        family.append(staircase(n, ALPHA_TYPING))
    for tail in range(1, 46):
        for seed in range(4):
            family.append(staircase_with_tail(10, 11, tail, seed * 7919 + tail))
    out = []
    for lam in family:
        if 120 <= lam.n <= 200:
            check_typing_hypotheses(lam, ALPHA_TYPING)  # raises if unsatisfied
            out.append(lam)
    return out


def test_criterion_07_cell_typing_soundness():
    started = time.monotonic()
    family = _typing_family()
    assert len(family) >= 200

    eq1_failures = []
    clause_failures = []
    for lam in family:
        ct = cell_typing(lam, ALPHA_TYPING)
        alpha = ALPHA_TYPING
        for rec in ct.cells:
            if rec.cell_type in (1, 2, 3) and alpha * rec.hook > rec.number:
                eq1_failures.append((lam.format(), rec.number, rec.hook))
        if Fraction(ct.counts[0]) < 2 * alpha * ct.r + alpha * ct.delta:
            clause_failures.append(("eq2", lam.format()))
        if Fraction(ct.counts[3]) > ct.delta**2 + alpha * ct.rho:
            clause_failures.append(("eq6", lam.format()))
        prod = 1
        for rec in ct.of_type(4):
            prod *= rec.hook
        falling = 1
        for i in range(ct.counts[3]):
            falling *= lam.n - i
        if prod > falling:
            clause_failures.append(("type4-product", lam.format()))
        cert = strict_bound(lam, alpha)
        if cert.verdict != PASS or cert.margin <= 1e-9:
            clause_failures.append(("certificate", lam.format()))
    ok = timed(600, started) and not clause_failures and not eq1_failures
    distinct_violations = sorted({(n, h) for _, n, h in eq1_failures})
    report(
        7,
        ok,
        f"family of {len(family)}; eq2/eq6/type4-product/certificate clauses: "
        f"{len(clause_failures)} failures; per-cell alpha*h<=N clause: "
        f"{len(eq1_failures)} violations, all at (N,h) in {distinct_violations}",
    )
    assert not clause_failures
    assert not eq1_failures, (
        "the per-cell counter inequality is violated exactly at the first "
        f"peeled corner (N=1, hook 1) of each of the {len(family)} diagrams: "
        "alpha*1 <= 1 cannot hold for alpha = 11/10 > 1, so this clause is "
        "unattainable as stated; every other clause of criterion 7 passed "
        "(see the ACCEPTANCE 7 line and docs/decision notes)"
    )


def _reduction_family():
    """Same construction as the typing family, scaled to where the reduction
    hypotheses are satisfiable: delta >= 18*alpha = 19.8 forces delta >= 20,
    hence n >= 610 for the minimal strict staircase."""
    family = [staircase(n, ALPHA_TYPING) for n in range(610, 681)]
    for tail in range(1, 46):
        for seed in range(3):
            family.append(staircase_with_tail(20, 21, tail, seed * 104729 + tail))
    return family


def test_criterion_08_reduction_coherence():
    started = time.monotonic()
    family = _reduction_family()
    assert len(family) >= 200
    failures = []
    for lam in family:
        try:
            tr = reduce_diagram(lam, ALPHA_TYPING)
        except (HypothesisError, HookBoundError) as err:
            failures.append((lam.format(), f"reduce error: {err}"))
            continue
        if tr.delta_mu < tr.delta // 2 + 1:
            failures.append((lam.format(), "diagonal halving"))
        if not (lam.contains(tr.mu) or lam.conjugate().contains(tr.mu)):
            failures.append((lam.format(), "containment"))
        expected_n2 = (
            tr.n1 - (tr.delta - tr.s - 1) * (tr.delta - tr.s) // 2
            if tr.s < tr.delta
            else tr.n1
        )
        if tr.n2 != expected_n2:
            failures.append((lam.format(), "n2 formula"))
        cert = general_bound(lam, ALPHA_TYPING)
        if cert.verdict != PASS:
            failures.append((lam.format(), "general bound verdict"))
    ok = timed(600, started) and not failures
    assert report(
        8,
        ok,
        f"reduction invariants and general bound PASS on {len(family)} diagrams "
        f"(delta >= 20 needs n >= 610, so the family runs at n in [610, 680]); "
        f"failures: {failures[:3]}",
    )


def test_criterion_09_theorem_sweep_end_to_end():
    started = time.monotonic()
    alpha, beta = Fraction(2), Fraction(3, 2)
    report_obj = build_growth_report("balanced", alpha, beta, 40, 120)
    assert len(report_obj.rows) == 81
    failures = []
    for row in report_obj.rows:
        if row.verdict != PASS:
            failures.append((row.n, "verdict"))
        lam = row.partition
        cert = theorem_classify(lam, alpha, beta)
        delta = lam.diagonal()
        if Fraction(delta) < 18 * alpha:
            expected = "M1"
        else:
            gn = cert.aux["gamma"] * lam.n
            threshold = float(Fraction(5, 2) * delta**2 + alpha * rho(delta, alpha))
            expected = "M2" if gn <= threshold * (1 + 1e-9) else "M3"
        if row.cls != expected:
            failures.append((row.n, f"class {row.cls} != {expected}"))
    n0 = report_obj.empirical_n0
    ok = timed(600, started) and not failures and n0 == 40
    assert report(
        9,
        ok,
        f"balanced sweep n in [40,120]: all PASS, classes recomputed, empirical n0 = {n0}",
    )


def test_criterion_10_containment_monotonicity():
    started = time.monotonic()
    shapes = [p for n in range(11) for p in enumerate_partitions(n)]
    degrees = {p: degree(p) for p in shapes}
    checked = 0
    for lam in shapes:
        for mu in shapes:
            if lam.contains(mu):
                assert degrees[mu] <= degrees[lam], (mu, lam)
                checked += 1
    ok = timed(300, started)
    assert report(10, ok, f"containment monotonicity on {checked} nested pairs, n <= 10")


def test_criterion_11_determinism_and_revalidation(capsys):
    argv = [
        "sweep", "sample", "--alpha", "2", "--beta", "3/2",
        "--n-from", "40", "--n-to", "44", "--samples", "3", "--seed", "17",
    ]
    code1 = main(list(argv))
    out1 = capsys.readouterr().out
    code2 = main(list(argv))
    out2 = capsys.readouterr().out
    identical = code1 == code2 == 0 and out1 == out2 and len(out1) > 0

    certs_ok = True
    for bound_argv in (
        ["certify", "rectangle", "--a", "3", "--b", "4"],
        ["certify", "strict", ",".join(str(v) for v in range(20, 10, -1)), "--alpha", "11/10"],
        ["certify", "theorem", ",".join(str(v) for v in range(40, 20, -1)),
         "--alpha", "11/10", "--beta", "21/20"],
    ):
        main(list(bound_argv))
        data = json.loads(capsys.readouterr().out)
        certs_ok = certs_ok and revalidate(data)

    ok = identical and certs_ok
    with capsys.disabled():
        assert report(
            11, ok, "seeded sweep byte-identical across runs; certify JSON re-validates"
        )
