"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import math
import random
import time

import pytest

from compoundmat import (
    RMatrix,
    adjugate,
    adjugate_compound,
    cofactor_matrix_order2,
    compound,
    det_bareiss,
    det_cofactor,
    det_laplace_general,
    det_laplace_pair,
    det_permutation,
    kernel_corank1,
    kernel_corank2_4x4,
    nullspace_oracle,
    span_equal,
)
from compoundmat.bench import run_bench
from compoundmat.cli import main
from compoundmat.golden import (
    EXAMPLE_A,
    EXAMPLE_A_ADJUGATE_COMPOUND2,
    EXAMPLE_A_COFACTOR2_12,
    EXAMPLE_A_COMPOUND2,
)
from compoundmat.homlab import (
    Status,
    check_sylvester_franke,
    diagonal_preimage,
    replay,
    reversal_conjugate,
)
from compoundmat.laplace import det_laplace_alt_sign
from compoundmat.sampling import (
    random_invertible,
    random_matrix,
    random_rank_matrix,
    random_singular,
    random_sl,
    random_so,
)
from compoundmat.suites import run_suite, seeded_nonsingular, so4_fixed_samples

from conftest import ACCEPTANCE_RESULTS


def record(key, ok, detail):
    ACCEPTANCE_RESULTS[key] = (bool(ok), detail)
    print(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
    assert ok, detail


def test_criterion_01_worked_example():
    t0 = time.perf_counter()
    k = cofactor_matrix_order2(EXAMPLE_A, 1, 2)
    m2 = compound(EXAMPLE_A, 2).body
    mt2 = adjugate_compound(EXAMPLE_A, 2).body
    checks = {
        "adjugate = 0": adjugate(EXAMPLE_A).is_zero(),
        "m2 matches": m2 == EXAMPLE_A_COMPOUND2,
        "adjugate compound matches": mt2 == EXAMPLE_A_ADJUGATE_COMPOUND2,
        "m2 mt2 = 0": (m2 @ mt2).is_zero(),
        "K matches": k == EXAMPLE_A_COFACTOR2_12,
        "a K = 0": (EXAMPLE_A @ k).is_zero(),
    }
    elapsed = time.perf_counter() - t0
    failed = [name for name, ok in checks.items() if not ok]
    record(
        "1 worked-example", not failed and elapsed < 1.0,
        f"{len(checks) - len(failed)}/{len(checks)} exact checks in {elapsed:.3f}s" + (f"; failed {failed}" if failed else ""),
    )


def test_criterion_02_strategy_agreement():
    per_n = 200
    t0 = time.perf_counter()
    mismatches = 0
    evaluations = 0
    for n in range(2, 8):
        rng = random.Random(f"acceptance-2:{n}")
        for _ in range(per_n):
            a = random_matrix(rng, n)
            d = det_bareiss(a)
            values = [det_permutation(a)]
            values += [det_cofactor(a, i) for i in range(1, n + 1)]
            values += [det_laplace_pair(a, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            values += [det_laplace_general(a, sorted(rng.sample(range(1, n + 1), p))) for p in range(1, n + 1)]
            evaluations += len(values) + 1
            mismatches += sum(v != d for v in values)
    elapsed = time.perf_counter() - t0
    record(
        "2 strategy-agreement", mismatches == 0 and elapsed < 60,
        f"{per_n} matrices per n in 2..7, {evaluations} determinants, {mismatches} mismatches, {elapsed:.1f}s",
    )


def test_criterion_03_adjugate_law():
    rng = random.Random("acceptance-3")
    samples = [random_singular(rng, 2 + k % 5) for k in range(60)]
    samples += [random_matrix(rng, 2 + k % 5) for k in range(160)]
    singular = sum(det_bareiss(a) == 0 for a in samples)
    bad = sum(a @ adjugate(a) != det_bareiss(a) * RMatrix.identity(a.rows) for a in samples)
    record(
        "3 adjugate-law", bad == 0 and len(samples) >= 200 and singular >= 50,
        f"{len(samples)} matrices (n in 2..6, {singular} singular), {bad} failures",
    )


def test_criterion_04_compound_adjugate_law():
    per = 50
    bad = cases = 0
    for n in range(1, 7):
        rng = random.Random(f"acceptance-4:{n}")
        mats = [random_matrix(rng, n, dens=(1, 1, 2)) for _ in range(per)]
        for p in range(1, n + 1):
            ident = RMatrix.identity(math.comb(n, p))
            for a in mats:
                cases += 1
                bad += compound(a, p).body @ adjugate_compound(a, p).body != det_bareiss(a) * ident
    record(
        "4 compound-adjugate-law", bad == 0,
        f"{per} matrices per (n, p), n in 1..6, {cases} cases, {bad} failures",
    )


def test_criterion_05_multiplicativity():
    rng = random.Random("acceptance-5")
    pairs = bad = 0
    for k in range(240):
        n = 1 + k % 5
        a, b = random_matrix(rng, n), random_matrix(rng, n)
        pairs += 1
        bad += sum(compound(a @ b, p).body != compound(a, p).body @ compound(b, p).body for p in range(1, n + 1))
    record("5 multiplicativity", bad == 0 and pairs >= 200, f"{pairs} pairs, n in 1..5, every p, {bad} failures")


def test_criterion_06_sylvester_franke():
    per = 50
    bad = 0
    discrepancies = set()
    for n in range(1, 7):
        rng = random.Random(f"acceptance-6:{n}")
        mats = [random_matrix(rng, n, dens=(1, 1, 2)) for _ in range(per)]
        for p in range(1, n + 1):
            for a in mats:
                r = check_sylvester_franke(a, p)
                bad += r.status is Status.COUNTEREXAMPLE
                if r.status is Status.DISCREPANCY:
                    discrepancies.add((n, p))
    four_two = math.comb(3, 1) == 3
    p2_ok = all(math.comb(n - 1, 1) == n - 1 for n in range(2, 7))
    suite = {r.property: r for r in run_suite("sylvester-franke", seed=0, trials=3)}
    suite_53 = suite["sylvester-franke[n=5,p=3]"].status is Status.DISCREPANCY
    ok = bad == 0 and four_two and p2_ok and (5, 3) in discrepancies and suite_53
    record(
        "6 sylvester-franke", ok,
        f"{per} matrices per (n, p), n in 1..6, {bad} failures; (4,2) exponent 3; "
        f"DiscrepancyWithPaper at {sorted(discrepancies)}",
    )


def test_criterion_07_double_compound():
    rng = random.Random("acceptance-7")
    invertible = [random_invertible(rng, n) for n in (3, 4, 5) for _ in range(40)]
    special = [random_sl(rng, n) for n in (3, 4, 5) for _ in range(10)]

    def twice(a):
        return compound(compound(a, a.rows - 1).body, a.rows - 1).body

    bad = sum(twice(a) != det_bareiss(a) ** (a.rows - 2) * a for a in invertible)
    bad_sl = sum(det_bareiss(s) != 1 or twice(s) != s for s in special)
    record(
        "7 double-compound", bad == 0 and bad_sl == 0 and len(invertible) >= 100,
        f"{len(invertible)} invertible ({bad} failures), {len(special)} SL(n) samples ({bad_sl} failures)",
    )


def test_criterion_08_so4_involution():
    rng = random.Random("acceptance-8")
    samples = so4_fixed_samples() + [random_so(rng, 4) for _ in range(30)]
    in_so4 = all(q @ q.T == RMatrix.identity(4) and det_bareiss(q) == 1 for q in samples)
    bad = 0
    for q in samples:
        m3 = compound(q, 3).body
        bad += compound(m3, 3).body != q or m3 != reversal_conjugate(q)
    record("8 so4-involution", in_so4 and bad == 0, f"{len(samples)} rational SO(4) matrices, {bad} failures")


def test_criterion_09_kernel_extraction():
    rng = random.Random("acceptance-9")
    bad1 = bad2 = 0
    corank1 = [random_rank_matrix(rng, 2 + k % 5, 1 + k % 5) for k in range(120)]
    corank2 = [random_rank_matrix(rng, 4, 2) for _ in range(120)]
    for a in corank1:
        bad1 += not span_equal(list(kernel_corank1(a).basis), nullspace_oracle(a))
    for a in corank2:
        bad2 += not span_equal(list(kernel_corank2_4x4(a).basis), nullspace_oracle(a))
    record(
        "9 kernel-extraction", bad1 == bad2 == 0,
        f"corank 1: {len(corank1)} matrices n in 2..6, {bad1} failures; corank 2: {len(corank2)} 4x4, {bad2} failures",
    )


def test_criterion_10_injectivity_counterexample(capsys):
    code = main(["verify", "--suite", "injectivity", "--trials", "5"])
    capsys.readouterr()
    (r,) = [r for r in run_suite("injectivity", seed=0, trials=5) if r.property == "injectivity[n=4,p=2]"]
    w = r.witness or {}
    ok = (
        code == 0
        and r.status is Status.COUNTEREXAMPLE
        and w.get("a") == RMatrix.identity(4)
        and w.get("b") == -RMatrix.identity(4)
        and w.get("image") == RMatrix.identity(6)
        and replay(r)
    )
    record("10 injectivity-counterexample", ok, f"{r.status.value}: m_2(-I4) = I6 = m_2(I4), replayed")


def test_criterion_11_laplace_sign():
    a = seeded_nonsingular(0, 8)
    d = det_bareiss(a)
    corrected = det_laplace_general(a, (1, 2, 3, 4))
    literal = det_laplace_alt_sign(a, 4)
    (r,) = [r for r in run_suite("laplace-signs", seed=0, trials=1) if r.property.startswith("laplace-stated-sign")]
    ok = d != 0 and corrected == d and literal == -d and r.status is Status.DISCREPANCY and replay(r)
    record("11 laplace-sign", ok, f"det = {d}, corrected sign = det, stated sign = {literal}; {r.status.value}")


def test_criterion_12_diagonal_preimage():
    good = diagonal_preimage([2, 3, 4, 6, 8, 12])
    bad = diagonal_preimage([1, 1, 1, 1, 1, 2])
    ok = (
        good.matrix == RMatrix.diag([1, 2, 3, 4])
        and good.verified
        and bad.matrix is None
        and bad.failed_condition is not None
        and "mu1*mu6 = mu2*mu5" in bad.message
    )
    record("12 diagonal-preimage", ok, f"diag(1,2,3,4) recovered; rejection: {bad.message}")


def test_criterion_13_bench_determinism(capsys):
    argv = ["bench", "--sizes", "2..7", "--strategies", "bareiss,pair-rows,cofactor,general-rows", "--seed", "11"]
    outputs = []
    for _ in range(2):
        assert main(argv) == 0
        outputs.append(capsys.readouterr().out)
    cols = [[line.split(",")[5] for line in out.splitlines()] for out in outputs]
    same = cols[0] == cols[1] and len(cols[0]) > 1
    record("13 bench-determinism", same, f"{len(cols[0]) - 1} rows, scalar_ops columns identical: {same}")
    assert run_bench([4], ["pair-rows"], seed=11)[0].minor_evals == 12
