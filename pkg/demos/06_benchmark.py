"""Operation counts for the expansions against Bareiss elimination."""

from compoundmat.bench import run_bench

records = run_bench(range(2, 9), ["bareiss", "cofactor", "pair-rows", "general-rows"], seed=0)
print(f"{'n':>2}  {'strategy':<14}{'ops':>10}{'minors':>8}")
for r in records:
    if r.status == "ok":
        print(f"{r.n:>2}  {r.strategy:<14}{r.scalar_ops:>10}{r.minor_evals:>8}")
