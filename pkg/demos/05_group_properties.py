"""Run the property suites and show what they report."""

from compoundmat.suites import run_suite

for name in ["double-compound", "so4-involution", "injectivity", "laplace-signs"]:
    print(f"== {name}")
    for report in run_suite(name, seed=0, trials=5):
        print(report.to_text())
    print()
