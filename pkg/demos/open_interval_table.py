"""Exact interval table for the constants that are still open.

Seeds the grid with the known values plus this library's own lattice
lower bounds, then runs the inequality catalog to a fixed point.  The
default profile reproduces the published interval table; pass --full to
see how the stronger composition rules tighten the open cells further.
"""

import sys

from codelattice import propagate_bounds, standard_seeds, asymptotic_bounds

rules = "full" if "--full" in sys.argv else "published"
n_max = 7

result = propagate_bounds(n_max, standard_seeds(n_max), rules=rules)
print(f"rule profile: {rules} (fixed point after {result.sweeps} sweeps)")
print()
print(f"{'cell':22} {'lower':>12} {'upper':>12}  status")
for (kind, n, l), cell in sorted(result.cells.items()):
    if l > n - l:
        continue  # duality: the mirrored cells repeat these rows
    lo = cell.lower.to_decimal(5)
    hi = "?" if cell.upper is None else cell.upper.to_decimal(5)
    status = "exact" if cell.is_exact() else "open interval"
    label = f"{kind}({n},{l})"
    print(f"{label:<22} {lo:>12} {hi:>12}  {status}")

print()
print("derivations for the open rank-2 cells:")
for key in (("rankin", 5, 2), ("rankin", 7, 2), ("berge_martinet", 5, 2), ("berge_martinet", 7, 2)):
    cell = result.cells[key]
    print(f"  {key[0]}({key[1]},{key[2]}):")
    for step in cell.provenance:
        print(f"    - {step}")

print()
print("asymptotic bounds on the half-rank constants gamma_{2k,k}:")
for k in (2, 3, 4, 5, 6):
    b = asymptotic_bounds(k)
    print(f"  k={k}: [{b.lower}, {b.upper}]  (lower: {b.lower_rule})")
