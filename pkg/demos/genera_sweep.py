"""Which genera are genera of extremal curves of degree >= 3r - 1?

Sweeps a range, prints the non-members and the outcome of each check.
"""
import sys

from gonality.genera import classify_range

hi = int(sys.argv[1]) if len(sys.argv) > 1 else 300
cl = classify_range(3, hi, workers=2)
print(f"non-members up to {hi}: {len(cl.non_members())}")
print("even:", [g for g in cl.non_members() if g % 2 == 0])
print("odd composite:", [row.g for row in cl.rows if not row.member and row.g % 2 and len(row.factors) > 1])
for name, ok in cl.checks.items():
    print(f"  {'ok  ' if ok else 'FAIL'} {name}")
