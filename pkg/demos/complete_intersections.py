"""Curves cut out by two surfaces in P^3, and Halphen curves.

For each, the facts known in closed form and whether a slope violation
is forced.
"""
from gonality.families import ci_facts, halphen_facts

print("complete intersections (s, p):")
for s in range(2, 5):
    for p in range(s, 6):
        f = ci_facts(s, p)
        pred = f.prediction
        where = f" at r'={pred.violation_at}" if pred else ""
        print(f"  ({s},{p}) d={f.d:3d} g={f.g:4d} d_2={f.known_values[2]:3d} "
              f"violation: {f.predicted_violation or '-'}{where}")

print("Halphen curves, s = 2 and 3:")
for s in (2, 3):
    for d in range(s * (s - 1) + 1, 14):
        f = halphen_facts(d, s)
        thm = dict(f.hypothesis_report)["theorem: d >= 11"]
        print(f"  d={d:2d} s={s} g={f.g:3d} predicted={f.predicted_violation or '-':7s} theorem covers={thm}")
