"""Genus 9 extremal space curve of degree 8.

Rebuilds its gonality sequence from the three values below the genus and
shows where the slope inequality breaks.
"""
from gonality import complete_sequence, find_violations, lemma36_check, pi_bound

data = pi_bound(8, 3)
print(f"pi(8, 3) = {data.pi}  (chi={data.chi}, eps={data.epsilon}, {data.regime})")

seq = complete_sequence(data.pi, {1: 4, 2: 7, 3: 8}, 12)
print("r   :", " ".join(f"{r:>3}" for r in seq.entries))
print("d_r :", " ".join(f"{d:>3}" for d in seq.values()))
print("from:", " ".join(f"{seq.provenance[r][:3]:>3}" for r in seq.entries))

rep = find_violations(seq)
for c in rep.evidence:
    print(f"violation at r={c.r}: (r+1)*d_r = {c.lhs} < r*d_(r+1) = {c.rhs}")

# the same index falls out of the dual series without knowing the table
pred = lemma36_check(9, 8, 3, 7)
print(f"predicted from g^3_8 with d_2 = 7: r' = {pred.violation_at}, "
      f"d_{pred.r_dual} <= {pred.d_upper}, d_{pred.r_dual + 1} >= {pred.d_lower_next}")
