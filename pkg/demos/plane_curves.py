"""Slope violations of smooth plane curves sit at r = a(a+3)/2."""
from gonality import find_violations, plane_curve_sequence

for d in range(5, 11):
    seq = plane_curve_sequence(d)
    rep = find_violations(seq)
    print(f"d={d:2d} g={seq.g:3d} violations at {rep.indices}, last = g - d_1 = {seq.g - seq[1]}")
