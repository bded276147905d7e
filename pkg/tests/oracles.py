"""Independent brute-force routes used to check the library.

Nothing here imports the code paths it is compared against.
"""
from fractions import Fraction


def chi_by_search(d, r):
    """Scan chi = 1, 2, ... for (d-1)/(r-1) - 1 <= chi < (d-1)/(r-1)."""
    q = Fraction(d - 1, r - 1)
    chi = 1
    while not (q - 1 <= chi < q):
        chi += 1
    return chi


def pi_by_fraction(d, r):
    chi = chi_by_search(d, r)
    eps = d - 1 - chi * (r - 1)
    val = chi * (Fraction(chi - 1, 2) * (r - 1) + eps)
    assert val.denominator == 1
    return int(val)


def noether_table(alpha_max):
    """r -> (alpha, beta) by enumerating every admissible pair."""
    out = {}
    for alpha in range(1, alpha_max + 1):
        for beta in range(alpha + 1):
            r = alpha * (alpha + 3) // 2 - beta
            assert r not in out, "pairs must not collide"
            out[r] = (alpha, beta)
    return out


def slope_ok(seq_values, r):
    """Fraction comparison of d_r/r and d_{r+1}/(r+1); seq_values is 1-based."""
    return Fraction(seq_values[r], r) >= Fraction(seq_values[r + 1], r + 1)


def closure_oracle(g, known, r_max):
    """Minimal degrees from a fixpoint over (degree, dimension) pairs.

    Complete series: the given prefix, the zero divisor, non-special series
    (d, d-g) and the Serre duals of all of these.  Existence is then closed
    under adding a base point and projecting from a point.
    """
    D, R = 3 * g + r_max + 2, r_max + g + 2
    complete = {(0, 0)} | {(d, r) for r, d in known.items()}
    complete |= {(d, d - g) for d in range(2 * g - 1, D)}
    complete |= {(2 * g - 2 - d, g - 1 - d + r) for d, r in list(complete)
                 if d <= 2 * g - 2 and g - 1 - d + r >= 0}
    inf = float("inf")
    lowest = [inf] * R
    for d, r in complete:
        if 0 <= r < R:
            lowest[r] = min(lowest[r], d)
    return {r: min(lowest[r + k] - k for k in range(R - r)) for r in range(1, r_max + 1)}


def witnesses_wide(g):
    """All (d, r) with chi >= 3 and pi = g over a deliberately loose box."""
    out = []
    for r in range(2, g + 2):
        for d in range(3 * r - 1, 3 * g + 3):
            if pi_by_fraction(d, r) == g:
                out.append((d, r))
    return sorted(out, key=lambda t: (t[1], t[0]))
