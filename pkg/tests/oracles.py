"""Brute-force oracles used by the test suite.

These are deliberately independent of the package internals: exhaustive
enumeration, direct series expansion, and ratio-of-alternants evaluation.
They are slow and simple on purpose.
"""

from fractions import Fraction
from itertools import product


def enumerate_directed_paths(jumps, n, start, end=None, constrained=True):
    """Yield every n-step jump sequence (as altitude lists) satisfying the
    constraints, by exhaustive enumeration."""
    for seq in product(sorted(jumps), repeat=n):
        alts = [start]
        ok = True
        for j in seq:
            h = alts[-1] + j
            if constrained and h < 0:
                ok = False
                break
            alts.append(h)
        if not ok:
            continue
        if end is not None and alts[-1] != end:
            continue
        yield alts


def brute_count_directed(jumps, n, start, end=None, constrained=True):
    return sum(1 for _ in enumerate_directed_paths(jumps, n, start, end, constrained))


def trapezoid_area(alts):
    """Doubled not needed: exact Fraction area under the polyline."""
    return sum(Fraction(alts[i] + alts[i + 1], 2) for i in range(len(alts) - 1))


def brute_mean_excursion_area(jumps, n):
    areas = [
        trapezoid_area(alts)
        for alts in enumerate_directed_paths(jumps, n, 0, 0, True)
    ]
    if not areas:
        raise ValueError("no excursions")
    return sum(areas) / len(areas)


def enumerate_ne_paths(xe, ye):
    """All North/East step strings from (0,0) to (xe, ye)."""
    if xe == 0 and ye == 0:
        yield ""
        return
    if xe > 0:
        for rest in enumerate_ne_paths(xe - 1, ye):
            yield "E" + rest
    if ye > 0:
        for rest in enumerate_ne_paths(xe, ye - 1):
            yield "N" + rest


def brute_count_ne_below(a, b, c, end, touch):
    """Exhaustive count of NE paths with all points below (a*x+b)/c."""

    def allowed(x, y):
        return c * y <= a * x + b if touch else c * y < a * x + b

    total = 0
    for path in enumerate_ne_paths(*end):
        x = y = 0
        ok = allowed(0, 0)
        for step in path:
            if step == "E":
                x += 1
            else:
                y += 1
            if not allowed(x, y):
                ok = False
                break
        total += ok
    return total


def partition_counts(max_n):
    """[t^n] of prod_m 1/(1-t^m) for n = 0..max_n, by direct expansion."""
    coeffs = [1] + [0] * max_n
    for m in range(1, max_n + 1):
        # multiply by 1/(1-t^m)
        for n in range(m, max_n + 1):
            coeffs[n] += coeffs[n - m]
    return coeffs


def schur_by_alternants(lam, xs):
    """s_lambda(x_1..x_a) as det(x_i^(lam_j + a - j)) / Vandermonde, for
    distinct rational points xs."""
    a = len(xs)
    lam = tuple(lam) + (0,) * (a - len(lam))

    def det(rows):
        n = len(rows)
        if n == 0:
            return Fraction(1)
        total = Fraction(0)
        for i in range(n):
            if rows[i][0] == 0:
                continue
            minor = [r[1:] for k, r in enumerate(rows) if k != i]
            term = rows[i][0] * det(minor)
            total += term if i % 2 == 0 else -term
        return total

    num = [[Fraction(x) ** (lam[j] + a - 1 - j) for j in range(a)] for x in xs]
    den = [[Fraction(x) ** (a - 1 - j) for j in range(a)] for x in xs]
    return det(num) / det(den)


def enumerate_sw_walks(q):
    """All South/West step strings from q to the origin."""
    q1, q2 = q
    for path in enumerate_ne_paths(q1, q2):
        yield "".join("W" if s == "E" else "S" for s in path)


def brute_min_y_distance(a, b, c, q, steps):
    """delta(w) computed directly from the definition."""
    x, y = q
    dists = []
    for s in steps:
        if s == "S":
            y -= 1
        else:
            x -= 1
        d = Fraction(a * x + b, c) - y
        if d <= 0:
            return Fraction(0)
        dists.append(d)
    return min(dists)
