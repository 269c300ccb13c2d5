"""Closed-form identities: rational Catalan numbers, the exp-of-series and
partition-sum counts for paths returning to a rational-slope line, Knuth's
binomial sum and its hypergeometric recurrence, starting-point families on
the boundary, the lattice-path integral, and the general slope identities.

Everything here is exact; any value that must be an integer is asserted to
be one (a failed assertion is a genuine bug, never rounding noise).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .exactmath import Rat, TruncatedSeries, gen_binomial, partitions


class NoSolutionError(ValueError):
    """The Diophantine condition gcd(a, c) | b fails: no lattice point on
    the boundary line."""


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out fractional."""


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {x}")
    return x.numerator


def rational_catalan(a: int, b: int) -> int:
    """Cat(a, b) = C(a+b, a)/(a+b); an integer whenever gcd(a, b) = 1."""
    if a <= 0 or b <= 0:
        raise ValueError("need positive a, b")
    return _as_int(Fraction(comb(a + b, a), a + b), f"Cat({a},{b})")


def _cycle_coefficient(a: int, b: int, j: int) -> Fraction:
    """c_j = C((a+b)j, a j) / ((a+b)j)."""
    return Fraction(comb((a + b) * j, a * j), (a + b) * j)


def bizley_series(a: int, b: int, order: int) -> list[int]:
    """Counts f(a*k, b*k) of North/East paths returning to the line of slope
    a/b (touch allowed), for k = 0..order, by the exp-of-series route:

        sum_k f(a*k, b*k) t^k = exp( sum_j c_j t^j ).

    Quasi-linear in the order, unlike the partition sum.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    arg = TruncatedSeries.from_coeffs(
        [Fraction(0)] + [_cycle_coefficient(a, b, j) for j in range(1, order + 1)],
        order,
    )
    series = arg.exp()
    return [_as_int(series[k], f"f({a}*{k},{b}*{k})") for k in range(order + 1)]


def grossman_sum(a: int, b: int, n: int) -> int:
    """f(a*n, b*n) as the sum over integer partitions of n of
    prod_j c_j^(e_j) / e_j!  (p(n) summands)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cs = [_cycle_coefficient(a, b, j) for j in range(1, n + 1)]
    total = Fraction(0)
    for mult in partitions(n):
        term = Fraction(1)
        for j, e in enumerate(mult, start=1):
            if e:
                term *= cs[j - 1] ** e
                for i in range(2, e + 1):
                    term /= i
        total += term
    return _as_int(total, f"partition sum for f({a}*{n},{b}*{n})")


def knuth_sum(n: int) -> int:
    """A_n + B_n = 2/(7n-1) * C(7n-1, 2n) for the slope-2/5 pair of models."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _as_int(Fraction(2 * comb(7 * n - 1, 2 * n), 7 * n - 1), "knuth_sum")


def recurrence_check(n: int) -> bool:
    """Does C_n = knuth_sum(n) satisfy the order-one hypergeometric
    recurrence

      C_(n+1)/C_n = (7/10) (7n+5)(7n+4)(7n+3)(7n+2)(7n+1)(7n-1)
                           / ((5n+4)(5n+3)(5n+2)(5n+1)(2n+1)(n+1))
    exactly?"""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = Fraction(7, 10)
    for f in (7 * n + 5, 7 * n + 4, 7 * n + 3, 7 * n + 2, 7 * n + 1, 7 * n - 1):
        num *= f
    for f in (5 * n + 4, 5 * n + 3, 5 * n + 2, 5 * n + 1, 2 * n + 1, n + 1):
        num /= f
    return Fraction(knuth_sum(n + 1)) == knuth_sum(n) * num


@dataclass(frozen=True)
class StartingPointFamily:
    """All lattice points on y = (a*x + b)/c:  (q1, q2) = (c*s - r_a, a*s + r_c).

    The representative (r_a, r_c) with r_a*a + r_c*c = b is canonicalized to
    0 <= r_c < a/gcd(a, c); any valid pair generates the same point set up
    to reindexing of s.  ``s_min`` is the least s making both coordinates
    strictly positive.
    """

    a: int
    b: int
    c: int
    r_a: int
    r_c: int
    s_min: int

    def point(self, s: int) -> tuple[int, int]:
        return (self.c * s - self.r_a, self.a * s + self.r_c)

    def points(self, count: int) -> list[tuple[int, int]]:
        return [self.point(s) for s in range(self.s_min, self.s_min + count)]

    def index_of(self, q: tuple[int, int]) -> int:
        """The s with point(s) == q (ValueError if q is not in the family)."""
        s, rem = divmod(q[0] + self.r_a, self.c)
        if rem or self.point(s) != q:
            raise ValueError(f"{q} is not on the boundary lattice")
        return s


def starting_points(a: int, b: int, c: int) -> StartingPointFamily:
    """Solve c*y - a*x = b in integers via the extended Euclidean algorithm.

    Raises NoSolutionError when gcd(a, c) does not divide b.
    """
    if a <= 0 or b <= 0 or c <= 0:
        raise ValueError("need positive a, b, c")
    g = gcd(a, c)
    if b % g:
        raise NoSolutionError(f"gcd({a},{c}) = {g} does not divide {b}")
    # r_a * a + r_c * c = g, scaled to b
    old_r, r = a, c
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    r_a = old_s * (b // g)
    r_c = old_t * (b // g)
    # canonicalize: 0 <= r_c < a/g  (shifting r_c by a/g moves r_a by c/g)
    step_a, step_c = c // g, a // g
    k = r_c // step_c
    r_c -= k * step_c
    r_a += k * step_a
    s_min = max(r_a // c + 1, (-r_c) // a + 1)
    return StartingPointFamily(a=a, b=b, c=c, r_a=r_a, r_c=r_c, s_min=s_min)


def lattice_path_integral(q: tuple[int, int], beta: Fraction) -> Fraction:
    """Integral over t of |W_t| for walks from q down to the origin under
    the boundary through q with y-intercept beta:

        beta/(q1+q2) * C(q1+q2, q1).
    """
    q1, q2 = q
    return Fraction(beta) * comb(q1 + q2, q1) / (q1 + q2)


def naka_integral(a: int, b: int, c: int, s: int) -> Fraction:
    """The lattice-path integral for the s-th starting point of the
    boundary family of y = (a*x + b)/c:

        (b/c) / ((a+c)s + (r_c - r_a)) * C((a+c)s + (r_c - r_a), a*s + r_c).
    """
    fam = starting_points(a, b, c)
    if s < fam.s_min:
        raise ValueError(f"s must be >= {fam.s_min}")
    return lattice_path_integral(fam.point(s), Fraction(b, c))


def general_slope_sum(a: int, b: int, c: int, s: int) -> int:
    """Sum over k = 1..b of the number of North/East paths strictly below
    y = (a*x + k)/c ending at (q1(s), q2(s) - 1):

        b/((a+c)s + (r_c - r_a)) * C((a+c)s + (r_c - r_a), a*s + r_c).
    """
    fam = starting_points(a, b, c)
    if s < fam.s_min:
        raise ValueError(f"s must be >= {fam.s_min}")
    q1, q2 = fam.point(s)
    val = Fraction(b) * comb(q1 + q2, q2) / (q1 + q2)
    return _as_int(val, "general slope sum")


def general_sum(a: int, c: int, ell: int, s: int) -> int:
    """Sum over k = ell*a+1 .. (ell+1)*a of the number of North/East paths
    strictly below y = (a*x + k)/c ending at (c*s - 1, a*s - 1):

        (ell*a + c)/((a+c)s + ell - 1) * C((a+c)s + ell - 1, a*s - 1).
    """
    if not (0 < a < c) or gcd(a, c) != 1:
        raise ValueError("need 0 < a < c with gcd(a, c) = 1")
    if ell < 0 or (ell + 1) * a >= c:
        raise ValueError("need ell >= 0 with (ell+1)*a < c")
    if s < 1:
        raise ValueError("need s >= 1")
    m = (a + c) * s + ell - 1
    val = Fraction(ell * a + c) * comb(m, a * s - 1) / m
    return _as_int(val, "general sum")


def tree_series(t: Rat, r: Rat, order: int) -> TruncatedSeries:
    """T(z)^r for the tree equation T = 1 + z T^t, continued to rational
    branching t:  coefficient of z^k is C(t*k + r, k) * r/(t*k + r)."""
    t, r = Fraction(t), Fraction(r)
    coeffs = []
    for k in range(order + 1):
        x = t * k + r
        if x == 0:
            raise ZeroDivisionError(f"t*k + r vanishes at k = {k}")
        coeffs.append(gen_binomial(x, k) * r / x)
    return TruncatedSeries.from_coeffs(coeffs, order)


def log_tree_identity_check(t: Rat, order: int) -> bool:
    """Does log T(z) = sum_{n>=1} C(t*n, n)/(t*n) z^n hold through the
    requested order?  (Vacuously true at order 0.)"""
    t = Fraction(t)
    if order == 0:
        return True
    lhs = tree_series(t, 1, order).log()
    for n in range(1, order + 1):
        if t * n == 0:
            return False
        if lhs[n] != gen_binomial(t * n, n) / (t * n):
            return False
    return True


def half_tree_even_identity_check(order: int) -> bool:
    """Does T(z) T(-z) for t = 3/2 reduce to the even series with
    [z^(2n)] = C(3n+1, n)/(n+1) through the requested order?"""
    tpos = tree_series(Fraction(3, 2), 1, order)
    tneg = TruncatedSeries.from_coeffs(
        [(-1) ** k * tpos[k] for k in range(order + 1)], order
    )
    prod = tpos * tneg
    for m in range(order + 1):
        if m % 2:
            if prod[m] != 0:
                return False
        else:
            n = m // 2
            if prod[m] != Fraction(comb(3 * n + 1, n), n + 1):
                return False
    return True
