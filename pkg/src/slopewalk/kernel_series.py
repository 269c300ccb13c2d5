"""Kernel-method engine for two-jump models {-a, +c} with gcd(a, c) = 1.

The a small roots u_i(z) of the kernel 1 - z(u^-a + u^c) = 0 are packaged
through one auxiliary series U(x) solving the Lagrangean scheme
U = x*(1 + U^(a+c))^(1/a); the small branches are u_i(z) = U(w^(i-1) z^(1/a))
for an a-th root of unity w.  Power sums of the branches are honest z-series
with rational coefficients, and meander generating functions come out as
Schur polynomials of the branches.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .exactmath import (
    TruncatedSeries,
    gen_binomial,
    jacobi_trudi_schur,
    newton_e_from_p,
)


class KernelError(ValueError):
    """Inconsistent or unsupported kernel computation."""


@dataclass(frozen=True)
class BranchSeries:
    """The fundamental branch series U(x), where x stands for z^(1/a)."""

    a: int
    c: int
    series: TruncatedSeries

    @property
    def period(self) -> int:
        return self.a + self.c


def _validate(a: int, c: int) -> None:
    if a <= 0 or c <= 0:
        raise KernelError("jump magnitudes must be positive")
    if gcd(a, c) != 1:
        raise KernelError(f"need gcd(a, c) = 1, got gcd({a}, {c}) = {gcd(a, c)}")


def branch_coefficient(a: int, c: int, m: int, h: int = 1) -> Fraction:
    """[x^m] U(x)^h by Lagrange inversion:
    (h/m) [u^(m-h)] (1 + u^(a+c))^(m/a)."""
    _validate(a, c)
    if h < 1:
        raise KernelError("power must be >= 1")
    if m < h:
        return Fraction(0)
    p = a + c
    if (m - h) % p:
        return Fraction(0)
    j = (m - h) // p
    return Fraction(h, m) * gen_binomial(Fraction(m, a), j)


@lru_cache(maxsize=64)
def branch_series(a: int, c: int, order: int) -> BranchSeries:
    """U(x) to x-order ``order``, computed independently by fixed-point
    iteration of U = x*(1+U^(a+c))^(1/a) and by Lagrange inversion; the two
    routes must agree coefficient-wise.
    """
    _validate(a, c)
    if order < 1:
        raise KernelError("order must be >= 1")
    p = a + c

    # route 1: fixed-point iteration with the rational-exponent binomial series
    phi_order = order // p
    phi = TruncatedSeries.from_coeffs(
        [gen_binomial(Fraction(1, a), k) for k in range(phi_order + 1)], phi_order
    )
    x = TruncatedSeries.identity(order)
    u = x
    for _ in range(order // p + 2):
        t = u ** p
        u = x * phi.compose(t) if t.valuation() <= order else x
    if u != x * phi.compose(u ** p):
        raise KernelError("fixed-point iteration did not stabilize")

    # route 2: Lagrange inversion, coefficient by coefficient
    lagrange = TruncatedSeries.from_coeffs(
        [branch_coefficient(a, c, m) if m else Fraction(0) for m in range(order + 1)],
        order,
    )
    if u != lagrange:
        raise KernelError("fixed-point and Lagrange series disagree")
    return BranchSeries(a=a, c=c, series=u)


def power_sum_coefficient(h: int, a: int, c: int, n: int) -> Fraction:
    """[z^n] of sum_i u_i(z)^h, in closed form: (h/n) C(n, (a*n-h)/(a+c))."""
    _validate(a, c)
    if h < 1:
        raise KernelError("power must be >= 1")
    if n == 0:
        return Fraction(0)
    p = a + c
    if (a * n - h) % p:
        return Fraction(0)
    j = (a * n - h) // p
    if j < 0 or j > n:
        return Fraction(0)
    return Fraction(h, n) * comb(n, j)


def power_sum(
    h: int, a: int, c: int, order: int, branch: BranchSeries | None = None
) -> TruncatedSeries:
    """p_h(z) = sum of the h-th powers of the a small branches, as an exact
    z-series: a * sum_n [x^(a*n)] U(x)^h * z^n."""
    _validate(a, c)
    if h < 1:
        raise KernelError("power must be >= 1")
    if branch is None:
        branch = branch_series(a, c, a * order + h)
    uh = branch.series ** h
    if uh.order < a * order:
        raise KernelError("branch series too short for requested order")
    return TruncatedSeries.from_coeffs(
        [a * uh[a * n] if a * n <= uh.order else Fraction(0) for n in range(order + 1)],
        order,
    )


@dataclass(frozen=True)
class SmallBranchSymmetrics:
    """Power sums p_1..p_a and elementary symmetric functions e_1..e_a of
    the small branches, as z-series."""

    a: int
    c: int
    power_sums: tuple[TruncatedSeries, ...]
    elementary: tuple[TruncatedSeries, ...]


@lru_cache(maxsize=64)
def small_branch_symmetrics(a: int, c: int, order: int) -> SmallBranchSymmetrics:
    _validate(a, c)
    branch = branch_series(a, c, a * order + a)
    ps = tuple(power_sum(h, a, c, order, branch=branch) for h in range(1, a + 1))
    es = tuple(newton_e_from_p(ps))
    return SmallBranchSymmetrics(a=a, c=c, power_sums=ps, elementary=es)


def meander_gf(a: int, c: int, h: int, i: int, order: int) -> TruncatedSeries:
    """Generating function of meanders with jumps {-a, +c} starting at
    altitude h >= a and ending at altitude i < a:

        F_i(z) = (-1)^(a-i-1) / z * s_(h+1, 1^(a-i-1), 0^i)(u_1, ..., u_a).

    The 1/z must cancel exactly against the Schur series; a surviving
    constant term is reported as an internal error.
    """
    _validate(a, c)
    if h < a:
        raise KernelError("start altitude must satisfy h >= a")
    if not 0 <= i < a:
        raise KernelError("end altitude must satisfy 0 <= i < a")
    syms = small_branch_symmetrics(a, c, order + 1)
    lam = (h + 1,) + (1,) * (a - i - 1) + (0,) * i
    schur = jacobi_trudi_schur(lam, syms.elementary)
    if (a - i - 1) % 2 == 1:
        schur = -schur
    if schur[0] != 0:
        raise KernelError("Schur series constant term failed to cancel")
    return schur.div_z_power(1)


def slope25_F0_G1(order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The two slope-2/5 generating functions (jumps {-2, +5}): walks from
    altitude 3 to 0 and from altitude 4 to 1, via symmetric functions:

        F0 = -e2 * h3 / z,   G1 = h5 / z,

    with h_k the complete homogeneous functions of the two small branches
    (recurrence h_k = e1*h_(k-1) - e2*h_(k-2)).
    """
    if order < 5:
        raise KernelError("order must be >= 5")
    syms = small_branch_symmetrics(2, 5, order + 1)
    e1, e2 = syms.elementary
    n = e1.order
    hs = [TruncatedSeries.one(n), e1]
    for _ in range(2, 6):
        hs.append(e1 * hs[-1] - e2 * hs[-2])
    f0 = (-(e2 * hs[3])).div_z_power(1)
    g1 = hs[5].div_z_power(1)
    return f0, g1
