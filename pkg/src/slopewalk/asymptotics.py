"""Numeric singularity analysis for two-jump models {-a, +c}.

Structural constants, kernel-root evaluation at complex points (Aberth
simultaneous iteration with deterministic starting values), branch tracking
and the rotation law, the Puiseux coefficient extractor, the slope-2/5
asymptotic profile with Knuth's constants, and the mean-area growth
constant of the slope-2/3 excursion model.

Everything runs at a configurable decimal precision on top of mpmath;
published constants are checked by residuals against their annihilating
polynomials rather than by symbolic derivation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath as mp

from .exactmath import gen_binomial
from .lattice_enum import JumpPolynomial, mean_area_scan

DEFAULT_DIGITS = 50
_GUARD = 15


class RootFindError(RuntimeError):
    """The polynomial root finder failed to converge or to classify."""


def _to_mpf(x) -> mp.mpf:
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


@dataclass
class Precision:
    """Working precision policy: decimal digits and derived tolerances."""

    digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        if self.digits < 10:
            raise ValueError("need at least 10 digits")

    @property
    def root_tol(self) -> mp.mpf:
        return mp.mpf(10) ** (-(self.digits - 10))


@dataclass
class StructuralConstants:
    """tau (positive critical point of the jump polynomial), the dominant
    singularity rho = 1/P(tau), and the singularity ring rho * omega^k."""

    a: int
    c: int
    tau: mp.mpf
    p_tau: mp.mpf
    rho: mp.mpf
    digits: int

    @property
    def period(self) -> int:
        return self.a + self.c

    @property
    def omega(self) -> mp.mpc:
        return mp.e ** (2j * mp.pi / self.period)

    def zeta(self, k: int) -> mp.mpc:
        return self.rho * self.omega ** k


def jump_poly_value(a: int, c: int, u) -> mp.mpf:
    return u ** (-a) + u ** c


def structural_constants(a: int, c: int, digits: int = DEFAULT_DIGITS) -> StructuralConstants:
    """tau = (a/c)^(1/(a+c)) solves P'(tau) = 0 for P(u) = u^-a + u^c;
    rho = 1/P(tau)."""
    if gcd(a, c) != 1:
        raise ValueError("need gcd(a, c) = 1")
    with mp.workdps(digits + _GUARD):
        tau = mp.root(mp.mpf(a) / c, a + c)
        p_tau = jump_poly_value(a, c, tau)
        rho = 1 / p_tau
        return StructuralConstants(a=a, c=c, tau=+tau, p_tau=+p_tau, rho=+rho, digits=digits)


# -- kernel polynomial and the Aberth root finder ----------------------------

def _kernel_coeffs(a: int, c: int, z) -> list:
    """Monic coefficients (ascending) of u^(a+c) - u^a/z + 1 = 0, the kernel
    1 - z P(u) = 0 cleared of denominators."""
    p = a + c
    coeffs = [mp.mpc(0)] * (p + 1)
    coeffs[0] = mp.mpc(1)
    coeffs[a] = -1 / mp.mpc(z)
    coeffs[p] = mp.mpc(1)
    return coeffs


def _polyval(coeffs: list, u):
    acc = coeffs[-1]
    for c0 in reversed(coeffs[:-1]):
        acc = acc * u + c0
    return acc


def _polyder(coeffs: list) -> list:
    return [k * coeffs[k] for k in range(1, len(coeffs))]


def aberth_roots(coeffs: list, initial: list, tol, max_iter: int = 1200) -> list:
    """Aberth-Ehrlich simultaneous iteration from the given starting points.

    Deterministic: no randomness, fixed iteration order.  Converges only
    linearly at multiple roots, which the generous iteration cap absorbs.
    """
    der = _polyder(coeffs)
    roots = [mp.mpc(v) for v in initial]
    n = len(roots)
    for _ in range(max_iter):
        moved = mp.mpf(0)
        for i in range(n):
            ui = roots[i]
            pv = _polyval(coeffs, ui)
            if pv == 0:
                continue
            dv = _polyval(der, ui)
            newton = pv / dv if dv != 0 else pv
            s = mp.mpc(0)
            for j in range(n):
                if j != i:
                    diff = ui - roots[j]
                    if diff != 0:
                        s += 1 / diff
            denom = 1 - newton * s
            delta = newton / denom if denom != 0 else newton
            roots[i] = ui - delta
            moved = max(moved, abs(delta) / max(1, abs(ui)))
        if moved < tol:
            return roots
    raise RootFindError("Aberth iteration did not converge")


def _bisect_polish(f, x0, width, steps: int) -> mp.mpf:
    """Polish a real root by bisection on an expanding bracket around x0;
    returns x0 unchanged when no sign change is found (multiple root)."""
    lo, hi = x0 - width, x0 + width
    for _ in range(60):
        if mp.sign(f(lo)) * mp.sign(f(hi)) < 0:
            break
        width *= 2
        lo, hi = x0 - width, x0 + width
    else:
        return x0
    flo = f(lo)
    for _ in range(steps):
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if mp.sign(flo) * mp.sign(fm) < 0:
            hi = mid
        else:
            lo, flo = mid, fm
    return (lo + hi) / 2


def kernel_roots_at(
    a: int, c: int, z, digits: int = DEFAULT_DIGITS
) -> tuple[list, list]:
    """All a+c kernel roots at the point z, split into the a small ones and
    the c large ones by modulus.

    On the singularity ring a small and a large branch may coincide; the
    tied pair is then one double root and the split is still well defined.
    A modulus tie between genuinely distinct roots raises RootFindError.
    """
    if gcd(a, c) != 1:
        raise ValueError("need gcd(a, c) = 1")
    z = mp.mpc(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    with mp.workdps(2 * digits + 2 * _GUARD):
        coeffs = _kernel_coeffs(a, c, z)
        r_small = mp.root(abs(z), a)
        r_large = mp.root(1 / abs(z), c)
        arg = mp.arg(z)
        init = [
            r_small * mp.e ** (1j * (arg + 2 * mp.pi * k) / a) for k in range(a)
        ] + [
            r_large * mp.e ** (1j * (-arg + 2 * mp.pi * (k + mp.mpf(1) / 2)) / c)
            for k in range(c)
        ]
        tol = mp.mpf(10) ** (-(2 * digits + _GUARD))
        roots = aberth_roots(coeffs, init, tol)
        # polish near-real roots by bisection when the polynomial is real
        if mp.im(z) == 0 and mp.re(z) > 0:
            freal = lambda u: mp.re(_polyval(coeffs, mp.mpc(u)))
            for i, u in enumerate(roots):
                if abs(mp.im(u)) < tol * max(1, abs(u)):
                    x = _bisect_polish(freal, mp.re(u), mp.mpf(10) ** (-digits // 2),
                                       int(3.4 * (2 * digits)))
                    roots[i] = mp.mpc(x)
        roots.sort(key=lambda u: (abs(u), mp.arg(u)))
        small, large = roots[:a], roots[a:]
        edge = abs(large[0]) - abs(small[-1])
        if edge < mp.mpf(10) ** (-digits // 2):
            if abs(large[0] - small[-1]) > mp.mpf(10) ** (-digits // 2):
                raise RootFindError(
                    "ambiguous small/large classification: modulus tie "
                    "between distinct roots"
                )
        return ([+u for u in small], [+u for u in large])


# -- branch tracking and the rotation law ------------------------------------

def _labeled_base_roots(a: int, c: int, z0, digits: int) -> list:
    """Small roots at a real positive base point, labeled u_1..u_a so that
    u_i matches U(w^(i-1) z0^(1/a)) for the a-th root of unity w."""
    from .kernel_series import branch_series

    order = 3 * (a + c) + 1
    series = branch_series(a, c, order).series
    small, _ = kernel_roots_at(a, c, z0, digits)
    with mp.workdps(digits + _GUARD):
        x0 = mp.root(z0, a)
        w_a = mp.e ** (2j * mp.pi / a)
        approx = []
        for i in range(a):
            x = x0 * w_a ** i
            acc = mp.mpc(0)
            for m in range(order, -1, -1):
                acc = acc * x + _to_mpf(series[m])
            approx.append(acc)
        used = set()
        labeled = []
        for ap in approx:
            best, best_d = None, None
            for idx, u in enumerate(small):
                if idx in used:
                    continue
                d = abs(u - ap)
                if best_d is None or d < best_d:
                    best, best_d = idx, d
            used.add(best)
            labeled.append(small[best])
        return labeled


def small_roots_tracked(
    a: int, c: int, z, digits: int = DEFAULT_DIGITS, steps: int = 16
) -> list:
    """Small branches u_1(z)..u_a(z) with consistent labels, continued
    along the straight segment from a real positive base point.

    Valid for targets with |z| <= rho and 0 <= arg(z) < pi (no cut
    crossing).  On pairing ambiguity the step is halved.
    """
    sc = structural_constants(a, c, digits)
    with mp.workdps(digits + _GUARD):
        z = mp.mpc(z)
        z0 = mp.mpc(sc.rho / 8)
        current = _labeled_base_roots(a, c, z0, digits)

        def advance(frm, to, labels, depth=0):
            if depth > 12:
                raise RootFindError("branch tracking failed: step underflow")
            mid_roots, _ = kernel_roots_at(a, c, to, digits)
            matched = []
            used = set()
            ok = True
            for lab in labels:
                dists = sorted(
                    (abs(u - lab), idx) for idx, u in enumerate(mid_roots) if idx not in used
                )
                if not dists:
                    ok = False
                    break
                d0, idx0 = dists[0]
                if len(dists) > 1 and dists[1][0] < 4 * d0:
                    ok = False
                    break
                used.add(idx0)
                matched.append(mid_roots[idx0])
            if ok:
                return matched
            mid = (frm + to) / 2
            half = advance(frm, mid, labels, depth + 1)
            return advance(mid, to, half, depth + 1)

        pos = z0
        for k in range(1, steps + 1):
            target = z0 + (z - z0) * mp.mpf(k) / steps
            current = advance(pos, target, current)
            pos = target
        return current


@dataclass
class RotationReport:
    """Result of checking the small-branch rotation symmetry
    u_i(w z) = w^(-kappa) u_(sigma(i))(z) at sampled points."""

    a: int
    c: int
    kappa: int
    samples: int
    max_deviation: mp.mpf
    derangement: bool
    swap_pairing: bool
    ok: bool


def rotation_kappa(a: int, c: int) -> int:
    """The unique kappa in [0, a+c) with kappa*a + 1 = 0 mod (a+c)."""
    p = a + c
    for k in range(p):
        if (k * a + 1) % p == 0:
            return k
    raise ValueError("no kappa: gcd(a, a+c) != 1")


def rotation_law_check(
    a: int,
    c: int,
    digits: int = DEFAULT_DIGITS,
    samples=None,
    tol=None,
) -> RotationReport:
    """Verify that multiplying the small branches at w*z by w^kappa permutes
    them into the small branches at z, fixed-point-freely (w = primitive
    (a+c)-th root of unity).
    """
    sc = structural_constants(a, c, digits)
    p = a + c
    kappa = rotation_kappa(a, c)
    with mp.workdps(digits + _GUARD):
        if samples is None:
            lo, hi = mp.mpf("0.08") * mp.pi, (mp.pi - 2 * mp.pi / p) * mp.mpf("0.92")
            args = [lo + (hi - lo) * k / 4 for k in range(5)]
            samples = [sc.rho * mp.mpf(r) * mp.e ** (1j * t)
                       for r in ("0.35", "0.65") for t in args]
        if tol is None:
            tol = mp.mpf(10) ** (-(digits - 12))
        omega = mp.e ** (2j * mp.pi / p)
        max_dev = mp.mpf(0)
        derangement = True
        swap_ok = True
        for z in samples:
            u_here = small_roots_tracked(a, c, z, digits)
            u_rot = small_roots_tracked(a, c, omega * z, digits)
            used = set()
            sigma = []
            for i in range(a):
                cand = omega ** kappa * u_rot[i]
                best, best_d = None, None
                for j in range(a):
                    if j in used:
                        continue
                    d = abs(cand - u_here[j])
                    if best_d is None or d < best_d:
                        best, best_d = j, d
                used.add(best)
                sigma.append(best)
                max_dev = max(max_dev, best_d)
                if best == i:
                    derangement = False
            if a == 2 and sigma != [1, 0]:
                swap_ok = False
        ok = bool(max_dev < tol and derangement and (a != 2 or swap_ok))
        return RotationReport(
            a=a, c=c, kappa=kappa, samples=len(samples),
            max_deviation=+max_dev, derangement=derangement,
            swap_pairing=swap_ok, ok=ok,
        )


# -- Puiseux coefficient extraction ------------------------------------------

def local_extractor(terms, rho, n: int, digits: int = DEFAULT_DIGITS) -> mp.mpf:
    """Coefficient of z^n read off a Puiseux expansion at the singularity
    rho: for terms sum_j c_j (1 - z/rho)^(r_j), returns

        sum_j c_j * (-1)^n * binom(r_j, n) * rho^(-n),

    with the generalized binomial evaluated exactly before rounding.
    """
    with mp.workdps(digits + _GUARD):
        acc = mp.mpf(0)
        rho = _to_mpf(rho)
        sign = -1 if n % 2 else 1
        for r, coeff in terms:
            b = gen_binomial(Fraction(r), n) * sign
            acc += _to_mpf(coeff) * _to_mpf(b)
        return +(acc * rho ** (-n))


# -- slope-2/5 asymptotic profile --------------------------------------------

TAU2_ANNIHILATOR = (3125, 37500, 27708, 13540, 3900, 500)  # coeffs of t^(7k)
KAPPA1_MINPOLY = (-1, -1, -6, 10, -41, 23)
KAPPA2_MINPOLY = (-142, 5180, -97580, 628250, -5363750, 11571875)


def _poly_eval(coeffs, x):
    acc = mp.mpf(0)
    for c0 in reversed(coeffs):
        acc = acc * x + c0
    return acc


@dataclass
class AsymptoticProfile:
    """Numeric bundle for the slope-2/5 model: structural constants, the
    second real branch value tau2 = u_2(rho), and the growth constants of
    the A/B coefficient families."""

    digits: int
    tau: mp.mpf
    rho: mp.mpf
    tau2: mp.mpf
    mu: mp.mpf
    alpha1: mp.mpf
    alpha2: mp.mpf
    beta1: mp.mpf
    beta2: mp.mpf
    kappa1: mp.mpf
    kappa2: mp.mpf

    def tau2_annihilator_residual(self) -> mp.mpf:
        with mp.workdps(self.digits + _GUARD):
            t7 = self.tau2 ** 7
            return +abs(_poly_eval(TAU2_ANNIHILATOR, t7))

    def kappa1_minpoly_residual(self) -> mp.mpf:
        with mp.workdps(self.digits + _GUARD):
            return +abs(_poly_eval(KAPPA1_MINPOLY, self.kappa1))

    def kappa2_minpoly_residual(self) -> mp.mpf:
        with mp.workdps(self.digits + _GUARD):
            return +abs(_poly_eval(KAPPA2_MINPOLY, mp.mpf(7) / 3 * self.kappa2))


def knuth_constants(digits: int = DEFAULT_DIGITS) -> AsymptoticProfile:
    """Full slope-2/5 asymptotic profile at the requested precision.

    tau2 is located by bisection as the negative real kernel root at
    z = rho and cross-checked against its degree-35 annihilating
    polynomial; kappa1/kappa2 are checked against their auxiliary
    polynomial relation.  Inconsistencies raise RootFindError.
    """
    if digits < 30:
        raise ValueError("constant computations need >= 30 digits")
    sc = structural_constants(2, 5, digits)
    with mp.workdps(digits + 2 * _GUARD):
        rho, tau = mp.mpf(sc.rho), mp.mpf(sc.tau)
        g = lambda u: u * u - rho * (1 + u ** 7)
        tau2 = _bisect_polish(g, mp.mpf("-0.7"), mp.mpf("0.25"),
                              int(3.4 * (digits + 2 * _GUARD)) + 10)
        mu = tau2 / tau
        sqrt5 = mp.sqrt(5)
        mu2, mu3, mu4 = mu * mu, mu ** 3, mu ** 4
        t27 = tau2 ** 7
        alpha1 = (mu4 + 2 * mu3 + 3 * mu2 + 4 * mu + 5) / sqrt5
        beta1 = sqrt5 - alpha1
        alpha2 = -(mp.mpf(1) / 10) * (
            5 * t27 * (13 * mu4 + 22 * mu3 + 29 * mu2 + 36 * mu + 45)
            + 2 * (15 * mu4 + 20 * mu3 + 13 * mu2 - 8 * mu - 45)
        ) / (sqrt5 * (5 * t27 - 2))
        beta2 = -mp.mpf(9) / 10 * sqrt5 - alpha2
        kappa1 = alpha1 / beta1
        kappa2 = -mp.mpf(3) / 14 * (alpha2 * beta1 - alpha1 * beta2) / beta1 ** 2

        check_tol = mp.mpf(10) ** (-(digits - 10))
        alt_k1 = -5 / (mu4 + 2 * mu3 + 3 * mu2 + 4 * mu) - 1
        if abs(kappa1 - alt_k1) > check_tol:
            raise RootFindError("kappa1 cross-formula mismatch")
        alt_k2 = mp.mpf(3) / 9800 * (
            13 - 236 * kappa1 - 194 * kappa1 ** 2
            - 388 * kappa1 ** 3 + 437 * kappa1 ** 4
        )
        if abs(kappa2 - alt_k2) > check_tol:
            raise RootFindError("kappa2 polynomial relation mismatch")
        profile = AsymptoticProfile(
            digits=digits, tau=+tau, rho=+rho, tau2=+tau2, mu=+mu,
            alpha1=+alpha1, alpha2=+alpha2, beta1=+beta1, beta2=+beta2,
            kappa1=+kappa1, kappa2=+kappa2,
        )
    if profile.tau2_annihilator_residual() > mp.mpf(10) ** (-(digits - 20)):
        raise RootFindError("tau2 annihilator residual too large")
    return profile


def kappa2_minpoly_residual(digits: int = DEFAULT_DIGITS) -> mp.mpf:
    """|P((7/3) kappa2)| for the published degree-5 annihilating polynomial."""
    return knuth_constants(digits).kappa2_minpoly_residual()


@dataclass
class CoefficientEstimates:
    """Two-term asymptotic estimates for the slope-2/5 coefficient pair."""

    n: int
    a_estimate: mp.mpf
    b_estimate: mp.mpf
    sum_first_order: mp.mpf


def an_bn_asymptotic(
    n: int, digits: int = DEFAULT_DIGITS, profile: AsymptoticProfile | None = None
) -> CoefficientEstimates:
    """Two-term estimates

        A_n ~ alpha1 rho^(-7n)/sqrt(pi (7n-2)^3)
              + (3 alpha2/2) rho^(-7n)/sqrt(pi (7n-2)^5),

    same for B_n with beta1/beta2, plus the first-order estimate
    sqrt(5/(7^3 pi)) rho^(-7n) / n^(3/2) for the sum A_n + B_n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if profile is None:
        profile = knuth_constants(digits)
    with mp.workdps(digits + _GUARD):
        grow = profile.rho ** (-7 * n)
        m = 7 * n - 2
        lead = grow / mp.sqrt(mp.pi * m ** 3)
        corr = grow / mp.sqrt(mp.pi * m ** 5)
        a_est = profile.alpha1 * lead + mp.mpf(3) / 2 * profile.alpha2 * corr
        b_est = profile.beta1 * lead + mp.mpf(3) / 2 * profile.beta2 * corr
        sum_est = mp.sqrt(mp.mpf(5) / (343 * mp.pi)) * grow / mp.mpf(n) ** mp.mpf("1.5")
        return CoefficientEstimates(
            n=n, a_estimate=+a_est, b_estimate=+b_est, sum_first_order=+sum_est
        )


# -- mean area of slope-2/3 excursions ----------------------------------------

DUCHON_JUMPS = JumpPolynomial.from_jumps([2, -3])


@dataclass
class AreaConvergenceReport:
    """Exact mean areas of {+2, -3} excursions against the predicted growth
    of the boundary area.

    The affine bijection between slope-2/3 North/East paths and directed
    excursions multiplies areas by a+c = 5, so the area enclosed between a
    North/East path to (3k, 2k) and its boundary line is exactly one fifth
    of the trapezoid area under the directed polyline of length n = 5k.
    The growth constant K = sqrt(15 pi)/2 applies to that boundary area as
    a function of k; equivalently the raw trapezoid area grows like
    (K/sqrt(5)) n^(3/2).
    """

    k_exact: mp.mpf
    rows: list  # (n, mean trapezoid area Fraction, ratio (mean/5)/(n/5)^1.5)
    k_extrapolated: mp.mpf
    raw_ratio_at_max: mp.mpf
    fit_c1: mp.mpf
    fit_c2: mp.mpf


def duchon_area_constant(
    digits: int = DEFAULT_DIGITS,
    max_n: int = 2000,
    grid: list[int] | None = None,
) -> AreaConvergenceReport:
    """K = sqrt(15 pi)/2 compared against exact mean areas from the DP.

    The boundary-area ratio m(k)/k^(3/2) is fitted as K + c1/sqrt(k) + c2/k
    on the grid (default max_n/4, max_n/2, max_n, rounded to excursion
    lengths).
    """
    if max_n > 5000:
        raise ValueError("max_n capped at 5000")
    if grid is None:
        grid = [max_n // 4, max_n // 2, max_n]
    grid = sorted({(g // 5) * 5 for g in grid})
    if len(grid) < 3 or grid[0] < 5:
        raise ValueError("need three distinct excursion lengths")
    rows_exact = mean_area_scan(DUCHON_JUMPS, max(grid), checkpoints=grid)
    with mp.workdps(digits + _GUARD):
        k_exact = mp.sqrt(15 * mp.pi) / 2
        rows = []
        for n, _cnt, mean in rows_exact:
            k = mp.mpf(n) / 5
            ratio = _to_mpf(mean / 5) / k ** mp.mpf("1.5")
            rows.append((n, mean, +ratio))
        ks = [mp.mpf(n) / 5 for n, _, _ in rows[-3:]]
        rs = [r for _, _, r in rows[-3:]]
        mat = mp.matrix([[1, 1 / mp.sqrt(k), 1 / k] for k in ks])
        sol = mp.lu_solve(mat, mp.matrix(rs))
        return AreaConvergenceReport(
            k_exact=+k_exact,
            rows=rows,
            k_extrapolated=+sol[0],
            raw_ratio_at_max=+rows[-1][2],
            fit_c1=+sol[1],
            fit_c2=+sol[2],
        )
