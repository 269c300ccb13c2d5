"""Exact arithmetic substrate: rationals, truncated power series, generalized
binomials, integer partitions, and symmetric-function machinery.

All coefficients are `fractions.Fraction` values, normalized eagerly by the
stdlib.  Series are immutable; every binary operation truncates to the
smaller of the two operand orders so that no untrusted tail coefficient is
ever read.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction]


def gen_binomial(x: Rat, k: int) -> Fraction:
    """Generalized binomial coefficient binom(x, k) = x(x-1)...(x-k+1)/k!.

    The upper index may be any rational; the lower index must be a
    non-negative integer.
    """
    if k < 0:
        raise ValueError("lower index must be non-negative")
    x = Fraction(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return num / fact


@dataclass(frozen=True)
class TruncatedSeries:
    """A formal power series truncated at an inclusive order N.

    ``coeffs`` has length N+1; coefficient ``coeffs[n]`` is the exact
    coefficient of z^n.  Exponents beyond N are unknown, not zero.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, values: Iterable[Rat], order: int) -> "TruncatedSeries":
        vals = [Fraction(v) for v in values]
        if len(vals) < order + 1:
            vals += [Fraction(0)] * (order + 1 - len(vals))
        return cls(tuple(vals[: order + 1]))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        """The series z."""
        return cls.from_coeffs([0, 1], order)

    # -- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} outside trusted order {self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order+1 if all zero)."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return self.order + 1

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.from_coeffs([other], self.order)
        return None

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1))
        )

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return TruncatedSeries(tuple(c * q for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(min(len(a) - 1, n) + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(min(len(b) - 1, n - i) + 1):
                if b[j] != 0:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("negative powers not supported; use divide")
        result = TruncatedSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return TruncatedSeries(tuple(c / q for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.coeffs[0] == 0:
            raise ZeroDivisionError("series division needs an invertible constant term")
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            acc = a[k]
            for j in range(1, min(k, len(b) - 1) + 1):
                acc -= b[j] * out[k - j]
            out[k] = acc / b[0]
        return TruncatedSeries(tuple(out))

    # -- shifts and calculus -----------------------------------------------

    def mul_z_power(self, k: int) -> "TruncatedSeries":
        """Multiply by z^k; the trusted order grows to N+k."""
        if k < 0:
            raise ValueError("use div_z_power for negative shifts")
        return TruncatedSeries((Fraction(0),) * k + self.coeffs)

    def div_z_power(self, k: int) -> "TruncatedSeries":
        """Divide by z^k; the first k coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError("series not divisible by z^%d" % k)
        if k > self.order:
            raise ValueError("shift exceeds trusted order")
        return TruncatedSeries(self.coeffs[k:])

    def deriv(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries.zero(0)
        return TruncatedSeries(
            tuple(n * self.coeffs[n] for n in range(1, self.order + 1))
        )

    def integrate(self) -> "TruncatedSeries":
        """Termwise antiderivative with zero constant term."""
        out = [Fraction(0)]
        out += [self.coeffs[n] / (n + 1) for n in range(self.order + 1)]
        return TruncatedSeries(tuple(out))

    # -- transcendental operations ------------------------------------------

    def exp(self) -> "TruncatedSeries":
        """Series exponential; requires zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs zero constant term")
        n = self.order
        a = self.coeffs
        out = [Fraction(1)] + [Fraction(0)] * n
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if a[k] != 0:
                    acc += k * a[k] * out[m - k]
            out[m] = acc / m
        return TruncatedSeries(tuple(out))

    def log(self) -> "TruncatedSeries":
        """Series logarithm; requires constant term one."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term one")
        n = self.order
        a = self.coeffs
        out = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            acc = m * a[m]
            for k in range(1, m):
                acc -= k * out[k] * a[m - k]
            out[m] = acc / m
        return TruncatedSeries(tuple(out))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` (valuation >= 1) for the variable."""
        v = inner.valuation()
        if v < 1:
            raise ValueError("composition needs inner valuation >= 1")
        n = inner.order
        if (self.order + 1) * v <= n:
            raise ValueError("outer series too short for requested order")
        result = TruncatedSeries.from_coeffs([self.coeffs[self.order]], n)
        for k in range(self.order - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def __str__(self) -> str:
        terms = [
            f"{c}*z^{n}" for n, c in enumerate(self.coeffs) if c != 0
        ]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(z^{self.order + 1})"


# -- integer partitions ------------------------------------------------------

def partitions(n: int) -> list[tuple[int, ...]]:
    """All multiplicity vectors (e_1, ..., e_n) with sum(j*e_j) = n.

    Enumerated in lexicographic order of the multiplicity vector.  The
    empty vector is the unique partition of 0.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [()]
    out: list[tuple[int, ...]] = []
    vec = [0] * n

    def rec(j: int, rem: int) -> None:
        if j > n:
            if rem == 0:
                out.append(tuple(vec))
            return
        if rem == 0:
            out.append(tuple(vec))
            return
        for e in range(rem // j + 1):
            vec[j - 1] = e
            rec(j + 1, rem - j * e)
        vec[j - 1] = 0

    rec(1, n)
    return out


# -- symmetric functions -----------------------------------------------------

def newton_e_from_p(p: Sequence[TruncatedSeries]) -> list[TruncatedSeries]:
    """Elementary symmetric functions e_1..e_a from power sums p_1..p_a.

    Uses Newton's identities k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i,
    valid as series identities up to the common truncation order.
    """
    if not p:
        return []
    order = min(s.order for s in p)
    es = [TruncatedSeries.one(order)]
    for k in range(1, len(p) + 1):
        acc = TruncatedSeries.zero(order)
        for i in range(1, k + 1):
            term = es[k - i] * p[i - 1]
            acc = acc + (term if i % 2 == 1 else -term)
        es.append(acc / k)
    return es[1:]


def conjugate_partition(lam: Sequence[int]) -> tuple[int, ...]:
    parts = [x for x in lam if x > 0]
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("partition parts must be non-increasing")
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x >= j) for j in range(1, parts[0] + 1))


def jacobi_trudi_schur(
    lam: Sequence[int], e: Sequence[TruncatedSeries]
) -> TruncatedSeries:
    """Schur polynomial s_lambda of series arguments, via the dual
    Jacobi-Trudi determinant det(e_{lambda'_i - i + j}) over the conjugate
    partition.

    ``e`` lists e_1..e_a; e_0 is the constant 1 and e_k vanishes outside
    0..a.  ``lam`` is given in row form and may carry trailing zeros.
    """
    a = len(e)
    lamp = conjugate_partition(lam)
    if lamp and lamp[0] > a:
        raise ValueError("partition has more parts than variables")
    order = min(s.order for s in e) if e else 0
    if not lamp:
        return TruncatedSeries.one(order)
    m = len(lamp)
    one = TruncatedSeries.one(order)

    def entry(i: int, j: int) -> TruncatedSeries | None:
        k = lamp[i] - (i + 1) + (j + 1)
        if k < 0 or k > a:
            return None
        return one if k == 0 else e[k - 1]

    memo: dict[tuple[int, tuple[int, ...]], TruncatedSeries | None] = {}

    def minor(i: int, cols: tuple[int, ...]) -> TruncatedSeries | None:
        """Determinant of rows i..m-1 restricted to ``cols`` (None = zero)."""
        if not cols:
            return one
        key = (i, cols)
        if key in memo:
            return memo[key]
        acc: TruncatedSeries | None = None
        for idx, j in enumerate(cols):
            cell = entry(i, j)
            if cell is None:
                continue
            sub = minor(i + 1, cols[:idx] + cols[idx + 1:])
            if sub is None:
                continue
            term = cell * sub
            if idx % 2 == 1:
                term = -term
            acc = term if acc is None else acc + term
        memo[key] = acc
        return acc

    det = minor(0, tuple(range(m)))
    return TruncatedSeries.zero(order) if det is None else det
