"""High-precision constants for the asymptotic main term c1*N*log(N) + c0*N.

The bundle is

    c1 = zeta(2) = pi^2 / 6
    c0 = (2*gamma - 1) * zeta(2) - 2 * theta,

with gamma the Euler-Mascheroni constant and theta = sum_{d>=1} log(d)/d^2.
Everything is evaluated with mpmath at WORKING_DPS digits and exported as a
HighPrecisionReal carrying a conservative count of trusted digits.

gamma and theta are computed here by Euler-Maclaurin summation rather than
taken from a table:

* gamma:  H_M = log M + gamma + 1/(2M) - sum_{j>=1} B_{2j} / (2j * M^{2j}),
  so gamma = H_M - log M - 1/(2M) + corrections.

* theta:  direct summation of log(d)/d^2 up to M, plus the tail

      log_tail(M) = (log M + 1)/M - log M/(2 M^2)
                    - sum_{j>=1} B_{2j}/(2j)! * f^(2j-1)(M),

  where f(x) = log(x)/x^2.  Every derivative of f has the closed form
  f^(k)(x) = (alpha_k * log x + beta_k) / x^(k+2) with integer
  coefficients obeying

      alpha_{k+1} = -(k + 2) * alpha_k,
      beta_{k+1}  = alpha_k - (k + 2) * beta_k,

  starting from (alpha_0, beta_0) = (1, 0), so the correction terms cost
  nothing to generate exactly.

Correction terms are added until the first omitted one falls below 1e-30.
The series are asymptotic, not convergent: for small M the terms
eventually grow, so log_tail first sums directly up to max(M, 10^4) and
only then switches to Euler-Maclaurin, where the 1e-30 cutoff is reached
after three terms.

mpmath's own `euler` and `zeta(2, derivative=1)` never appear here; the
test suite uses them as independent references for exactly that reason.
"""

import functools
from dataclasses import dataclass

from mpmath import mp, mpf

from .arith import check_natural

WORKING_DPS = 40

_EM_STOP = 1e-30
_EM_SWITCH = 10**4
_GAMMA_M = 10**4
_THETA_M = 10**4

# Trusted significant digits claimed for Euler-Maclaurin results: the
# truncation cutoff leaves ~30 digits and WORKING_DPS = 40 gives margin.
_EM_DIGITS = 30


@dataclass(frozen=True)
class HighPrecisionReal:
    """An mpf value tagged with the number of trusted significant digits.

    Arithmetic runs at WORKING_DPS and reports the minimum of the two
    operands' precisions; plain ints, floats and mpf values count as exact.
    """

    value: mpf
    precision: int

    def _binop(self, other, op, swapped=False):
        if isinstance(other, HighPrecisionReal):
            other_value, other_prec = other.value, other.precision
        elif isinstance(other, (int, float, mpf)):
            other_value, other_prec = other, self.precision
        else:
            return NotImplemented
        a, b = (other_value, self.value) if swapped else (self.value, other_value)
        with mp.workdps(WORKING_DPS):
            return HighPrecisionReal(op(a, b), min(self.precision, other_prec))

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: a - b, swapped=True)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: a / b, swapped=True)

    def __neg__(self):
        return HighPrecisionReal(-self.value, self.precision)

    def __abs__(self):
        return HighPrecisionReal(abs(self.value), self.precision)

    def __float__(self):
        return float(self.value)

    def digits(self, n: int) -> str:
        """The value rendered to n significant digits."""
        return mp.nstr(self.value, n)


def zeta2() -> HighPrecisionReal:
    """zeta(2) = pi^2 / 6, from mpmath's pi at working precision."""
    with mp.workdps(WORKING_DPS):
        value = mp.pi**2 / 6
    return HighPrecisionReal(value, WORKING_DPS - 2)


@functools.cache
def euler_gamma(m: int = _GAMMA_M) -> HighPrecisionReal:
    """Euler-Mascheroni constant by Euler-Maclaurin at cutoff m.

    gamma = sum_{k<=m} 1/k - log m - 1/(2m) + sum_j B_{2j}/(2j * m^{2j}),
    Bernoulli corrections included until the first omitted term is below
    the 1e-30 cutoff (three terms at the default m = 10^4).
    """
    check_natural(m, "m")
    if m < 2:
        raise ValueError("gamma cutoff m must be >= 2")
    with mp.workdps(WORKING_DPS):
        value = mp.fsum(mpf(1) / k for k in range(1, m + 1))
        value -= mp.log(m) + mpf(1) / (2 * m)
        j, prev = 1, mp.inf
        while True:
            term = mp.bernoulli(2 * j) / (2 * j * mpf(m) ** (2 * j))
            if abs(term) < _EM_STOP or abs(term) >= prev:
                break
            value += term
            prev = abs(term)
            j += 1
    return HighPrecisionReal(value, _EM_DIGITS)


@functools.cache
def theta(m: int = _THETA_M) -> HighPrecisionReal:
    """sum_{d>=1} log(d)/d^2: direct head up to m plus Euler-Maclaurin tail."""
    check_natural(m, "m")
    if m < 2:
        raise ValueError("theta cutoff m must be >= 2")
    with mp.workdps(WORKING_DPS):
        head = mp.fsum(mp.log(d) / (d * d) for d in range(2, m + 1))
        value = head + log_tail(m).value
    return HighPrecisionReal(value, _EM_DIGITS)


def partial_zeta2(m: int) -> HighPrecisionReal:
    """sum_{d<=m} 1/d^2 by direct summation at working precision."""
    check_natural(m, "m")
    if m < 1:
        raise ValueError("partial_zeta2 needs m >= 1")
    with mp.workdps(WORKING_DPS):
        one = mpf(1)
        value = mp.fsum(one / (d * d) for d in range(1, m + 1))
    return HighPrecisionReal(value, _EM_DIGITS)


def log_tail(m: int) -> HighPrecisionReal:
    """sum_{d>m} log(d)/d^2.

    Sums directly up to max(m, 10^4), then applies Euler-Maclaurin with
    the exact derivative recurrence for f(x) = log(x)/x^2 (see the module
    docstring).  Leading behavior is (log m + 1)/m - log m/(2 m^2).
    """
    check_natural(m, "m")
    if m < 2:
        raise ValueError("log_tail needs m >= 2")
    with mp.workdps(WORKING_DPS):
        m0 = max(m, _EM_SWITCH)
        value = mpf(0)
        if m0 > m:
            value = mp.fsum(mp.log(d) / (d * d) for d in range(m + 1, m0 + 1))
        value += _log_tail_euler_maclaurin(m0)
    return HighPrecisionReal(value, _EM_DIGITS)


def _log_tail_euler_maclaurin(m: int) -> mpf:
    """Tail of log(d)/d^2 past m by Euler-Maclaurin; caller sets precision."""
    lg = mp.log(m)
    total = (lg + 1) / m - lg / (2 * mpf(m) ** 2)
    alpha, beta = 1, 0  # f^(k)(x) = (alpha*log x + beta) / x^(k+2), exact ints
    order = 0
    j, prev = 1, mp.inf
    while True:
        while order < 2 * j - 1:
            alpha, beta = -(order + 2) * alpha, alpha - (order + 2) * beta
            order += 1
        derivative = (alpha * lg + beta) / mpf(m) ** (order + 2)
        term = mp.bernoulli(2 * j) / mp.factorial(2 * j) * derivative
        if abs(term) < _EM_STOP or abs(term) >= prev:
            break
        total -= term
        prev = abs(term)
        j += 1
    return total


@dataclass(frozen=True)
class AsymptoticConstants:
    """The constant bundle (zeta2, gamma, theta, c1, c0) for the main term.

    c1 = zeta2 by construction; c0 = (2*gamma - 1)*zeta2 - 2*theta is
    recomputed and checked on construction.
    """

    zeta2: HighPrecisionReal
    gamma: HighPrecisionReal
    theta: HighPrecisionReal
    c1: HighPrecisionReal
    c0: HighPrecisionReal

    def __post_init__(self):
        for name in ("zeta2", "gamma", "theta", "c1", "c0"):
            field = getattr(self, name)
            if field.precision < 25:
                raise ValueError(f"{name} carries only {field.precision} digits")
        if self.c1.value != self.zeta2.value:
            raise ValueError("c1 must equal zeta2 exactly")
        rebuilt = (2 * self.gamma - 1) * self.zeta2 - 2 * self.theta
        with mp.workdps(WORKING_DPS):
            if abs(rebuilt.value - self.c0.value) > mpf(10) ** (-_EM_DIGITS):
                raise ValueError("c0 does not match (2*gamma - 1)*zeta2 - 2*theta")


@functools.cache
def default_constants() -> AsymptoticConstants:
    """Compute the bundle once and share it (immutable, thread-safe)."""
    z = zeta2()
    g = euler_gamma()
    t = theta()
    c0 = (2 * g - 1) * z - 2 * t
    return AsymptoticConstants(zeta2=z, gamma=g, theta=t, c1=z, c0=c0)
