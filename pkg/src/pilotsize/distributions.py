"""Special functions and distribution quantiles used by every design formula.

Self-contained layer: densities, CDFs and inverse CDFs for the normal,
chi-square, Student-t and Snedecor-F distributions, built on the regularized
incomplete gamma and beta functions.  Incomplete gamma uses a power series for
x < a+1 and a continued fraction otherwise; incomplete beta uses a continued
fraction with the symmetry switch at x > (a+1)/(a+b+2).  Quantiles are found
by safeguarded Newton iteration inside a guaranteed bracket.

All functions are pure and accept real-valued degrees of freedom.
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "ln_gamma",
    "reg_inc_gamma_P",
    "reg_inc_beta",
    "normal_cdf",
    "normal_quantile",
    "chi2_cdf",
    "chi2_quantile",
    "t_cdf",
    "t_quantile",
    "f_cdf",
    "f_quantile",
]

_EPS = 1e-15
_TINY = 1e-300
_MAX_ITER = 10_000


def _check_prob(p: float, name: str = "p") -> None:
    if not 0.0 < p < 1.0:
        raise ValueError(f"{name} must be in the open interval (0, 1), got {p}")


def _check_df(df: float, name: str = "df") -> None:
    if not df > 0.0:
        raise ValueError(f"{name} must be positive, got {df}")


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0."""
    if not x > 0.0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


# ---------------------------------------------------------------------------
# Regularized incomplete gamma
# ---------------------------------------------------------------------------

def _inc_gamma_series(a: float, x: float) -> float:
    """P(a, x) by power series; converges well for x < a + 1."""
    term = 1.0 / a
    total = term
    n = a
    for _ in range(_MAX_ITER):
        n += 1.0
        term *= x / n
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    else:
        raise ArithmeticError(f"incomplete gamma series failed for a={a}, x={x}")
    return total * math.exp(-x + a * math.log(x) - ln_gamma(a))


def _inc_gamma_cf(a: float, x: float) -> float:
    """Q(a, x) by modified Lentz continued fraction; for x >= a + 1."""
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    else:
        raise ArithmeticError(f"incomplete gamma fraction failed for a={a}, x={x}")
    return h * math.exp(-x + a * math.log(x) - ln_gamma(a))


def reg_inc_gamma_P(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a)."""
    if not a > 0.0:
        raise ValueError(f"reg_inc_gamma_P requires a > 0, got {a}")
    if x < 0.0:
        raise ValueError(f"reg_inc_gamma_P requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        return _inc_gamma_series(a, x)
    return 1.0 - _inc_gamma_cf(a, x)


def _reg_inc_gamma_Q(a: float, x: float) -> float:
    """Upper tail Q(a, x) = 1 - P(a, x), computed without cancellation."""
    if x == 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _inc_gamma_series(a, x)
    return _inc_gamma_cf(a, x)


# ---------------------------------------------------------------------------
# Regularized incomplete beta
# ---------------------------------------------------------------------------

def _beta_cf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_ITER):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h
    raise ArithmeticError(f"incomplete beta fraction failed for a={a}, b={b}, x={x}")


def _ln_beta(a: float, b: float) -> float:
    return ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)


def reg_inc_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b) for a, b > 0 and 0 <= x <= 1."""
    if not (a > 0.0 and b > 0.0):
        raise ValueError(f"reg_inc_beta requires a, b > 0, got a={a}, b={b}")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"reg_inc_beta requires 0 <= x <= 1, got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    front = math.exp(a * math.log(x) + b * math.log1p(-x) - _ln_beta(a, b))
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def _ln_beta_pdf(a: float, b: float, x: float) -> float:
    return (a - 1.0) * math.log(x) + (b - 1.0) * math.log1p(-x) - _ln_beta(a, b)


@lru_cache(maxsize=65536)
def _inc_beta_inv(p: float, a: float, b: float) -> float:
    """Solve I_x(a, b) = p for x; safeguarded Newton in logit space."""
    if p <= 0.0:
        return 0.0
    if p >= 1.0:
        return 1.0
    if p > 0.5:
        # invert the better-conditioned complementary problem
        return 1.0 - _inc_beta_inv(1.0 - p, b, a)

    # Initial guess: deep-left asymptote I_x ~ x^a / (a B(a,b)) when it lands
    # well below the mean, otherwise the mean itself.
    mean = a / (a + b)
    ln_x0 = (math.log(p) + math.log(a) + _ln_beta(a, b)) / a
    if ln_x0 < math.log(mean) - 0.7:
        x = math.exp(ln_x0)
    else:
        x = mean
    x_max = math.nextafter(1.0, 0.0)
    x = min(max(x, 1e-280), x_max)

    t = math.log(x / (1.0 - x))
    t_lo, t_hi = -700.0, 40.0  # I(sigmoid(t)) - p changes sign inside
    for _ in range(300):
        x = min(1.0 / (1.0 + math.exp(-t)), x_max)
        err = reg_inc_beta(a, b, x) - p
        if err > 0.0:
            t_hi = min(t_hi, t)
        else:
            t_lo = max(t_lo, t)
        if abs(err) < 1e-13:
            break
        dpdt = math.exp(_ln_beta_pdf(a, b, x)) * x * (1.0 - x)
        if dpdt > 0.0:
            t_new = t - err / dpdt
        else:
            t_new = math.nan
        if not (t_lo < t_new < t_hi):
            t_new = 0.5 * (t_lo + t_hi)
        if t_new == t:
            break
        t = t_new
    else:
        raise ArithmeticError(f"beta inversion failed for p={p}, a={a}, b={b}")
    return min(1.0 / (1.0 + math.exp(-t)), x_max)


# ---------------------------------------------------------------------------
# Normal
# ---------------------------------------------------------------------------

_SQRT2 = math.sqrt(2.0)

# Acklam's rational approximation to the normal quantile (initial guess only;
# refined below to full precision against erfc).
_ACK_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
          1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_ACK_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
          6.680131188771972e+01, -1.328068155288572e+01)
_ACK_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
          -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_ACK_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
          3.754408661907416e+00)


def normal_cdf(x: float) -> float:
    """Standard normal CDF."""
    return 0.5 * math.erfc(-x / _SQRT2)


def _normal_pdf(x: float) -> float:
    return math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)


def _acklam_guess(p: float) -> float:
    p_low, p_high = 0.02425, 1.0 - 0.02425
    if p < p_low:
        q = math.sqrt(-2.0 * math.log(p))
        return (((((_ACK_C[0] * q + _ACK_C[1]) * q + _ACK_C[2]) * q + _ACK_C[3]) * q + _ACK_C[4]) * q + _ACK_C[5]) / \
               ((((_ACK_D[0] * q + _ACK_D[1]) * q + _ACK_D[2]) * q + _ACK_D[3]) * q + 1.0)
    if p > p_high:
        return -_acklam_guess(1.0 - p)
    q = p - 0.5
    r = q * q
    return (((((_ACK_A[0] * r + _ACK_A[1]) * r + _ACK_A[2]) * r + _ACK_A[3]) * r + _ACK_A[4]) * r + _ACK_A[5]) * q / \
           (((((_ACK_B[0] * r + _ACK_B[1]) * r + _ACK_B[2]) * r + _ACK_B[3]) * r + _ACK_B[4]) * r + 1.0)


@lru_cache(maxsize=4096)
def normal_quantile(p: float) -> float:
    """Standard normal quantile (inverse CDF)."""
    _check_prob(p)
    if p == 0.5:
        return 0.0
    x = _acklam_guess(p)
    # Halley refinement on the erfc-based CDF; 2 steps reach ~1e-16.
    for _ in range(3):
        err = normal_cdf(x) - p
        pdf = _normal_pdf(x)
        if pdf == 0.0:
            break
        u = err / pdf
        step = u / (1.0 + 0.5 * x * u)
        x -= step
        if abs(step) < 1e-14 * max(1.0, abs(x)):
            break
    return x


# ---------------------------------------------------------------------------
# Chi-square
# ---------------------------------------------------------------------------

def chi2_cdf(x: float, df: float) -> float:
    """Chi-square CDF with real-valued df > 0."""
    _check_df(df)
    if x < 0.0:
        raise ValueError(f"chi2_cdf requires x >= 0, got {x}")
    return reg_inc_gamma_P(df / 2.0, x / 2.0)


def _chi2_pdf(x: float, df: float) -> float:
    if x <= 0.0:
        return 0.0
    a = df / 2.0
    return math.exp((a - 1.0) * math.log(x) - x / 2.0 - a * math.log(2.0) - ln_gamma(a))


@lru_cache(maxsize=65536)
def chi2_quantile(p: float, df: float) -> float:
    """Chi-square quantile: x with chi2_cdf(x, df) = p."""
    _check_prob(p)
    _check_df(df)
    # Wilson-Hilferty starting point, clamped positive.
    z = normal_quantile(p)
    c = 2.0 / (9.0 * df)
    x = df * (1.0 - c + z * math.sqrt(c)) ** 3
    if x <= 0.0:
        # deep lower tail: chi2 cdf ~ (x/2)^(df/2) / Gamma(df/2 + 1)
        x = 2.0 * math.exp((math.log(p) + ln_gamma(df / 2.0 + 1.0)) * 2.0 / df)
    lo, hi = 0.0, math.inf
    for _ in range(200):
        err = chi2_cdf(x, df) - p
        if err > 0.0:
            hi = min(hi, x)
        else:
            lo = max(lo, x)
        if abs(err) < 1e-13:
            break
        pdf = _chi2_pdf(x, df)
        x_new = x - err / pdf if pdf > 0.0 else math.nan
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi) if math.isfinite(hi) else 2.0 * max(x, 1.0)
        if x_new == x:
            break
        x = x_new
    else:
        raise ArithmeticError(f"chi-square inversion failed for p={p}, df={df}")
    return x


# ---------------------------------------------------------------------------
# Student t
# ---------------------------------------------------------------------------

def t_cdf(t: float, df: float) -> float:
    """Student-t CDF with real-valued df > 0."""
    _check_df(df)
    if t == 0.0:
        return 0.5
    x = df / (df + t * t)
    tail = 0.5 * reg_inc_beta(df / 2.0, 0.5, x)
    return 1.0 - tail if t > 0.0 else tail


@lru_cache(maxsize=65536)
def t_quantile(p: float, df: float) -> float:
    """Student-t quantile; odd symmetry about p = 1/2."""
    _check_prob(p)
    _check_df(df)
    if p == 0.5:
        return 0.0
    if p < 0.5:
        return -t_quantile(1.0 - p, df)
    x = _inc_beta_inv(2.0 * (1.0 - p), df / 2.0, 0.5)
    if x <= 0.0:
        raise ArithmeticError(f"t inversion failed for p={p}, df={df}")
    return math.sqrt(df * (1.0 - x) / x)


# ---------------------------------------------------------------------------
# Snedecor F
# ---------------------------------------------------------------------------

def f_cdf(f: float, d1: float, d2: float) -> float:
    """F CDF with real-valued degrees of freedom."""
    _check_df(d1, "d1")
    _check_df(d2, "d2")
    if f < 0.0:
        raise ValueError(f"f_cdf requires f >= 0, got {f}")
    if f == 0.0:
        return 0.0
    x = d1 * f / (d1 * f + d2)
    return reg_inc_beta(d1 / 2.0, d2 / 2.0, x)


@lru_cache(maxsize=65536)
def f_quantile(p: float, d1: float, d2: float) -> float:
    """F quantile via the inverse incomplete beta."""
    _check_prob(p)
    _check_df(d1, "d1")
    _check_df(d2, "d2")
    x = _inc_beta_inv(p, d1 / 2.0, d2 / 2.0)
    if x >= 1.0:
        raise ArithmeticError(f"F inversion overflow for p={p}, d1={d1}, d2={d2}")
    return (d2 / d1) * x / (1.0 - x)
