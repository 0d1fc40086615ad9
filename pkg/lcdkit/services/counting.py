"""Exact counting formulas for LCD codes
Group orders, Gaussian binomials, orbit sizes and their asymptotic limits
"""

import logging
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import NamedTuple

from ..core.config import settings
from ..core.errors import FieldCharacteristicError, FormulaError, PreconditionError
from ..core.field import GF
from ..models.code import LcdType
from ..models.schemas import AsymptoticReport, format_fraction

logger = logging.getLogger(__name__)


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise FormulaError(
            f"{what}: {numerator} is not divisible by {denominator}",
            {"numerator": numerator, "denominator": denominator},
        )
    return quotient


def _half(value: int, what: str) -> int:
    return _exact_div(value, 2, what)


def _check_range(n: int, k: int) -> None:
    if not 0 < k < n:
        raise PreconditionError(f"counting needs 0 < k < n, got n={n}, k={k}", {"n": n, "k": k})


def _odd_prime(q: int):
    f = GF(q)
    if f.is_binary:
        raise FieldCharacteristicError("odd-characteristic formula called with q = 2", {"q": q})
    return f


def _eta_minus_one_power(q: int, m: int) -> int:
    """η((-1)^m) through the Legendre symbol of the reduced residue"""
    f = _odd_prime(q)
    return f.legendre((-1) ** m % q)


# ----------------------------------------------------------------------
# Gaussian binomials and group orders
# ----------------------------------------------------------------------
def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over GF(q)"""
    if k < 0 or k > n:
        raise PreconditionError(f"gaussian binomial needs 0 <= k <= n, got n={n}, k={k}")
    if q < 2:
        raise PreconditionError(f"gaussian binomial needs q >= 2, got {q}")
    k = min(k, n - k)
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return _exact_div(numerator, denominator, "gaussian binomial")


def order_orthogonal_gf2(k: int) -> int:
    """|O_k| over GF(2)"""
    if k < 1:
        raise PreconditionError(f"orthogonal group order needs k >= 1, got {k}")
    m = k // 2 - 1 if k % 2 == 0 else (k - 1) // 2
    power = k * k // 4 if k % 2 == 0 else (k - 1) ** 2 // 4
    order = 2**power
    for i in range(1, m + 1):
        order *= 2 ** (2 * i) - 1
    return order


def order_symplectic_gf2(k: int) -> int:
    """|Sp_k| over GF(2) for even k"""
    if k < 2 or k % 2:
        raise PreconditionError(f"symplectic group order needs even k >= 2, got {k}")
    order = 2 ** (k * k // 4)
    for i in range(1, k // 2 + 1):
        order *= 2 ** (2 * i) - 1
    return order


def order_orthogonal_q(n: int, delta_class: int, q: int) -> int:
    """|O_n^δ(q)| for the form diag(1, ..., 1, δ) with η(δ) = delta_class"""
    f = _odd_prime(q)
    if n < 1:
        raise PreconditionError(f"orthogonal group order needs n >= 1, got {n}")
    if delta_class not in (1, -1):
        raise PreconditionError(f"delta_class must be +1 or -1, got {delta_class}")
    if n % 2:
        order = 2 * q ** ((n - 1) ** 2 // 4)
        for i in range(1, (n - 1) // 2 + 1):
            order *= q ** (2 * i) - 1
        return order
    half = n // 2
    # η((-1)^{n/2} δ) = η((-1)^{n/2}) η(δ)
    eta = f.legendre((-1) ** half % q) * delta_class
    order = 2 * q ** (n * (n - 2) // 4) * (q**half - eta)
    for i in range(1, half):
        order *= q ** (2 * i) - 1
    return order


# ----------------------------------------------------------------------
# Binary LCD counts
# ----------------------------------------------------------------------
def count_lcd_binary(n: int, k: int, type_filter: LcdType | None = None) -> int:
    """|LCD[n, k]| over GF(2), or the size of one type class"""
    _check_range(n, k)
    if type_filter is None:
        return _count_binary_total(n, k)
    if not type_filter.is_binary:
        raise FieldCharacteristicError(f"type {type_filter.value} is not a binary LCD type")
    if type_filter == LcdType.OO:
        return _count_binary_oo(n, k)
    if type_filter == LcdType.OE:
        return _count_binary_oe(n, k)
    return _count_binary_eo(n, k)


def _count_binary_oo(n: int, k: int) -> int:
    g = gaussian_binomial
    if k % 2 and n % 2 == 0:
        return 2 ** _half(n * k - k * k + n - 1, "OO exponent") * g(n // 2 - 1, (k - 1) // 2, 4)
    if k % 2:
        return (
            2 ** _half((n - k) * (k - 1), "OO exponent")
            * (2 ** (n - k) - 1)
            * g((n - 1) // 2, (k - 1) // 2, 4)
        )
    if n % 2:
        return 2 ** _half(k * (n - k - 1), "OO exponent") * (2**k - 1) * g((n - 1) // 2, k // 2, 4)
    return 2 ** _half(k * (n - k), "OO exponent") * (2**k - 1) * g(n // 2 - 1, k // 2, 4)


def _count_binary_oe(n: int, k: int) -> int:
    if (n - k) % 2:
        return 0
    if k % 2:
        return 2 ** _half((k - 1) * (n - k), "OE exponent") * gaussian_binomial(
            (n - 1) // 2, (k - 1) // 2, 4
        )
    return 2 ** _half(k * (n - k), "OE exponent") * gaussian_binomial(n // 2 - 1, k // 2 - 1, 4)


def _count_binary_eo(n: int, k: int) -> int:
    if k % 2:
        return 0
    if n % 2:
        return 2 ** _half(k * (n - k - 1), "EO exponent") * gaussian_binomial(
            (n - 1) // 2, k // 2, 4
        )
    return 2 ** _half(k * (n - k), "EO exponent") * gaussian_binomial(n // 2 - 1, k // 2, 4)


def count_lcd_odd_even(n: int, k: int, parity: str) -> int:
    """Binary LCD codes that are odd-like ("odd") or even-like ("even")"""
    _check_range(n, k)
    g = gaussian_binomial
    if parity == "even":
        return _count_binary_eo(n, k)
    if parity != "odd":
        raise PreconditionError(f"parity must be 'odd' or 'even', got {parity!r}")
    if k % 2 and n % 2 == 0:
        return 2 ** _half(n * k - k * k + n - 1, "odd-like exponent") * g(n // 2 - 1, (k - 1) // 2, 4)
    if k % 2:
        return 2 ** _half((n - k) * (k + 1), "odd-like exponent") * g((n - 1) // 2, (k - 1) // 2, 4)
    if n % 2:
        return (
            2 ** _half(k * (n - k - 1), "odd-like exponent") * (2**k - 1) * g((n - 1) // 2, k // 2, 4)
        )
    return 2 ** _half((k + 2) * (n - k), "odd-like exponent") * g(n // 2 - 1, k // 2 - 1, 4)


def _count_binary_total(n: int, k: int) -> int:
    g = gaussian_binomial
    if k % 2 and n % 2 == 0:
        return 2 ** _half(n * k - k * k + n - 1, "LCD exponent") * g(n // 2 - 1, (k - 1) // 2, 4)
    if k % 2:
        return 2 ** _half((n - k) * (k + 1), "LCD exponent") * g((n - 1) // 2, (k - 1) // 2, 4)
    if n % 2:
        return 2 ** _half(k * (n - k + 1), "LCD exponent") * g((n - 1) // 2, k // 2, 4)
    return 2 ** _half(k * (n - k), "LCD exponent") * (
        2 ** (n - k) * g(n // 2 - 1, k // 2 - 1, 4) + g(n // 2 - 1, k // 2, 4)
    )


# ----------------------------------------------------------------------
# Odd-characteristic LCD counts
# ----------------------------------------------------------------------
def count_lcd_q(n: int, k: int, q: int, sign_filter: LcdType | None = None) -> int:
    """|LCD[n, k]_q| for an odd prime q, or the size of the Plus / Minus class"""
    _check_range(n, k)
    _odd_prime(q)
    if sign_filter is None:
        return _count_q_total(n, k, q)
    if sign_filter not in LcdType.odd_types():
        raise FieldCharacteristicError(f"type {sign_filter.value} is not an odd-characteristic type")
    return _count_q_signed(n, k, q, 1 if sign_filter == LcdType.PLUS else -1)


def _count_q_signed(n: int, k: int, q: int, sign: int) -> int:
    g = gaussian_binomial
    q2 = q * q
    eta = lambda m: _eta_minus_one_power(q, m)  # noqa: E731
    if k % 2 and n % 2 == 0:
        value = (
            q ** _half(k * (n - k) - 1, "signed exponent")
            * (q ** (n // 2) - eta(n // 2))
            * g(n // 2 - 1, (k - 1) // 2, q2)
        )
    elif k % 2:
        m = (n - k) // 2
        value = q ** _half(k * (n - k), "signed exponent") * (q**m + sign * eta(m)) * g(
            (n - 1) // 2, (k - 1) // 2, q2
        )
    elif n % 2:
        m = k // 2
        value = q ** _half(k * (n - k), "signed exponent") * (q**m + sign * eta(m)) * g(
            (n - 1) // 2, k // 2, q2
        )
    else:
        a, b = k // 2, (n - k) // 2
        numerator = (
            q ** _half(k * (n - k), "signed exponent")
            * (q**a + sign * eta(a))
            * (q**b + sign * eta(b))
            * g(n // 2, k // 2, q2)
        )
        value = _exact_div(numerator, q ** (n // 2) + eta(n // 2), "signed count denominator")
    return _half(value, "signed count")


def _count_q_total(n: int, k: int, q: int) -> int:
    g = gaussian_binomial
    q2 = q * q
    if k % 2 and n % 2 == 0:
        return (
            q ** _half(k * (n - k) - 1, "LCD exponent")
            * (q ** (n // 2) - _eta_minus_one_power(q, n // 2))
            * g(n // 2 - 1, (k - 1) // 2, q2)
        )
    if k % 2:
        return q ** _half((k + 1) * (n - k), "LCD exponent") * g((n - 1) // 2, (k - 1) // 2, q2)
    if n % 2:
        return q ** _half(k * (n - k + 1), "LCD exponent") * g((n - 1) // 2, k // 2, q2)
    return q ** _half(k * (n - k), "LCD exponent") * g(n // 2, k // 2, q2)


# ----------------------------------------------------------------------
# Orbit-stabilizer values
# ----------------------------------------------------------------------
def stabilizer_order(t: LcdType, n: int, k: int, q: int = 2) -> int:
    """|St(C)| for the canonical code of type t"""
    _check_range(n, k)
    if t == LcdType.OO:
        return order_orthogonal_gf2(k) * order_orthogonal_gf2(n - k)
    if t == LcdType.OE:
        if (n - k) % 2:
            raise PreconditionError(f"LCD_OE[{n},{k}] is empty")
        return order_orthogonal_gf2(k) * order_symplectic_gf2(n - k)
    if t == LcdType.EO:
        if k % 2:
            raise PreconditionError(f"LCD_EO[{n},{k}] is empty")
        return order_symplectic_gf2(k) * order_orthogonal_gf2(n - k)
    delta_class = 1 if t == LcdType.PLUS else -1
    return order_orthogonal_q(k, delta_class, q) * order_orthogonal_q(n - k, delta_class, q)


def orbit_size_binary(n: int, k: int, t: LcdType) -> int:
    """|O_n| / |St(C_t)|; zero for empty type classes"""
    _check_range(n, k)
    if (t == LcdType.OE and (n - k) % 2) or (t == LcdType.EO and k % 2):
        return 0
    return _exact_div(order_orthogonal_gf2(n), stabilizer_order(t, n, k), "binary orbit size")


def orbit_size_q(n: int, k: int, q: int, sign: LcdType) -> int:
    """|O_n(q)| / |St(C_±)|"""
    _check_range(n, k)
    return _exact_div(order_orthogonal_q(n, 1, q), stabilizer_order(sign, n, k, q), "orbit size")


# ----------------------------------------------------------------------
# Asymptotics
# ----------------------------------------------------------------------
BINARY_SELECTORS = ("lcd", "oo", "oe", "eo", "oo_power")
ODD_SELECTORS = ("lcd", "lcd_q", "plus", "minus")


def g_partial(q: int, m: int) -> Fraction:
    """g_{q,m} = ∏_{i=1..m} (1 - q^{-i}) as an exact rational"""
    if q < 2 or m < 0:
        raise PreconditionError(f"g_partial needs q >= 2 and m >= 0, got q={q}, m={m}")
    value = Fraction(1)
    for i in range(1, m + 1):
        value *= 1 - Fraction(1, q**i)
    return value


class LimitConstant(NamedTuple):
    estimate: Decimal
    bound: Decimal
    g_product: Fraction
    limit_product: Fraction
    factors: int


def limit_constant(q: int, which: str, precision: int) -> LimitConstant:
    """Limit constant of a selector with its truncation bound and exact partial products

    Most selectors converge to 1/∏(1 + q^{-i}) = g_{q,∞}/g_{q²,∞} (halved for
    plus/minus); oo_power converges to 1/g_{4,∞}.  limit_product is the
    truncated product the estimate inverts; g_product is g_{q,m} itself.
    Factors are added until the tail bound drops below 10^-(precision + 2).
    """
    target = Decimal(10) ** -(precision + 2)
    with localcontext() as ctx:
        ctx.prec = precision + 20
        m = 0
        while True:
            m += 1
            g = g_partial(q, m)
            if which == "oo_power":
                product = g_partial(4, m)
                # ∏_{i>m}(1 - y^i) >= 1 - y^{m+1}/(1 - y), y = 1/4
                s = Decimal(1) / Decimal(4) ** (m + 1) / (1 - Decimal(1) / 4)
                estimate = Decimal(product.denominator) / Decimal(product.numerator)
                bound = estimate * s / (1 - s)
            else:
                product = g_partial(q * q, m) / g
                x = Decimal(1) / q
                # ∏_{i>m}(1 + x^i) <= exp(x^{m+1}/(1 - x))
                t = (x ** (m + 1) / (1 - x)).exp() - 1
                estimate = Decimal(product.denominator) / Decimal(product.numerator)
                if which in ("plus", "minus"):
                    estimate /= 2
                bound = estimate * t
            if bound < target:
                break
        logger.debug("limit constant for %s, q=%d converged after %d factors", which, q, m)
        return LimitConstant(+estimate, +bound, g, product, m)


def _finite_ratio(n: int, k: int, q: int, which: str) -> Fraction:
    if q == 2:
        if which not in BINARY_SELECTORS:
            raise PreconditionError(f"selector {which!r} needs odd q; binary selectors: {BINARY_SELECTORS}")
        subspaces = gaussian_binomial(n, k, 2)
        if which == "lcd":
            return Fraction(count_lcd_binary(n, k), subspaces)
        if which == "oo":
            return Fraction(count_lcd_binary(n, k, LcdType.OO), subspaces)
        if which == "oe":
            if (n - k) % 2:
                raise PreconditionError("selector 'oe' needs n - k even")
            return Fraction(2 ** (n - k) * count_lcd_binary(n, k, LcdType.OE), subspaces)
        if which == "eo":
            if k % 2:
                raise PreconditionError("selector 'eo' needs k even")
            return Fraction(2**k * count_lcd_binary(n, k, LcdType.EO), subspaces)
        return Fraction(count_lcd_binary(n, k, LcdType.OO), 2 ** (k * (n - k)))
    if which not in ODD_SELECTORS:
        raise PreconditionError(f"selector {which!r} needs q = 2; odd-q selectors: {ODD_SELECTORS}")
    subspaces = gaussian_binomial(n, k, q)
    if which in ("lcd", "lcd_q"):
        return Fraction(count_lcd_q(n, k, q), subspaces)
    sign = LcdType.PLUS if which == "plus" else LcdType.MINUS
    return Fraction(count_lcd_q(n, k, q, sign), subspaces)


def asymptotic_ratio(
    n: int, k: int, q: int = 2, which: str = "lcd", precision: int | None = None
) -> AsymptoticReport:
    """Evaluate a finite counting ratio exactly and compare it with its limit constant"""
    _check_range(n, k)
    GF(q)
    precision = precision or settings.precision
    ratio = _finite_ratio(n, k, q, which)
    limit = limit_constant(q, which, precision)
    estimate = limit.estimate
    quantum = Decimal(10) ** -precision
    with localcontext() as ctx:
        ctx.prec = precision + 20
        ratio_decimal = Decimal(ratio.numerator) / Decimal(ratio.denominator)
        distance = abs(ratio_decimal - estimate)
        return AsymptoticReport(
            q=q,
            n=n,
            k=k,
            which=which,
            ratio=format_fraction(ratio),
            ratio_decimal=str(ratio_decimal.quantize(quantum)),
            partial_product=format_fraction(limit.g_product),
            limit_product=format_fraction(limit.limit_product),
            factors=limit.factors,
            limit_estimate=str(estimate.quantize(quantum)),
            tail_bound=f"{limit.bound:.3E}",
            precision=precision,
            distance=str(distance.quantize(quantum)),
        )
