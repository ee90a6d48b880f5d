"""Truncated formal power series over exact rationals.

Coefficients are `fractions.Fraction`; nothing here ever rounds.  A
series carries its truncation order explicitly, and every binary
operation truncates to the smaller participating order rather than
padding, so precision loss is always visible in the result's order.

The module also builds the closed forms of the truth-table count
series.  Writing s = sqrt(1-12x) and w = sqrt(5+24x+4s), the
three-valued counts are

    u: (1 - s)/6        f: (-2 - s + w)/6      t: (4 - s - w)/6
    g: (1 - s)/2   (total; g = 3u)

and with s2 = sqrt(1-8x), w2 = sqrt(2+2*s2+8x) the classical counts are

    s: (-1 - s2 + w2)/4     r: (3 - s2 - w2)/4     g2: (1 - s2)/2.

All count series must expand to nonnegative integers even though every
intermediate is a general rational; that is asserted at construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class ConsistencyError(Exception):
    """A count series expanded to something non-integral or negative.

    This signals a transcription bug in the closed forms, not bad input.
    """


def _rational_sqrt(q: Fraction) -> Fraction:
    """Exact nonnegative square root of a rational, or ValueError."""
    if q < 0:
        raise ValueError(f"cannot take the square root of {q}")
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"{q} is not the square of a rational")
    return Fraction(rn, rd)


class PowerSeries:
    """A series c0 + c1*x + ... + cN*x**N with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls([value] + [0] * order)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The multiplicative identity: 1 + 0x + 0x^2 + ..."""
        return cls.constant(1, order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls.constant(0, order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        if order < 1:
            raise ValueError("order must be at least 1 to hold an x term")
        return cls([0, 1] + [0] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        """The coefficient of x**n; IndexError beyond the truncation order."""
        if not 0 <= n <= self.order:
            raise IndexError(
                f"coefficient {n} requested but only orders 0..{self.order} are tracked"
            )
        return self.coeffs[n]

    def truncate(self, order: int) -> "PowerSeries":
        if not 0 <= order <= self.order:
            raise IndexError(
                f"cannot truncate to order {order}; tracked orders are 0..{self.order}"
            )
        return PowerSeries(self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-c for c in self.coeffs)

    def scale(self, factor: Scalar) -> "PowerSeries":
        """Multiply every coefficient by a scalar; the order is preserved."""
        f = Fraction(factor)
        return PowerSeries(f * c for c in self.coeffs)

    def __rmul__(self, factor: Scalar) -> "PowerSeries":
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    def __truediv__(self, divisor: Scalar) -> "PowerSeries":
        if isinstance(divisor, (int, Fraction)):
            return self.scale(Fraction(1, 1) / Fraction(divisor))
        return NotImplemented

    def shift(self) -> "PowerSeries":
        """Multiply by x: prepend a zero, keep the order (top term drops)."""
        return PowerSeries((Fraction(0),) + self.coeffs[:-1])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for m in range(n + 1):
            out.append(sum(a[k] * b[m - k] for k in range(m + 1)))
        return PowerSeries(out)

    def __pow__(self, exponent: int) -> "PowerSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers are defined for nonnegative integers")
        result = PowerSeries.identity(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def sqrt(self) -> "PowerSeries":
        """The series y with y*y == self up to the truncation order.

        Needs a constant term that is the square of a nonzero rational;
        y's constant term is the nonnegative root, and for n >= 1

            y_n = (a_n - sum_{k=1}^{n-1} y_k y_{n-k}) / (2 y_0).
        """
        a = self.coeffs
        y0 = _rational_sqrt(a[0])
        if y0 == 0:
            raise ValueError("series sqrt needs a nonzero constant term")
        ys = [y0]
        for n in range(1, self.order + 1):
            acc = a[n] - sum(ys[k] * ys[n - k] for k in range(1, n))
            ys.append(acc / (2 * y0))
        return PowerSeries(ys)

    def integer_coefficients(self) -> tuple[int, ...]:
        """Coefficients as plain ints; ConsistencyError if any is not one."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ConsistencyError(f"coefficient of x^{n} is non-integral: {c}")
            out.append(c.numerator)
        return tuple(out)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"PowerSeries([{shown}{tail}], order={self.order})"


# --- closed forms of the count series ---------------------------------------

SERIES_NAMES = ("t", "f", "u", "g", "r", "s", "g2", "i")

KLEENE_SERIES = ("t", "f", "u", "g")
CLASSICAL_SERIES = ("r", "s", "g2")

_DESCRIPTIONS = {
    "t": "true entries, three-valued",
    "f": "false entries, three-valued",
    "u": "unknown entries, three-valued",
    "g": "all entries, three-valued",
    "r": "true entries, classical",
    "s": "false entries, classical",
    "g2": "all entries, classical",
    "i": "multiplicative identity",
}


def _kleene_radicals(order: int) -> tuple[PowerSeries, PowerSeries]:
    one = PowerSeries.identity(order)
    x = PowerSeries.x(order)
    s = (one - 12 * x).sqrt()
    w = (5 * one + 24 * x + 4 * s).sqrt()
    return s, w


def _classical_radicals(order: int) -> tuple[PowerSeries, PowerSeries]:
    one = PowerSeries.identity(order)
    x = PowerSeries.x(order)
    s2 = (one - 8 * x).sqrt()
    w2 = (2 * one + 2 * s2 + 8 * x).sqrt()
    return s2, w2


def closed_form(name: str, order: int) -> PowerSeries:
    """Expand a named count series exactly to the given order.

    Names: t, f, u, g (three-valued), r, s, g2 (classical), i (identity).
    Count series are checked to have integer coefficients, no constant
    term, and no negative entries; a violation raises ConsistencyError.
    """
    key = name.lower()
    if key not in SERIES_NAMES:
        raise ValueError(f"unknown series {name!r}; choose from {', '.join(SERIES_NAMES)}")
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    one = PowerSeries.identity(order)
    if key == "i":
        return one
    if key in KLEENE_SERIES:
        s, w = _kleene_radicals(order)
        if key == "u":
            series = (one - s) / 6
        elif key == "f":
            series = (-2 * one - s + w) / 6
        elif key == "t":
            series = (4 * one - s - w) / 6
        else:  # g
            series = (one - s) / 2
    else:
        s2, w2 = _classical_radicals(order)
        if key == "s":
            series = (-1 * one - s2 + w2) / 4
        elif key == "r":
            series = (3 * one - s2 - w2) / 4
        else:  # g2
            series = (one - s2) / 2
    _assert_count_series(series, key)
    return series


def _assert_count_series(series: PowerSeries, name: str) -> None:
    if series.coeffs[0] != 0:
        raise ConsistencyError(
            f"count series {name!r} has constant term {series.coeffs[0]}, expected 0"
        )
    for n, c in enumerate(series.coeffs):
        if c.denominator != 1 or c < 0:
            raise ConsistencyError(
                f"count series {name!r} has coefficient {c} at x^{n}; "
                f"counts must be nonnegative integers"
            )


def series_description(name: str) -> str:
    return _DESCRIPTIONS[name.lower()]
