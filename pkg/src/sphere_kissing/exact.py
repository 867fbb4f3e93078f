"""Exact lengths: rational combinations of sqrt(d) * pi**p.

Every length in the model is a finite sum ``c * sqrt(d) * pi**p`` with ``c``
rational, ``d`` a square-free positive integer and ``p`` an integer (in
practice -2..1).  Because pi is transcendental over the algebraic numbers and
square roots of distinct square-free integers are linearly independent over
the rationals, two normalized representations are equal exactly when the real
numbers are equal.  Ordering is decided by rigorous interval evaluation with
rational endpoints, refined until the intervals separate.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

from mpmath import libmp

__all__ = [
    "ExactLength",
    "PrecisionExhausted",
    "compare",
    "squarefree_split",
]

START_PREC = 64
MAX_PREC = 4096

Number = Union[int, Fraction]
Key = tuple[int, int]  # (square-free radicand, power of pi)


class PrecisionExhausted(RuntimeError):
    """Interval evaluation failed to separate two distinct values."""


@lru_cache(maxsize=4096)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, d)`` with ``n == k*k*d`` and ``d`` square-free."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    k, d = 1, 1
    rest = n
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    d *= rest
    return k, d


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact coefficient required, got {type(x).__name__}")


@dataclass(frozen=True)
class ExactLength:
    """Normalized sum of ``c * sqrt(d) * pi**p`` terms.

    ``terms`` is a tuple of ``((d, p), c)`` sorted by key with all ``c != 0``;
    construct through the classmethods rather than directly.
    """

    terms: tuple[tuple[Key, Fraction], ...] = ()

    # -- construction -----------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Mapping[Key, Number] | Iterable[tuple[Key, Number]]) -> ExactLength:
        acc: dict[Key, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (d, p), c in items:
            c = _frac(c)
            if c == 0:
                continue
            if d <= 0:
                raise ValueError(f"radicand must be positive, got {d}")
            k, d0 = squarefree_split(d)
            key = (d0, int(p))
            acc[key] = acc.get(key, Fraction(0)) + c * k
        return cls(tuple(sorted((k, c) for k, c in acc.items() if c != 0)))

    @classmethod
    def zero(cls) -> ExactLength:
        return cls()

    @classmethod
    def rational(cls, q: Number) -> ExactLength:
        return cls.from_terms({(1, 0): q})

    @classmethod
    def sqrt(cls, q: Number) -> ExactLength:
        """sqrt of a non-negative rational."""
        q = _frac(q)
        if q < 0:
            raise ValueError("square root of a negative number")
        if q == 0:
            return cls()
        # sqrt(a/b) = sqrt(a*b)/b
        return cls.from_terms({(q.numerator * q.denominator, 0): Fraction(1, q.denominator)})

    @classmethod
    def pi(cls, q: Number = 1) -> ExactLength:
        return cls.from_terms({(1, 1): q})

    @classmethod
    def coerce(cls, x) -> ExactLength:
        if isinstance(x, ExactLength):
            return x
        return cls.rational(_frac(x))

    # -- ring operations --------------------------------------------------

    def as_dict(self) -> dict[Key, Fraction]:
        return dict(self.terms)

    def __add__(self, other) -> ExactLength:
        try:
            other = ExactLength.coerce(other)
        except TypeError:
            return NotImplemented
        acc = self.as_dict()
        for k, c in other.terms:
            acc[k] = acc.get(k, Fraction(0)) + c
        return ExactLength(tuple(sorted((k, c) for k, c in acc.items() if c != 0)))

    __radd__ = __add__

    def __neg__(self) -> ExactLength:
        return ExactLength(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other) -> ExactLength:
        try:
            other = ExactLength.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> ExactLength:
        return ExactLength.coerce(other) - self

    def __mul__(self, other) -> ExactLength:
        try:
            other = ExactLength.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[Key, Fraction] = {}
        for (d1, p1), c1 in self.terms:
            for (d2, p2), c2 in other.terms:
                g = math.gcd(d1, d2)
                key = ((d1 // g) * (d2 // g), p1 + p2)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2 * g
        return ExactLength(tuple(sorted((k, c) for k, c in acc.items() if c != 0)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> ExactLength:
        if isinstance(other, ExactLength):
            if not other.terms:
                raise ZeroDivisionError("division by zero")
            if len(other.terms) != 1:
                raise TypeError("division by a sum of terms is not supported")
            ((d, p), c), = other.terms
            # 1/(c sqrt(d) pi^p) = sqrt(d) / (c d) * pi^-p
            inv = ExactLength.from_terms({(d, -p): 1 / (c * d)})
            return self * inv
        q = _frac(other)
        if q == 0:
            raise ZeroDivisionError("division by zero")
        return ExactLength(tuple((k, c / q) for k, c in self.terms))

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(k == (1, 0) for k, _ in self.terms)

    def rational_part(self) -> Fraction:
        return self.as_dict().get((1, 0), Fraction(0))

    def interval(self, prec: int = START_PREC) -> tuple[Fraction, Fraction]:
        """Rigorous enclosure ``lo <= value <= hi`` with about ``prec`` bits."""
        lo = hi = Fraction(0)
        for (d, p), c in self.terms:
            flo, fhi = _factor_interval(d, p, prec)
            if c > 0:
                lo += c * flo
                hi += c * fhi
            else:
                lo += c * fhi
                hi += c * flo
        return lo, hi

    def sign(self) -> int:
        if not self.terms:
            return 0
        if self.is_rational():
            c = self.rational_part()
            return (c > 0) - (c < 0)
        prec = START_PREC
        while prec <= MAX_PREC:
            lo, hi = self.interval(prec)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2
        raise PrecisionExhausted(f"could not decide the sign of {self} at {MAX_PREC} bits")

    def __float__(self) -> float:
        lo, hi = self.interval(80)
        return float((lo + hi) / 2)

    def evalf(self, dps: int = 30):
        """mpmath value with ``dps`` decimal digits."""
        import mpmath

        with mpmath.workdps(dps + 10):
            total = mpmath.mpf(0)
            for (d, p), c in self.terms:
                total += mpmath.mpf(c.numerator) / c.denominator * mpmath.sqrt(d) * mpmath.pi ** p
        return +total

    # -- ordering ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactLength):
            return self.terms == other.terms
        try:
            return self.terms == ExactLength.coerce(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def _cmp(self, other) -> int:
        return compare(self, ExactLength.coerce(other))

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, ((d, p), c) in enumerate(self.terms):
            mag = abs(c)
            s = str(mag)
            if d != 1:
                s += f"*sqrt({d})"
            if p == 1:
                s += "*pi"
            elif p != 0:
                s += f"*pi^{p}"
            if i == 0:
                parts.append(s if c > 0 else "-" + s)
            else:
                parts.append(("+ " if c > 0 else "- ") + s)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ExactLength('{self}')"

    @classmethod
    def parse(cls, text: str) -> ExactLength:
        """Inverse of ``str``; accepts the canonical text form."""
        text = text.strip()
        if not text:
            raise ValueError("empty exact length")
        if text == "0":
            return cls()
        pos = 0
        acc: list[tuple[Key, Fraction]] = []
        first = True
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if m is None or (first and m.group("op")) or (not first and not m.group("op")):
                raise ValueError(f"malformed exact length: {text!r}")
            sign = -1 if (m.group("op") == "- " or m.group("neg")) else 1
            c = Fraction(m.group("coef")) * sign
            d = int(m.group("rad") or 1)
            if m.group("pi") is None:
                p = 0
            else:
                p = int(m.group("pow")) if m.group("pow") else 1
            acc.append(((d, p), c))
            pos = m.end()
            first = False
        return cls.from_terms(acc)


_TERM_RE = re.compile(
    r"\s*(?P<op>[+-] )?(?P<neg>-)?(?P<coef>\d+(?:/\d+)?)"
    r"(?:\*sqrt\((?P<rad>\d+)\))?(?P<pi>\*pi(?:\^(?P<pow>-?\d+))?)?"
)


@lru_cache(maxsize=8192)
def _sqrt_interval(d: int, prec: int) -> tuple[Fraction, Fraction]:
    if d == 1:
        return Fraction(1), Fraction(1)
    scale = 1 << prec
    s = math.isqrt(d * scale * scale)
    if s * s == d * scale * scale:
        return Fraction(s, scale), Fraction(s, scale)
    return Fraction(s, scale), Fraction(s + 1, scale)


@lru_cache(maxsize=256)
def _pi_interval(prec: int) -> tuple[Fraction, Fraction]:
    def to_frac(x):
        man, exp = libmp.to_man_exp(x)
        return Fraction(int(man)) * (Fraction(2) ** exp)

    return to_frac(libmp.mpf_pi(prec, libmp.round_floor)), to_frac(libmp.mpf_pi(prec, libmp.round_ceiling))


def _factor_interval(d: int, p: int, prec: int) -> tuple[Fraction, Fraction]:
    slo, shi = _sqrt_interval(d, prec)
    if p == 0:
        return slo, shi
    plo, phi = _pi_interval(prec)
    if p < 0:
        plo, phi = 1 / phi, 1 / plo
    e = abs(p)
    return slo * plo ** e, shi * phi ** e


@lru_cache(maxsize=65536)
def compare(x: ExactLength, y: ExactLength) -> int:
    """-1, 0 or 1 as ``x`` is less than, equal to, or greater than ``y``."""
    if x == y:
        return 0
    return (x - y).sign()
