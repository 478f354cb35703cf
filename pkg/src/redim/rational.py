"""Exact rationals and their canonical repeating decimal expansions.

Every value in the exact pipeline is a fraction, so every expansion is
eventually periodic and can be stored as finite (preperiod, period)
digit data.  Terminating values are rewritten to end in repeating 9s
(1/2 is stored as 0.4(9), not 0.5), which keeps the digit stream free
of a trailing-zeros tail, and the stored pair is always minimal, so
structural equality of expansions is value equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, TypeVar

from .errors import DomainError, NonCanonicalError

__all__ = [
    "PeriodicExpansion",
    "normalize",
    "to_expansion",
    "from_expansion",
    "parse_rational",
    "parse_expansion",
    "format_rational",
    "minimal_split",
]

_T = TypeVar("_T")

_DIGIT_CHARS = "0123456789"

# Interleaved values routinely carry digit runs beyond CPython's default
# int <-> str conversion guard (4300 digits), so convert in chunks.
_CHUNK = 4000


def _int_from_digits(digits: str) -> int:
    value = 0
    for start in range(0, len(digits), _CHUNK):
        piece = digits[start : start + _CHUNK]
        value = value * 10 ** len(piece) + int(piece)
    return value


def _digits_from_int(value: int) -> str:
    if value < 10**_CHUNK:
        return str(value)
    base = 10**_CHUNK
    pieces: list[int] = []
    while value:
        value, low = divmod(value, base)
        pieces.append(low)
    head = str(pieces[-1])
    tail = [str(piece).zfill(_CHUNK) for piece in reversed(pieces[:-1])]
    return head + "".join(tail)


def normalize(numerator: int, denominator: int) -> Fraction:
    """Reduced fraction with positive denominator; zero is 0/1."""
    if denominator == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(numerator, denominator)


def format_rational(x: Fraction) -> str:
    """Render "p/q" (or "p") text, safe for very long numerators."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    numerator = _digits_from_int(abs(x.numerator))
    if x.denominator == 1:
        return sign + numerator
    return f"{sign}{numerator}/{_digits_from_int(x.denominator)}"


def minimal_split(
    preperiod: Sequence[_T], period: Sequence[_T]
) -> tuple[tuple[_T, ...], tuple[_T, ...]]:
    """Shortest (preperiod, period) pair describing the same stream.

    First folds a period that is a repetition of a shorter block, then
    keeps absorbing the last preperiod element into the period whenever
    it equals the last period element (rotating the period right by one
    step each time, which leaves the emitted stream unchanged).
    """
    pre = tuple(preperiod)
    per = tuple(period)
    size = len(per)
    for width in range(1, size + 1):
        if size % width == 0 and per[:width] * (size // width) == per:
            per = per[:width]
            break
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = (per[-1],) + per[:-1]
    return pre, per


@dataclass(frozen=True)
class PeriodicExpansion:
    """Canonical expansion 0.<preperiod>(<period>) of a rational in (0, 1].

    The constructor canonicalizes: the period must contain a nonzero
    digit, repetitions of a shorter block are folded, and the boundary
    is shifted left while the last preperiod digit equals the last
    period digit.  The stored form is therefore unique per value.
    """

    preperiod: str
    period: str

    def __post_init__(self) -> None:
        for char in self.preperiod + self.period:
            if char not in _DIGIT_CHARS:
                raise NonCanonicalError(f"invalid digit {char!r}")
        if not self.period or set(self.period) == {"0"}:
            raise NonCanonicalError("non-canonical expansion")
        pre, per = minimal_split(tuple(self.preperiod), tuple(self.period))
        object.__setattr__(self, "preperiod", "".join(pre))
        object.__setattr__(self, "period", "".join(per))

    def digit_at(self, index: int) -> str:
        """Digit at 0-based position ``index`` after the decimal point."""
        if index < len(self.preperiod):
            return self.preperiod[index]
        return self.period[(index - len(self.preperiod)) % len(self.period)]

    def prefix(self, count: int) -> str:
        """First ``count`` digits of the infinite stream."""
        if count <= len(self.preperiod):
            return self.preperiod[:count]
        tail = count - len(self.preperiod)
        reps = -(-tail // len(self.period))
        return self.preperiod + (self.period * reps)[:tail]

    def __str__(self) -> str:
        return f"0.{self.preperiod}({self.period})"


@lru_cache(maxsize=4096)
def to_expansion(x: Fraction) -> PeriodicExpansion:
    """Canonical nines-form expansion of a rational in (0, 1].

    >>> str(to_expansion(Fraction(1, 2)))
    '0.4(9)'
    >>> str(to_expansion(Fraction(1, 7)))
    '0.(142857)'
    """
    x = Fraction(x)
    if not 0 < x <= 1:
        raise DomainError("out of unit range")
    if x == 1:
        return PeriodicExpansion("", "9")
    p, q = x.numerator, x.denominator
    stripped = q
    twos = fives = 0
    while stripped % 2 == 0:
        stripped //= 2
        twos += 1
    while stripped % 5 == 0:
        stripped //= 5
        fives += 1
    shift = max(twos, fives)
    head, r = divmod(p * 10**shift, q)
    if r == 0:
        # Terminating value: drop the final digit by one and repeat 9s.
        return PeriodicExpansion(_digits_from_int(head - 1).zfill(shift), "9")
    first = r
    digits: list[str] = []
    while True:
        r *= 10
        d, r = divmod(r, q)
        digits.append(_DIGIT_CHARS[d])
        if r == first:
            break
    pre = _digits_from_int(head).zfill(shift) if shift else ""
    return PeriodicExpansion(pre, "".join(digits))


def from_expansion(expansion: PeriodicExpansion) -> Fraction:
    """Exact value of a canonical expansion; inverse of :func:`to_expansion`."""
    pre_len = len(expansion.preperiod)
    per_len = len(expansion.period)
    head = _int_from_digits(expansion.preperiod) if pre_len else 0
    return Fraction(head, 10**pre_len) + Fraction(
        _int_from_digits(expansion.period), 10**pre_len * (10**per_len - 1)
    )


_FRACTION_RE = re.compile(r"\A[+-]?\d+(?:/\d+)?\Z")
_DECIMAL_RE = re.compile(r"\A([+-]?)(\d+)\.(\d*)(?:\((\d+)\))?\Z")
_EXPANSION_RE = re.compile(r"\A0\.(\d*)\((\d+)\)\Z")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or decimal text like "0.45" / "0.44(9)".

    Periodic decimal input is only accepted in the "0.pre(period)" form;
    terminating decimals may have any integer part.
    """
    token = text.strip()
    if _FRACTION_RE.match(token):
        if "/" in token:
            num, den = token.split("/")
            return normalize(int(num), int(den))
        return Fraction(int(token))
    match = _DECIMAL_RE.match(token)
    if not match:
        raise ValueError(f"cannot parse rational {text!r}")
    sign, whole, fractional, period = match.groups()
    value = Fraction(int(whole))
    if fractional:
        value += Fraction(int(fractional), 10 ** len(fractional))
    if period is not None:
        if int(whole) != 0:
            raise ValueError("periodic input must have the form 0.pre(period)")
        value += Fraction(
            int(period), 10 ** len(fractional) * (10 ** len(period) - 1)
        )
    return -value if sign == "-" else value


def parse_expansion(text: str) -> PeriodicExpansion:
    """Parse "0.<pre>(<period>)" text into a canonical expansion."""
    match = _EXPANSION_RE.match(text.strip())
    if not match:
        raise ValueError(f"cannot parse expansion {text!r}")
    return PeriodicExpansion(match.group(1), match.group(2))
