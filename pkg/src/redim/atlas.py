"""Elementary exact bijections between intervals and the real line.

A handle bundles a forward and a backward map together with descriptors
of its endpoint spaces, so that composition and inversion stay honest.
The interval shifts are Hilbert-hotel style: they move one countable
chain one step and fix everything else, which absorbs or releases a
single endpoint.  The squashing map into (0, 1) is chosen to preserve
rationality in both directions; the true tangent-circle projection (see
:func:`semicircle_points`) involves square roots and is kept only as a
float sampler for plotting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import CompositionError, DomainError

__all__ = [
    "Space",
    "BijectionHandle",
    "REALS",
    "CLOSED_UNIT",
    "HALFOPEN_UNIT",
    "OPEN_UNIT",
    "real_tuples",
    "compose",
    "inverse",
    "identity_bijection",
    "closed_to_halfopen",
    "halfopen_to_open",
    "real_to_open_rational",
    "real_to_halfopen_unit",
    "semicircle_points",
    "semicircle_csv_rows",
]


@dataclass(frozen=True)
class Space:
    """Descriptor of a map's endpoint: a space kind plus tuple arity."""

    kind: str
    arity: int = 1

    def __str__(self) -> str:
        if self.kind == "reals":
            return "R" if self.arity == 1 else f"R^{self.arity}"
        return self.kind


REALS = Space("reals")
CLOSED_UNIT = Space("[0,1]")
HALFOPEN_UNIT = Space("(0,1]")
OPEN_UNIT = Space("(0,1)")


def real_tuples(arity: int) -> Space:
    return Space("reals", arity)


@dataclass(frozen=True)
class BijectionHandle:
    """An invertible map exposing apply (forward) and unapply (backward)."""

    source: Space
    target: Space
    forward_fn: Callable[[Any], Any]
    backward_fn: Callable[[Any], Any]
    label: str = ""

    def forward(self, value: Any) -> Any:
        return self.forward_fn(value)

    def backward(self, value: Any) -> Any:
        return self.backward_fn(value)

    def inverse(self) -> "BijectionHandle":
        label = f"inverse of {self.label}" if self.label else ""
        return BijectionHandle(
            self.target, self.source, self.backward_fn, self.forward_fn, label
        )

    def __str__(self) -> str:
        name = self.label or "bijection"
        return f"{name}: {self.source} <-> {self.target}"


def compose(first: BijectionHandle, second: BijectionHandle) -> BijectionHandle:
    """Handle applying ``first`` then ``second``; spaces must line up."""
    if first.target != second.source:
        raise CompositionError("composition mismatch")
    return BijectionHandle(
        first.source,
        second.target,
        lambda value: second.forward_fn(first.forward_fn(value)),
        lambda value: first.backward_fn(second.backward_fn(value)),
        label=f"{first.label} ; {second.label}".strip(" ;"),
    )


def inverse(handle: BijectionHandle) -> BijectionHandle:
    return handle.inverse()


def identity_bijection(arity: int = 1) -> BijectionHandle:
    space = real_tuples(arity)
    same = lambda value: value
    return BijectionHandle(space, space, same, same, "identity")


def _require(condition: bool) -> None:
    if not condition:
        raise DomainError("domain violation")


def closed_to_halfopen() -> BijectionHandle:
    """[0,1] -> (0,1]: shift the chain 0, 1/2, 2/3, 3/4, ... one step.

    Each (n-1)/n maps to n/(n+1), so 0 maps to 1/2 and the point 0 is
    absorbed; everything off the chain is fixed.
    """

    def forward(x: Fraction) -> Fraction:
        x = Fraction(x)
        _require(0 <= x <= 1)
        if x < 1:
            gap = 1 - x  # equals 1/n exactly when x = (n-1)/n
            if gap.numerator == 1:
                n = gap.denominator
                return Fraction(n, n + 1)
        return x

    def backward(y: Fraction) -> Fraction:
        y = Fraction(y)
        _require(0 < y <= 1)
        if y < 1:
            gap = 1 - y
            if gap.numerator == 1 and gap.denominator >= 2:
                n = gap.denominator - 1
                return Fraction(n - 1, n)
        return y

    return BijectionHandle(CLOSED_UNIT, HALFOPEN_UNIT, forward, backward, "endpoint shift")


def halfopen_to_open() -> BijectionHandle:
    """(0,1] -> (0,1): shift the unit fractions, 1/m -> 1/(m+1)."""

    def forward(x: Fraction) -> Fraction:
        x = Fraction(x)
        _require(0 < x <= 1)
        if x.numerator == 1:
            return Fraction(1, x.denominator + 1)
        return x

    def backward(y: Fraction) -> Fraction:
        y = Fraction(y)
        _require(0 < y < 1)
        if y.numerator == 1 and y.denominator >= 2:
            return Fraction(1, y.denominator - 1)
        return y

    return BijectionHandle(HALFOPEN_UNIT, OPEN_UNIT, forward, backward, "unit-fraction shift")


def real_to_open_rational() -> BijectionHandle:
    """R -> (0,1) via x -> 1/2 + x / (2 (1 + |x|)); rational both ways.

    Strictly increasing, odd-symmetric about (0, 1/2), and its inverse
    is (2y - 1) / (2 (1 - y)) for y >= 1/2 and (2y - 1) / (2y) below.
    """

    def forward(x: Fraction) -> Fraction:
        x = Fraction(x)
        return Fraction(1, 2) + x / (2 * (1 + abs(x)))

    def backward(y: Fraction) -> Fraction:
        y = Fraction(y)
        _require(0 < y < 1)
        if y >= Fraction(1, 2):
            return (2 * y - 1) / (2 * (1 - y))
        return (2 * y - 1) / (2 * y)

    return BijectionHandle(REALS, OPEN_UNIT, forward, backward, "rational squash")


def real_to_halfopen_unit() -> BijectionHandle:
    """Glue map R -> (0,1]: squash into (0,1), then un-shift unit fractions."""
    return compose(real_to_open_rational(), halfopen_to_open().inverse())


def semicircle_points(samples: int) -> list[tuple[float, float]]:
    """Float samples of the tangent-circle projection, for plotting only.

    A circle of radius 1/2 touches the axis at x = 1/2; joining (x, 0)
    to its centre and projecting the lower intersection point back down
    sends x to 1/2 + (x - 1/2) / (2 sqrt((x - 1/2)^2 + 1/4)).  Sample
    points are spread over the whole line via a tangent grid, and for an
    odd sample count the middle sample is exactly (0.5, 0.5).
    """
    if samples < 1:
        raise DomainError("need at least one sample")
    points = []
    for i in range(samples):
        t = (i + 1) / (samples + 1)
        x = 0.5 + math.tan(math.pi * (t - 0.5))
        dx = x - 0.5
        fx = 0.5 + dx / (2 * math.sqrt(dx * dx + 0.25))
        points.append((x, fx))
    return points


def semicircle_csv_rows(samples: int) -> list[str]:
    """The sampled projection as CSV lines "x,fx"."""
    return [f"{x},{fx}" for x, fx in semicircle_points(samples)]
