"""Pairing bijections: unit square, real pairs, and tuple fold/unfold.

The unit-square pairing interleaves digit groups of the two canonical
expansions; composing it with the glue map R -> (0, 1] gives a pairing
of arbitrary rationals, and folding a tuple through repeated pairing
realizes an explicit bijection R^n <-> R^k for any arities n, k >= 1.

Exactness comes at a price: the decimal period of an interleaved value
can be as long as the least common multiple of the input group cycles,
so outputs can be far bigger than inputs.  Callers who need speed
should keep the periods of the values involved short (for example
terminating decimals, whose canonical form has period "9").
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .atlas import BijectionHandle, real_to_halfopen_unit, real_tuples
from .codec import deinterleave, expansion_of_groups, interleave, segment
from .errors import ArityError
from .rational import from_expansion, to_expansion

__all__ = [
    "RealTuple",
    "pair_unit",
    "unpair_unit",
    "pair_reals",
    "unpair_reals",
    "fold_tuple",
    "unfold_tuple",
    "build_phi",
]

RealTuple = tuple[Fraction, ...]

_GLUE = real_to_halfopen_unit()


@lru_cache(maxsize=8192)
def _pair_unit(a: Fraction, b: Fraction) -> Fraction:
    merged = interleave(segment(to_expansion(a)), segment(to_expansion(b)))
    return from_expansion(merged)


def pair_unit(a: Fraction, b: Fraction) -> Fraction:
    """Encode two rationals in (0, 1] as one, by group interleaving.

    >>> pair_unit(Fraction(1, 2), Fraction(1, 2))
    Fraction(9, 20)
    """
    return _pair_unit(Fraction(a), Fraction(b))


@lru_cache(maxsize=8192)
def _unpair_unit(y: Fraction) -> tuple[Fraction, Fraction]:
    first, second = deinterleave(to_expansion(y))
    return (
        from_expansion(expansion_of_groups(first)),
        from_expansion(expansion_of_groups(second)),
    )


def unpair_unit(y: Fraction) -> tuple[Fraction, Fraction]:
    """Inverse of :func:`pair_unit` on (0, 1]."""
    return _unpair_unit(Fraction(y))


def pair_reals(a: Fraction, b: Fraction) -> Fraction:
    """Encode two arbitrary rationals as one: R^2 -> R.

    Both inputs travel through the glue map into (0, 1], are paired
    there, and the result comes back through the glue map's inverse.
    """
    unit = pair_unit(_GLUE.forward(Fraction(a)), _GLUE.forward(Fraction(b)))
    return _GLUE.backward(unit)


def unpair_reals(y: Fraction) -> tuple[Fraction, Fraction]:
    """Inverse of :func:`pair_reals`."""
    first, second = unpair_unit(_GLUE.forward(Fraction(y)))
    return _GLUE.backward(first), _GLUE.backward(second)


def fold_tuple(values) -> Fraction:
    """Right fold of a tuple into a single rational: bijective R^n -> R.

    Arity one is the identity; otherwise the head is paired with the
    folded tail, so the last coordinate sits innermost.
    """
    coords = tuple(Fraction(v) for v in values)
    if not coords:
        raise ArityError("zero arity")
    acc = coords[-1]
    for value in reversed(coords[:-1]):
        acc = pair_reals(value, acc)
    return acc


def unfold_tuple(y: Fraction, arity: int) -> RealTuple:
    """Exact inverse of :func:`fold_tuple` at the given arity."""
    if arity < 1:
        raise ArityError("zero arity")
    rest = Fraction(y)
    coords: list[Fraction] = []
    for _ in range(arity - 1):
        head, rest = unpair_reals(rest)
        coords.append(head)
    coords.append(rest)
    return tuple(coords)


def build_phi(n: int, k: int) -> BijectionHandle:
    """Explicit bijection R^n <-> R^k, factoring through R.

    Forward folds the n-tuple to a single value and unfolds it to k
    coordinates; backward is the exact mirror, so the handle of (k, n)
    computes the pointwise inverse of the handle of (n, k).
    """
    if n < 1 or k < 1:
        raise ArityError("zero arity")

    def forward(values: RealTuple) -> RealTuple:
        coords = tuple(Fraction(v) for v in values)
        if len(coords) != n:
            raise ArityError("arity mismatch")
        return unfold_tuple(fold_tuple(coords), k)

    def backward(values: RealTuple) -> RealTuple:
        coords = tuple(Fraction(v) for v in values)
        if len(coords) != k:
            raise ArityError("arity mismatch")
        return unfold_tuple(fold_tuple(coords), n)

    return BijectionHandle(
        real_tuples(n), real_tuples(k), forward, backward, f"interleaving {n}<->{k}"
    )
