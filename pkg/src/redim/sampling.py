"""Seeded generators of exact test data with controlled expansion cost.

The pairing machinery is exact but explosive: expanding a fraction p/q
costs about the multiplicative order of 10 modulo q, and interleaving
two expansions costs up to the lcm of their group cycles.  Random
fractions with unstructured denominators therefore make the transported
operations astronomically expensive.  The generators here draw values
whose decimal data stays short through the operations under test:

* terminating-decimal scalars and vectors (denominators 2^a 5^b, tiny
  numerators), closed under addition and scalar multiplication, so the
  whole evaluation graph of an axiom check stays cheap;
* "friendly" reals x = +/- p / (D - p) with D = 2^a 5^b d and d dividing
  10^l - 1 for small l, so the glue image of x has a short period even
  when p and q run up to 10^6.
"""

from __future__ import annotations

import random
from fractions import Fraction

__all__ = [
    "TERMINATING_DENOMINATORS",
    "terminating_scalar",
    "terminating_vector",
    "friendly_real",
    "friendly_tuple",
    "short_period_unit",
    "AXIOM_GENERATOR_NOTE",
]

TERMINATING_DENOMINATORS = (1, 1, 1, 2, 2, 4, 5, 10)

# Scalars multiply into coordinate values, so their denominators are kept
# to powers of two to bound the blow-up of |p| + q along the evaluation
# graph (the glue-image denominator, hence the expansion cost).
_SCALAR_DENOMINATORS = (1, 1, 2)

# Divisors of 10^l - 1 for l <= 3; denominators built from these (times
# powers of 2 and 5) give decimal periods of at most 3 digits.
_REPUNIT_DIVISORS = (1, 1, 1, 3, 9, 11, 27, 33, 37, 99, 111, 333, 999)

AXIOM_GENERATOR_NOTE = (
    "seeded orbit sampler: source tuples are phi-backward images of "
    "k-vectors with coordinates u/d, |u| <= 4, d in {1,2,4,5,10}; "
    "scalars u/d, |u| <= 4, d in {1,2}; trial t uses "
    "random.Random(seed*1000003 + t)"
)


def terminating_scalar(rng: random.Random, max_num: int = 4) -> Fraction:
    """Small rational scalar with terminating decimal expansion."""
    return Fraction(rng.randint(-max_num, max_num), rng.choice(_SCALAR_DENOMINATORS))


def terminating_vector(rng: random.Random, arity: int, max_num: int = 4) -> tuple[Fraction, ...]:
    """Vector of small terminating-decimal coordinates."""
    return tuple(
        Fraction(rng.randint(-max_num, max_num), rng.choice(TERMINATING_DENOMINATORS))
        for _ in range(arity)
    )


def friendly_real(rng: random.Random, max_scale: int = 10**6) -> Fraction:
    """Rational x with |p|, q < ``max_scale`` whose glue image expands fast.

    The glue map sends p/q to a fraction with denominator 2 (|p| + q),
    so drawing the split p + q = 2^a 5^b d keeps that denominator's
    decimal period at most 3 digits regardless of the magnitudes.
    """
    if rng.random() < 0.15:
        return Fraction(rng.randint(-3, 3))
    while True:
        scale = (
            2 ** rng.randint(0, 19)
            * 5 ** rng.randint(0, 8)
            * rng.choice(_REPUNIT_DIVISORS)
        )
        if 2 <= scale <= max_scale:
            break
    p = rng.randint(1, scale - 1)
    return Fraction(rng.choice((-1, 1)) * p, scale - p)


def friendly_tuple(rng: random.Random, arity: int, max_scale: int = 10**6) -> tuple[Fraction, ...]:
    return tuple(friendly_real(rng, max_scale) for _ in range(arity))


def short_period_unit(rng: random.Random, max_scale: int = 10**6) -> Fraction:
    """Rational in (0, 1] whose own expansion has a short period."""
    while True:
        den = (
            2 ** rng.randint(0, 19)
            * 5 ** rng.randint(0, 8)
            * rng.choice(_REPUNIT_DIVISORS)
        )
        if den <= max_scale:
            break
    return Fraction(rng.randint(1, den), den)
