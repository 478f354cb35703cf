"""Independent brute-force oracles used to pin expected values.

Nothing here shares code paths with the library: digits come from a
ceiling-truncation formula or from naive long division, grouping and
interleaving are plain list walks over digit prefixes.
"""

from __future__ import annotations

from fractions import Fraction


def nines_digits(x: Fraction, count: int) -> str:
    """First ``count`` digits of x in (0, 1] in nines form.

    Uses the strict truncation characterization: the integer formed by
    the first i digits is ceil(x * 10^i) - 1, because the tail of a
    nines-form expansion is always positive.
    """
    p, q = x.numerator, x.denominator
    digits = []
    prev = 0
    power = 1
    for _ in range(count):
        power *= 10
        current = -((-p * power) // q) - 1  # ceil(p*power/q) - 1
        digits.append(current - 10 * prev)
        prev = current
    return "".join(str(d) for d in digits)


def longdiv_nines_digits(p: int, q: int, count: int) -> str:
    """Naive long division of p/q in (0, 1], rewritten to nines form."""
    if p == q:
        return "9" * count
    digits: list[int] = []
    r = p
    for _ in range(count):
        r *= 10
        d, r = divmod(r, q)
        digits.append(d)
        if r == 0:
            break
    if r == 0:
        digits[-1] -= 1
        while len(digits) < count:
            digits.append(9)
    return "".join(str(d) for d in digits[:count])


def brute_groups(digits: str) -> list[str]:
    """Greedy zero-run grouping of a digit prefix (drops a partial tail)."""
    groups = []
    run = ""
    for char in digits:
        run += char
        if char != "0":
            groups.append(run)
            run = ""
    return groups


def brute_interleave_prefix(digits_a: str, digits_b: str, count: int) -> str:
    """Alternate whole groups of two digit prefixes; first ``count`` digits."""
    groups_a = brute_groups(digits_a)
    groups_b = brute_groups(digits_b)
    merged = []
    for ga, gb in zip(groups_a, groups_b):
        merged.append(ga)
        merged.append(gb)
    text = "".join(merged)
    assert len(text) >= count, "not enough oracle digits"
    return text[:count]
