"""Digit-group segmentation and exact interleaving of repeating expansions.

A digit group is a run of zeros (possibly empty) closed by one nonzero
digit.  Because canonical expansions never end in repeating zeros, every
zero run is finite, so grouping is total, and since every group ends in
a nonzero digit, alternating whole groups from two streams can never
produce a trailing-zeros tail.  That is what makes the group-wise merge
a bijection on (0, 1] x (0, 1] where plain digit-wise merging is not.

All three operations here are exact: they walk a small state machine
over the finite (preperiod, period) data and detect the cycle by the
first repeated machine state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonCanonicalError
from .rational import PeriodicExpansion, minimal_split

__all__ = [
    "DigitGroup",
    "GroupSequence",
    "segment",
    "interleave",
    "deinterleave",
    "expansion_of_groups",
]

_NONZERO = "123456789"


@dataclass(frozen=True)
class DigitGroup:
    """Zero or more '0' digits closed by a single digit '1'-'9'."""

    zeros: int
    terminal: str

    def __post_init__(self) -> None:
        if self.zeros < 0 or self.terminal not in _NONZERO:
            raise NonCanonicalError(
                f"invalid digit group ({self.zeros} zeros, {self.terminal!r})"
            )

    @property
    def digits(self) -> str:
        return "0" * self.zeros + self.terminal

    def __len__(self) -> int:
        return self.zeros + 1

    def __str__(self) -> str:
        return self.digits


@dataclass(frozen=True)
class GroupSequence:
    """Eventually periodic stream of digit groups, stored minimally."""

    preperiod: tuple[DigitGroup, ...]
    period: tuple[DigitGroup, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise NonCanonicalError("empty group period")
        pre, per = minimal_split(self.preperiod, self.period)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def group_at(self, index: int) -> DigitGroup:
        """Group at 0-based position ``index`` of the infinite stream."""
        if index < len(self.preperiod):
            return self.preperiod[index]
        return self.period[(index - len(self.preperiod)) % len(self.period)]

    def render(self) -> str:
        """Debug form: preperiod groups, then the cycle, e.g. "002 4 | (9)"."""
        head = " ".join(group.digits for group in self.preperiod)
        cycle = " ".join(group.digits for group in self.period)
        return f"{head} | ({cycle})" if head else f"| ({cycle})"


def segment(expansion: PeriodicExpansion) -> GroupSequence:
    """Split an expansion's digit stream into digit groups.

    Groups are consumed from position 0.  Once a group starts inside the
    periodic zone, its start offset modulo the period length determines
    the entire remaining stream, so the first repeated offset closes the
    group cycle; at most one offset per period digit is examined.
    """
    pre_len = len(expansion.preperiod)
    per_len = len(expansion.period)
    groups: list[DigitGroup] = []
    seen: dict[int, int] = {}
    pos = 0
    while True:
        if pos >= pre_len:
            offset = (pos - pre_len) % per_len
            if offset in seen:
                cut = seen[offset]
                return GroupSequence(tuple(groups[:cut]), tuple(groups[cut:]))
            seen[offset] = len(groups)
        zeros = 0
        while expansion.digit_at(pos) == "0":
            zeros += 1
            pos += 1
        groups.append(DigitGroup(zeros, expansion.digit_at(pos)))
        pos += 1


def interleave(a: GroupSequence, b: GroupSequence) -> PeriodicExpansion:
    """Merge two group streams as a1 b1 a2 b2 ... into one expansion.

    Once both inputs are inside their cycles, the pair of cycle offsets
    is the joint machine state; the first repeated pair closes the
    output period after at most lcm(|a cycle|, |b cycle|) steps.  The
    result is canonical because every group ends in a nonzero digit.
    """
    chunks: list[str] = []
    seen: dict[tuple[int, int], int] = {}
    step = 0
    while True:
        if step >= len(a.preperiod) and step >= len(b.preperiod):
            state = (
                (step - len(a.preperiod)) % len(a.period),
                (step - len(b.preperiod)) % len(b.period),
            )
            if state in seen:
                cut = seen[state]
                return PeriodicExpansion(
                    "".join(chunks[:cut]), "".join(chunks[cut:])
                )
            seen[state] = len(chunks)
        chunks.append(a.group_at(step).digits)
        chunks.append(b.group_at(step).digits)
        step += 1


def _alternate(source: GroupSequence, start: int) -> GroupSequence:
    """Groups at positions start, start+2, start+4, ... as a sequence."""
    pre_len = len(source.preperiod)
    per_len = len(source.period)
    groups: list[DigitGroup] = []
    seen: dict[int, int] = {}
    step = 0
    while True:
        index = start + 2 * step
        if index >= pre_len:
            offset = (index - pre_len) % per_len
            if offset in seen:
                cut = seen[offset]
                return GroupSequence(tuple(groups[:cut]), tuple(groups[cut:]))
            seen[offset] = len(groups)
        groups.append(source.group_at(index))
        step += 1


def deinterleave(merged: PeriodicExpansion) -> tuple[GroupSequence, GroupSequence]:
    """Inverse of :func:`interleave`.

    Groups at odd positions (1st, 3rd, ...) go to the first output and
    groups at even positions to the second, counting from one.
    """
    stream = segment(merged)
    return _alternate(stream, 0), _alternate(stream, 1)


def expansion_of_groups(sequence: GroupSequence) -> PeriodicExpansion:
    """Expansion whose digit stream equals the rendered group stream."""
    pre = "".join(group.digits for group in sequence.preperiod)
    per = "".join(group.digits for group in sequence.period)
    return PeriodicExpansion(pre, per)
