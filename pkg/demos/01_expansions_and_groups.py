"""Canonical repeating expansions and digit-group segmentation.

Every rational in (0, 1] gets a unique finite description: a preperiod
and a repeating period, with terminating values rewritten to end in
repeating 9s.  Digit groups (zero runs closed by one nonzero digit) are
the unit the pairing machinery interleaves.

Run:  python3 demos/01_expansions_and_groups.py
"""

from fractions import Fraction

from redim import from_expansion, parse_expansion, segment, to_expansion

print("Canonical nines-form expansions")
print("-------------------------------")
for value in (Fraction(1, 2), Fraction(1, 400), Fraction(1, 7), Fraction(9, 20), Fraction(1)):
    expansion = to_expansion(value)
    print(f"  {str(value):>12}  ->  {expansion}")

print()
print("Terminating values end in repeating 9s so that no expansion ever")
print("carries a trailing-zeros tail; that makes zero runs finite and")
print("digit grouping total.")
print()

print("Digit groups: runs of zeros closed by one nonzero digit")
print("--------------------------------------------------------")
for value in (Fraction(1, 400), Fraction(1, 7), Fraction(3, 808)):
    expansion = to_expansion(value)
    groups = segment(expansion)
    print(f"  {str(value):>8} = {str(expansion):<20} groups: {groups.render()}")

print()
print("Expansions round-trip exactly, and text forms parse back:")
x = Fraction(123, 424)
expansion = to_expansion(x)
print(f"  {x} -> {expansion} -> {from_expansion(expansion)}")
print(f"  parse_expansion('0.44(9)') == {from_expansion(parse_expansion('0.44(9)'))}")
