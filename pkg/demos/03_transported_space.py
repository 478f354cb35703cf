"""Giving R^3 the structure of a 1-dimensional vector space.

Conjugating the coordinatewise operations of R^k through a bijection
from n-tuples onto R^k produces a k-dimensional vector space on the set
of n-tuples.  Here triples of rationals form a space of dimension one:
a single basis element spans everything.

Run:  python3 demos/03_transported_space.py
"""

from fractions import Fraction

from redim import check_axioms, check_isomorphism, standard_space

space = standard_space(3, 1)
print("The transported space: triples with dimension 1")
print("------------------------------------------------")
print(f"  zero element: {space.zero()}")
halves = (Fraction(1, 2),) * 3
total = space.vadd(halves, halves)
print(f"  (1/2,1/2,1/2) (+) (1/2,1/2,1/2) = {total}")
print(f"  2 (*) (1/2,1/2,1/2)            = {space.smul(2, halves)}")
print(f"  additive inverse of the sum     = {space.neg(total)}")
print()

print("A one-element basis spans all triples")
print("-------------------------------------")
basis = [(Fraction(1),)]
(spanning,) = space.basis(basis)
print(f"  preimage of the basis vector (1): {spanning}")
x = space.phi.backward((Fraction(-7, 4),))
coords = space.coordinates(basis, x)
print(f"  coordinates of {x}: {coords}")
rebuilt = space.smul(coords[0], spanning)
print(f"  coordinate * basis element reconstructs it: {rebuilt == x}")
print()

print("Machine-verified axioms (exact, seeded)")
print("---------------------------------------")
axioms = check_axioms(space, trials=50, seed=42)
for check in axioms.checks:
    print(f"  {check.name:<38} {check.passes}/{check.trials}")
iso = check_isomorphism(space, trials=50, seed=42)
for check in iso.checks:
    print(f"  {check.name:<38} {check.passes}/{check.trials}")
print(f"  all passed: {axioms.all_passed and iso.all_passed}")
