"""Pairing two numbers into one, and folding tuples through it.

Interleaving whole digit groups (not single digits) keeps the merged
expansion canonical, which is exactly what makes the map invertible on
(0, 1] x (0, 1].  Composed with an interval glue map it pairs arbitrary
rationals, and iterating the pairing folds any tuple into one number.

Run:  python3 demos/02_pairing_and_folding.py
"""

from fractions import Fraction

from redim import (
    build_phi,
    fold_tuple,
    pair_reals,
    pair_unit,
    to_expansion,
    unfold_tuple,
    unpair_unit,
)

half = Fraction(1, 2)
print("Unit-square pairing by group interleaving")
print("-----------------------------------------")
print(f"  0.4(9) interleaved with itself: pair_unit(1/2, 1/2) = {pair_unit(half, half)}")
print(f"  as an expansion: {to_expansion(pair_unit(half, half))}")
sevenths = Fraction(1, 7)
merged = pair_unit(sevenths, sevenths)
print(f"  pair_unit(1/7, 1/7) = {merged} = {to_expansion(merged)}")
print(f"  unpair_unit recovers the pair: {unpair_unit(merged)}")
print()

print("Whole numbers pair through the glue map R -> (0,1]")
print("---------------------------------------------------")
print(f"  pair_reals(0, 0)   = {pair_reals(0, 0)}")
print(f"  pair_reals(-3, 10) = {pair_reals(-3, 10)}")
print()

print("Tuples fold to single numbers and unfold back")
print("---------------------------------------------")
triple = (Fraction(3, 2), Fraction(-1, 2), Fraction(0))
print(f"  fold_tuple({triple}) = {fold_tuple(triple)}")
print(f"  unfold_tuple(1, 3)   = {unfold_tuple(Fraction(1), 3)}")
print()

print("Arbitrary arity-to-arity bijections factor through R")
print("-----------------------------------------------------")
phi = build_phi(2, 3)
point = (Fraction(1, 2), Fraction(1, 3))
image = phi.forward(point)
print(f"  phi(2->3) maps {point} to {image}")
print(f"  backward(image) = {phi.backward(image)}")
