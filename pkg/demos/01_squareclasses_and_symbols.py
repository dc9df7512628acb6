"""Tour of the exact arithmetic layer: quadratic symbols, Hilbert symbols,
and p-adic squareclasses.

Run: python demos/01_squareclasses_and_symbols.py
"""
from math import prod

from qfmass import OO, LocalSquareClass, chi, factor, gamma_factor, hilbert_symbol, kronecker

print("Kronecker symbol, including the extended value at 2:")
for a in (-3, -1, 1, 3, 5, 7):
    print(f"  ({a:+d}|2) = {kronecker(a, 2):+d}")
print("  (2|7)  =", kronecker(2, 7), " (7 = -1 mod 8, so 2 is a square mod 7)")

print("\nHilbert symbols at a few places:")
for a, b, v in [(2, 5, 5), (-1, -1, OO), (-1, -1, 2), (3, 5, 2)]:
    place = "oo" if v == OO else v
    print(f"  ({a}, {b})_{place} = {hilbert_symbol(a, b, v):+d}")

print("\nThe product formula: over all relevant places the symbols multiply to +1.")
a, b = -6, 10
places = [OO] + [p for p, _ in factor(abs(2 * a * b))]
vals = [hilbert_symbol(a, b, v) for v in places]
print(f"  a={a}, b={b}: " + " * ".join(f"{v:+d}" for v in vals) + f" = {prod(vals)}")

print("\nSquareclasses of Q_p are (valuation, unit class) pairs:")
x = LocalSquareClass.of(360, 2)
y = LocalSquareClass.of(360, 3)
print("  360 at p=2:", x, " (360 = 8 * 45, 45 = 5 mod 8)")
print("  360 at p=3:", y)
print("  squaring any class kills the tag:", x * x)

print("\nThe character chi_u(p) = (-u|p) and its gamma factor 1 - chi/p:")
for u, p in [(3, 2), (1, 5), (1, 3)]:
    print(f"  chi_{u}({p}) = {chi(u, p):+d}   gamma_{p}({u}) = {gamma_factor(u, p)}")
