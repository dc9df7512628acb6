"""Local genera of binary forms and their exact mass data: Jordan symbols,
the five 2-adic shapes, p-masses, and local densities.

Run: python demos/03_local_genera_and_masses.py
"""
from qfmass import (
    LocalSquareClass,
    QuadForm,
    count_SO_mod_p,
    enumerate_local_genera,
    genus_symbol_2,
    jordan_split_odd,
    local_density_inverse,
    p_mass,
    same_genus,
)

f = QuadForm.binary(1, 1, 1)
print("x^2 + xy + y^2 at p = 3:", jordan_split_odd(f, 3))
print("x^2 + xy + y^2 at p = 2:", genus_symbol_2(f))

print("\n2x^2 + xy + 3y^2 and its mirror lie in one genus:")
print("  same_genus =", same_genus(QuadForm.binary(2, 1, 3), QuadForm.binary(2, -1, 3)))

print("\nAll local genera with det class 3 * 2^nu at p = 2 (allowed nu skips 1):")
for nu in range(0, 7):
    rows = enumerate_local_genera(2, LocalSquareClass(2, nu, 3))
    summary = ", ".join(f"c2={label:+d}" for _, label in rows) or "none"
    print(f"  nu = {nu}: {len(rows)} genera  [{summary}]")

print("\np-masses are exact half-powers r * q^(k/2); densities are rational:")
for nu in (0, 2, 3, 5):
    for sym, _ in enumerate_local_genera(2, LocalSquareClass(2, nu, 3)):
        m = p_mass(sym)
        print(
            f"  nu={nu}: p-mass = {m.coeff} * 2^({m.half_exponent}/2)"
            f"   1/beta = {local_density_inverse(sym)}"
        )
        break

print("\nAt a good odd prime, 1/beta = p / |SO(F_p)| (Hensel):")
g = QuadForm.binary(1, 0, 1)
for p in (3, 5, 7):
    n = count_SO_mod_p(g, p)
    sym = jordan_split_odd(g, p)
    print(f"  p={p}: |SO(F_p)| = {n}, 1/beta = {local_density_inverse(sym)} = {p}/{n}")
