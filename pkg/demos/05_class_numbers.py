"""From exact total masses to the analytic class number formula for
imaginary quadratic fields.

Run: python demos/05_class_numbers.py
"""
from qfmass import (
    class_number,
    dirichlet_check,
    genus_census,
    kappa,
    kneser_counts,
    total_mass_numeric,
)

print("Census masses vs the closed formula kappa(S) sqrt(S)/(4 pi) L(1, chi):")
for S in (3, 4, 23, 48):
    res = total_mass_numeric(S, 10**5)
    print(
        f"  S={S}: census = {res['census']}, kappa = {kappa(S)},"
        f" formula = {res['rhs']:.10f}, rel err = {res['rel_err']:.2e}"
    )

print("\nClass numbers from the census:")
for D in (-3, -4, -23, -163):
    print(f"  h({D}) = {class_number(D)}")

print("\nDirichlet's formula h = w sqrt(|D|) L(1, chi_D) / (2 pi), L Abel-summed:")
for D in (-3, -4, -15, -23):
    res = dirichlet_check(D, 10**5)
    print(
        f"  D={D}: h = {res['h']}, w = {res['w']},"
        f" predicted = {res['predicted']:.8f}, rel err = {res['rel_err']:.2e}"
    )

print("\nIdeal classes across both definite signatures, with automorphism orders:")
for D in (-4, -23):
    res = kneser_counts(D)
    print(
        f"  D={D}: |G| = {res['G_order']}, aut orders = {res['aut_orders']},"
        f" uniform-claim 2|mu| = {res['claimed_aut_order']},"
        f" exceptions = {res['aut_discrepancies']}"
    )

print("\nGenus structure of a multi-genus determinant (S = 48):")
rep = genus_census(48)
for i, g in enumerate(rep.genera):
    print(f"  genus {i}: classes {[f.abc for f in g.classes]}, mass {g.mass}")
print("  total:", rep.total_mass)
