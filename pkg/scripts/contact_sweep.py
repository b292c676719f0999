"""Sweep contact covectors on su(2) and verify the closed-form Jacobi pair.

Every nonzero eta = mu1 e^1 + mu2 e^2 + mu3 e^3 with integer coefficients in
a symmetric range is a contact form on su(2); the associated Jacobi pair is
    r  = sum_i lambda^i (cyclic bivector),   lambda^i = -mu_i / |mu|^2,
    X0 = sum_i mu_i e_i / |mu|^2.
The script checks both formulas exactly on the whole grid and prints a table.
"""

import argparse
from fractions import Fraction
from itertools import product

from liejacobi.catalog import catalog
from liejacobi.exterior import Form, Multivector
from liejacobi.jacobi import ContactStructure, check_jacobi, contact_to_jacobi


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=2,
                    help="coefficients range over [-bound, bound] (default 2)")
    ap.add_argument("--quiet", action="store_true",
                    help="print only the summary line")
    args = ap.parse_args()

    su2 = catalog("su2")
    labels = list(su2.basis_labels)
    checked = 0
    for mu in product(range(-args.bound, args.bound + 1), repeat=3):
        if mu == (0, 0, 0):
            continue
        norm = Fraction(sum(m * m for m in mu))
        eta = Form.from_coeffs([Fraction(m) for m in mu])
        jp = contact_to_jacobi(ContactStructure(su2, eta))
        lam = [Fraction(-m) / norm for m in mu]
        expected_r = Multivector.from_terms(3, 2, {
            (1, 2): lam[0], (2, 0): lam[1], (0, 1): lam[2]})
        expected_x0 = Multivector.from_coeffs([Fraction(m) / norm for m in mu])
        assert jp.r == expected_r and jp.x0 == expected_x0
        assert check_jacobi(jp).passed
        checked += 1
        if not args.quiet:
            print(f"mu={mu!s:>12}  lambda=({lam[0]!s:>5}, {lam[1]!s:>5}, {lam[2]!s:>5})"
                  f"  X0 = {jp.x0.render(labels)}")
    print(f"verified {checked} contact covectors on su(2), all pairs exact")


if __name__ == "__main__":
    main()
