"""Walk through the coefficient sequences behind the relativistic expansion.

Four integer sequences control every series in the package: the Catalan
numbers a_j and three convolution sequences b_j, c_j, d_j derived from them.
This script tabulates the first few values, checks the six combinatorial
identities exactly, and shows the generating functions converging to their
closed forms inside the unit ball and failing outside it.
"""

from fwblock import coeffs
from fwblock.coeffs import CoeffKind, IdentityKind, SeriesKind


def main():
    print("coefficient tables")
    print("   j :      a_j       b_j       c_j       d_j")
    for j in range(11):
        row = [int(coeffs.coeff(kind, j)) for kind in (CoeffKind.A, CoeffKind.B, CoeffKind.C, CoeffKind.D)]
        print(f"  {j:2d} : {row[0]:8d}  {row[1]:8d}  {row[2]:8d}  {row[3]:8d}")
    print()
    print("  a_j are the Catalan numbers; b_j = (2j-1) a_(j-1);")
    print("  c_j and d_j are the two- and three-fold convolutions.")
    print()

    print("combinatorial identities, exact integer arithmetic up to j = 200")
    for kind in IdentityKind:
        records = coeffs.verify_identity(kind, 200)
        status = "holds" if all(r["pass"] for r in records) else "FAILS"
        print(f"  identity {kind.value}: {status} over {len(records)} indices")
    print()

    print("generating functions: partial sums vs closed forms")
    for x in (0.5, 0.9):
        closed = coeffs.closed_form(SeriesKind.FA, x)
        print(f"  x = {x}: closed form {closed:+.12f}")
        for terms in (5, 10, 20, 40):
            partial = coeffs.partial_sum(SeriesKind.FA, x, terms)
            print(f"    {terms:3d} terms -> {partial:+.12f}   error {abs(partial - closed):.2e}")
    print()

    x = 1.25
    closed = coeffs.closed_form(SeriesKind.SQRT, x)
    print(f"outside the radius (x = {x}) the closed form is finite ({closed:.6f})")
    print("but the partial sums run away:")
    for terms in (5, 15, 30, 60):
        partial = coeffs.partial_sum(SeriesKind.SQRT, x, terms)
        print(f"    {terms:3d} terms -> {partial:+.6e}")


if __name__ == "__main__":
    main()
