"""Arithmetic in the super-exterior algebra of a (n0|n1) superspace.

Even dual generators e_i anticommute and square to zero; odd dual
generators o_j commute with everything odd and carry arbitrary powers.
The monomial basis is e_S * o^alpha, and the pairing with primal wedge
words is a determinant on the even block times a permanent on the odd
block, so the Gram matrix on basis monomials is diagonal with
factorial entries.
"""

from heisenberg_cohomology import (SuperElement, SuperMonomial,
                                   SuperSpaceDims, dual_pairing,
                                   enumerate_basis, graded_dim, wedge)


def element(evens, odds, coeff=1):
    return SuperElement.from_monomial(SuperMonomial(evens, odds), coeff)


def main():
    dims = SuperSpaceDims(2, 2)

    print("degree-2 basis of a (2|2) superspace:")
    basis = enumerate_basis(dims, 2)
    print(" ", " ".join(str(m) for m in basis))
    print("  count:", len(basis), "== graded_dim:", graded_dim(dims, 2))
    print()

    e0 = element((0,), (0, 0))
    e1 = element((1,), (0, 0))
    o0 = element((), (1, 0))
    o1 = element((), (0, 1))

    print("signs and squares:")
    print("  e0 ^ e1      =", e0 * e1)
    print("  e1 ^ e0      =", e1 * e0)
    print("  e0 ^ e0      =", e0 * e0)
    print("  o0 ^ o0      =", o0 * o0)
    print("  (e0+e1)^2    =", (e0 + e1) * (e0 + e1))
    print("  (o0+o1)^2    =", (o0 + o1) * (o0 + o1))
    try:
        e0 + o0
    except ValueError as exc:
        print("  e0 + o0 is rejected (parity-homogeneous elements only):")
        print("   ", exc)
    print()

    print("associativity on a sample:")
    a, b, c = o0 + 2 * o1, e1 * (o0 - o1), wedge(e0, o0)
    print("  (a*b)*c == a*(b*c):", (a * b) * c == a * (b * c))
    print()

    print("dual pairing Gram matrix on the degree-2 basis:")
    for row in basis:
        print(" ", [str(dual_pairing(row, col)) for col in basis])
    print("  (o_j^2 rows pick up 2! = 2)")


if __name__ == "__main__":
    main()
