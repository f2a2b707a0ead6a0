"""The two Heisenberg families and the algebra file format.

h_{n,m} has an even central generator z, 2n even generators x_i with
[x_i, x_{n+i}] = z, and m odd generators y_j with [y_j, y_j] = z.
h_n has n even x_i, n odd y_i with [x_i, y_i] = z, and the center z is
odd.  Both are two-step nilpotent with a one-dimensional center.
"""

from heisenberg_cohomology import (make_heisenberg_even, make_heisenberg_odd,
                                   format_algebra, parse_algebra, validate)


def show(alg):
    evens = [g.name for g in alg.generators if g.parity == 0]
    odds = [g.name for g in alg.generators if g.parity == 1]
    print("%s  (dim %d|%d)" % (alg.name, alg.superdim[0], alg.superdim[1]))
    print("  even:", " ".join(evens))
    print("  odd: ", " ".join(odds))
    names = [g.name for g in alg.generators]
    for (i, j), targets in sorted(alg.brackets.items()):
        rhs = " + ".join("%s %s" % (c, names[k]) if c != 1 else names[k]
                         for k, c in sorted(targets.items()))
        print("  [%s, %s] = %s" % (names[i], names[j], rhs))
    print("  axiom violations:", validate(alg) or "none")
    print()


def main():
    show(make_heisenberg_even(1, 2))
    show(make_heisenberg_odd(2))

    print("the same data as a definition file:")
    text = format_algebra(make_heisenberg_odd(1))
    print(text)
    assert parse_algebra(text) == make_heisenberg_odd(1)
    print("parse(format(h_1)) == h_1: ok")


if __name__ == "__main__":
    main()
