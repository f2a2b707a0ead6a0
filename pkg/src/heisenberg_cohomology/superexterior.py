"""Normal-form arithmetic in the super-exterior algebra of a superspace.

A superspace here is just a pair of dimensions: `even_count` generators
e_0, ..., e_{n-1} of parity 0 and `odd_count` generators o_0, ..., o_{m-1}
of parity 1.  In the super-exterior algebra the even generators
anticommute with each other and square to zero, odd generators commute
with each other (so arbitrary powers survive), and an even generator
anticommutes past an odd one.  Every product therefore reduces to a
rational combination of normal-form monomials

    e_{i_1} * ... * e_{i_k} * o_0^{a_0} * ... * o_{m-1}^{a_{m-1}},

with i_1 < ... < i_k, which is the basis enumerated and paired below.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, Tuple, NamedTuple, Union

Rational = Union[int, Fraction]


class SuperSpaceDims(NamedTuple):
    """Dimensions (even_count, odd_count) of a superspace."""

    even_count: int
    odd_count: int


class SuperMonomial:
    """A normal-form basis monomial of the super-exterior algebra.

    `even_set` is a strictly increasing tuple of even generator indices;
    `odd_exponents[j]` is the power of the j-th odd generator.  The tuple
    length of `odd_exponents` fixes the odd dimension the monomial lives
    over, so monomials over different superspaces never compare equal.
    """

    __slots__ = ("even_set", "odd_exponents", "even_mask")

    def __init__(self, even_set: Iterable[int] = (), odd_exponents: Iterable[int] = ()):
        even_set = tuple(even_set)
        odd_exponents = tuple(odd_exponents)
        mask = 0
        for i in even_set:
            if i < 0:
                raise ValueError("even generator indices must be nonnegative")
            bit = 1 << i
            if bit <= mask:
                raise ValueError("even indices must be strictly increasing")
            mask |= bit
        if any(a < 0 for a in odd_exponents):
            raise ValueError("odd exponents must be nonnegative")
        self.even_set = even_set
        self.odd_exponents = odd_exponents
        self.even_mask = mask

    @property
    def even_degree(self) -> int:
        return len(self.even_set)

    @property
    def odd_degree(self) -> int:
        return sum(self.odd_exponents)

    @property
    def degree(self) -> int:
        return len(self.even_set) + sum(self.odd_exponents)

    @property
    def parity(self) -> int:
        return sum(self.odd_exponents) & 1

    def factors(self) -> Iterator[Tuple[str, int]]:
        """Canonical degree-1 factor sequence: evens ascending, then odds."""
        for i in self.even_set:
            yield ("e", i)
        for j, a in enumerate(self.odd_exponents):
            for _ in range(a):
                yield ("o", j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperMonomial):
            return NotImplemented
        return (self.even_set == other.even_set
                and self.odd_exponents == other.odd_exponents)

    def __hash__(self) -> int:
        return hash((self.even_set, self.odd_exponents))

    def __repr__(self) -> str:
        return "SuperMonomial(%r, %r)" % (self.even_set, self.odd_exponents)

    def __str__(self) -> str:
        parts = ["e%d" % i for i in self.even_set]
        for j, a in enumerate(self.odd_exponents):
            if a == 1:
                parts.append("o%d" % j)
            elif a > 1:
                parts.append("o%d^%d" % (j, a))
        return "*".join(parts) if parts else "1"


def monomial_sort_key(mono: SuperMonomial):
    """Sort key realizing the basis order used by enumerate_basis."""
    return (-len(mono.even_set), mono.even_set,
            tuple(-a for a in mono.odd_exponents))


def wedge_monomials(a: SuperMonomial, b: SuperMonomial):
    """Product of two normal-form monomials.

    Returns None when the product vanishes (a repeated even generator),
    otherwise (sign, monomial) with sign in {1, -1}: commuting the odd
    block of `a` past the even block of `b` costs one sign per crossing,
    and merging the two even blocks costs one sign per inversion.
    """
    if len(a.odd_exponents) != len(b.odd_exponents):
        raise ValueError("monomials live over different odd dimensions")
    if a.even_mask & b.even_mask:
        return None
    swaps = a.odd_degree * len(b.even_set)
    am = a.even_mask
    for j in b.even_set:
        swaps += (am >> (j + 1)).bit_count()
    evens = tuple(sorted(a.even_set + b.even_set))
    odds = tuple(x + y for x, y in zip(a.odd_exponents, b.odd_exponents))
    return (-1 if swaps & 1 else 1), SuperMonomial(evens, odds)


class SuperElement:
    """A homogeneous rational linear combination of SuperMonomials.

    Homogeneous means every monomial has the same total degree and the
    same parity (and lives over the same odd dimension); the zero
    element is the empty combination.  Instances are treated as
    immutable: do not mutate `terms` after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data = {}
        for mono, coeff in items:
            if not isinstance(mono, SuperMonomial):
                raise TypeError("keys must be SuperMonomials")
            coeff = Fraction(coeff)
            if mono in data:
                data[mono] += coeff
            else:
                data[mono] = coeff
        data = {m: c for m, c in data.items() if c}
        shapes = {(m.degree, m.parity, len(m.odd_exponents)) for m in data}
        if len(shapes) > 1:
            raise ValueError("inhomogeneous combination: %s" % sorted(shapes))
        self.terms = data

    @classmethod
    def zero(cls) -> "SuperElement":
        return cls()

    @classmethod
    def from_monomial(cls, mono: SuperMonomial, coeff: Rational = 1) -> "SuperElement":
        return cls({mono: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        """Common total degree of the terms; None for the zero element."""
        for m in self.terms:
            return m.degree
        return None

    @property
    def parity(self):
        for m in self.terms:
            return m.parity
        return None

    def coefficient(self, mono: SuperMonomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def __add__(self, other):
        if not isinstance(other, SuperElement):
            return NotImplemented
        merged = dict(self.terms)
        for m, c in other.terms.items():
            if m in merged:
                merged[m] += c
            else:
                merged[m] = c
        return SuperElement(merged)

    def __sub__(self, other):
        if not isinstance(other, SuperElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return SuperElement({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SuperElement):
            return wedge(self, other)
        if isinstance(other, (int, Fraction)):
            return SuperElement({m: c * other for m, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SuperElement({m: other * c for m, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "SuperElement(0)"
        bits = []
        for m in sorted(self.terms, key=monomial_sort_key):
            bits.append("%s*%s" % (self.terms[m], m))
        return "SuperElement(%s)" % " + ".join(bits)


def wedge(a: SuperElement, b: SuperElement) -> SuperElement:
    """Bilinear extension of the monomial product to elements."""
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            hit = wedge_monomials(ma, mb)
            if hit is None:
                continue
            sign, mono = hit
            c = ca * cb if sign > 0 else -ca * cb
            if mono in out:
                out[mono] += c
            else:
                out[mono] = c
    return SuperElement(out)


def _odd_exponent_vectors(total: int, m: int) -> Iterator[Tuple[int, ...]]:
    # descending lexicographic order on exponent tuples
    if m == 0:
        if total == 0:
            yield ()
        return
    if m == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _odd_exponent_vectors(total - first, m - 1):
            yield (first,) + rest


def enumerate_basis(dims: SuperSpaceDims, q: int):
    """Degree-q basis monomials over `dims`, in the canonical order.

    The order is: more even factors first, then even index sets in
    ascending lexicographic order, then odd exponent tuples in
    descending lexicographic order.  enumerate_basis(dims, q) always has
    graded_dim(dims, q) entries.
    """
    n, m = dims
    if n < 0 or m < 0:
        raise ValueError("dimensions must be nonnegative")
    out = []
    if q < 0:
        return out
    for q0 in range(min(q, n), -1, -1):
        q1 = q - q0
        if m == 0 and q1 > 0:
            continue
        for evens in combinations(range(n), q0):
            for alpha in _odd_exponent_vectors(q1, m):
                out.append(SuperMonomial(evens, alpha))
    return out


def _sym_dim(m: int, p: int) -> int:
    # monomials of degree p in m commuting variables
    if p < 0:
        return 0
    if p == 0:
        return 1
    return comb(m + p - 1, p)


def graded_dim(dims: SuperSpaceDims, q: int) -> int:
    """Dimension of the degree-q component over `dims`."""
    n, m = dims
    if n < 0 or m < 0:
        raise ValueError("dimensions must be nonnegative")
    if q < 0:
        return 0
    total = 0
    for p in range(q + 1):
        if q - p <= n:
            total += comb(n, q - p) * _sym_dim(m, p)
    return total


def _det(mat) -> int:
    """Determinant of a small square integer matrix (fraction-free)."""
    k = len(mat)
    if k == 0:
        return 1
    m = [list(row) for row in mat]
    prev = 1
    sign = 1
    for c in range(k):
        piv = next((r for r in range(c, k) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        for r in range(c + 1, k):
            a = m[r][c]
            for j in range(c + 1, k):
                num = p * m[r][j] - a * m[c][j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact division in determinant")
                m[r][j] = q
            m[r][c] = 0
        prev = p
    return sign * m[k - 1][k - 1]


def _permanent(mat, row: int = 0) -> int:
    """Permanent of a small square integer matrix.

    Expands along `row` (top-level only); which row is chosen must not
    change the value, which the tests exercise directly.
    """
    k = len(mat)
    if k == 0:
        return 1
    if row < 0 or row >= k:
        raise IndexError("expansion row out of range")
    total = 0
    rest = [r for i, r in enumerate(mat) if i != row]
    for j in range(k):
        a = mat[row][j]
        if not a:
            continue
        minor = [r[:j] + r[j + 1:] for r in rest]
        total += a * _permanent(minor)
    return total


def _odd_sequence(mono: SuperMonomial) -> Tuple[int, ...]:
    return tuple(j for j, a in enumerate(mono.odd_exponents) for _ in range(a))


def dual_pairing(alpha: SuperMonomial, u: SuperMonomial) -> Fraction:
    """Pair a dual-basis monomial `alpha` against a primal monomial `u`.

    The value factors as a determinant over the even blocks times a
    permanent over the odd blocks; on normal forms this makes the Gram
    matrix diagonal with entries prod_j (odd exponent_j)!.
    """
    if len(alpha.odd_exponents) != len(u.odd_exponents):
        raise ValueError("monomials live over different odd dimensions")
    if len(alpha.even_set) != len(u.even_set):
        return Fraction(0)
    if alpha.odd_degree != u.odd_degree:
        return Fraction(0)
    even = [[1 if i == j else 0 for j in u.even_set] for i in alpha.even_set]
    arow = _odd_sequence(alpha)
    ucol = _odd_sequence(u)
    odd = [[1 if i == j else 0 for j in ucol] for i in arow]
    return Fraction(_det(even) * _permanent(odd))


def element_pairing(dual: SuperElement, primal: SuperElement) -> Fraction:
    """Bilinear extension of dual_pairing."""
    total = Fraction(0)
    for ma, ca in dual.terms.items():
        for mu, cu in primal.terms.items():
            val = dual_pairing(ma, mu)
            if val:
                total += ca * cu * val
    return total
