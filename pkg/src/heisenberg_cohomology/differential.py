"""The coboundary operator on super-exterior cochains, and the wedge maps
used by the odd-center family.

For a Lie superalgebra with dual degree-1 generators f_0, ..., f_{d-1}

    d f_k = - sum_{i<j} c_{ij}^k f_i f_j - (1/2) sum_{i odd} c_{ii}^k f_i f_i,

extended to higher degrees as a degree-+1 derivation: on a normal-form
monomial with canonical factor sequence g_1, ..., g_q

    d(g_1 ... g_q) = sum_t (-1)^{t-1} g_1 ... g_{t-1} (d g_t) g_{t+1} ... g_q.

The halved coefficient on odd self-brackets matches the dual pairing, in
which <o^2, y ^ y> = 2; tests check the whole convention against the
alternating-sum formula for <d omega, a_0 ^ ... ^ a_q>.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from .algebra import LieSuperalgebra, ODD, make_heisenberg_odd
from .linalg import RationalMatrix
from .superexterior import (SuperElement, SuperMonomial, SuperSpaceDims,
                            enumerate_basis, wedge, wedge_monomials)


def _dual_monomial(algebra: LieSuperalgebra, i: int) -> SuperMonomial:
    """Degree-1 dual monomial of generator i, over the algebra's dual dims."""
    n0, n1 = algebra.superdim
    if algebra.parity(i) == ODD:
        pos = algebra.odd_indices.index(i)
        exps = [0] * n1
        exps[pos] = 1
        return SuperMonomial((), exps)
    pos = algebra.even_indices.index(i)
    return SuperMonomial((pos,), (0,) * n1)


def d_generator(algebra: LieSuperalgebra, k: int) -> SuperElement:
    """Coboundary of the k-th dual generator, as a degree-2 element."""
    if not 0 <= k < algebra.dim:
        raise ValueError("generator index %d out of range" % k)
    out: Dict[SuperMonomial, Fraction] = {}
    for (i, j), targets in algebra.brackets.items():
        c = targets.get(k)
        if c is None:
            continue
        fi = _dual_monomial(algebra, i)
        fj = _dual_monomial(algebra, j)
        if i == j:
            # odd self-bracket: <o^2, y ^ y> = 2 forces the 1/2
            sign, mono = wedge_monomials(fi, fj)
            coeff = -Fraction(c, 2) * sign
        else:
            sign, mono = wedge_monomials(fi, fj)
            coeff = -c * sign
        out[mono] = out.get(mono, Fraction(0)) + coeff
    return SuperElement(out)


def _slot_table(algebra: LieSuperalgebra) -> Dict[Tuple[str, int], SuperElement]:
    table = {}
    for pos, gi in enumerate(algebra.even_indices):
        table[("e", pos)] = d_generator(algebra, gi)
    for pos, gi in enumerate(algebra.odd_indices):
        table[("o", pos)] = d_generator(algebra, gi)
    return table


def _subsequence_monomial(factors, n1: int) -> SuperMonomial:
    # a subsequence of a canonical factor sequence is itself canonical
    evens = []
    exps = [0] * n1
    for kind, idx in factors:
        if kind == "e":
            evens.append(idx)
        else:
            exps[idx] += 1
    return SuperMonomial(tuple(evens), tuple(exps))


def _d_monomial(mono: SuperMonomial, table, n1: int) -> SuperElement:
    factors = list(mono.factors())
    total = SuperElement.zero()
    for t, f in enumerate(factors):
        df = table[f]
        if df.is_zero():
            continue
        prefix = _subsequence_monomial(factors[:t], n1)
        suffix = _subsequence_monomial(factors[t + 1:], n1)
        term = wedge(SuperElement.from_monomial(prefix),
                     wedge(df, SuperElement.from_monomial(suffix)))
        total = total + (term if t % 2 == 0 else -term)
    return total


def d_element(algebra: LieSuperalgebra, elem: SuperElement) -> SuperElement:
    """Coboundary of a homogeneous element."""
    table = _slot_table(algebra)
    n1 = algebra.superdim[1]
    total = SuperElement.zero()
    for mono, coeff in elem.terms.items():
        total = total + coeff * _d_monomial(mono, table, n1)
    return total


@dataclass(frozen=True)
class DifferentialMatrix:
    """d_q : C^q -> C^{q+1} over the canonical bases of both sides."""

    q: int
    domain: Tuple[SuperMonomial, ...]
    codomain: Tuple[SuperMonomial, ...]
    matrix: RationalMatrix


def differential_matrix(algebra: LieSuperalgebra, q: int) -> DifferentialMatrix:
    """Matrix of the coboundary in degree q (columns indexed by C^q)."""
    if q < 0:
        raise ValueError("degree must be nonnegative")
    dims = SuperSpaceDims(*algebra.superdim)
    domain = tuple(enumerate_basis(dims, q))
    codomain = tuple(enumerate_basis(dims, q + 1))
    row_index = {m: r for r, m in enumerate(codomain)}
    table = _slot_table(algebra)
    n1 = dims.odd_count
    columns = []
    for mono in domain:
        image = _d_monomial(mono, table, n1)
        columns.append({row_index[m]: c for m, c in image.terms.items()})
    mat = RationalMatrix.from_columns(len(codomain), columns)
    return DifferentialMatrix(q, domain, codomain, mat)


def tau(n: int, l: int) -> SuperElement:
    """The element tau_{(n,l)} = d((z-dual)^l) for the odd-center family h_n.

    Built directly as l * (sum_i o_i e_i) * (z-dual)^{l-1} over dual dims
    (n, n+1) with the z-dual as the last odd slot, then checked against
    the coboundary of (z-dual)^l; the two must agree.
    """
    if n < 1 or l < 1:
        raise ValueError("tau needs n >= 1 and l >= 1")
    base = {}
    for i in range(n):
        exps = [0] * (n + 1)
        exps[i] = 1
        base[SuperMonomial((i,), exps)] = -1
    tau1 = SuperElement(base)
    zpow = SuperElement.from_monomial(SuperMonomial((), (0,) * n + (l - 1,)))
    out = l * wedge(tau1, zpow)
    alg = make_heisenberg_odd(n)
    zl = SuperElement.from_monomial(SuperMonomial((), (0,) * n + (l,)))
    if d_element(alg, zl) != out:
        raise AssertionError("tau(%d, %d) disagrees with d((z-dual)^%d)" % (n, l, l))
    return out


def psi_matrix(t: int, n: int, l: int) -> RationalMatrix:
    """Right multiplication by tau_{(n,l)} on z-dual-free cochains.

    Domain: degree-t monomials over dims (n, n); codomain: degree-(t+2)
    monomials over (n, n), the constant (z-dual)^{l-1} factor dropped.
    For t < 0 the domain is empty.
    """
    if n < 1 or l < 1:
        raise ValueError("psi needs n >= 1 and l >= 1")
    free = SuperSpaceDims(n, n)
    codomain = enumerate_basis(free, t + 2)
    row_index = {m: r for r, m in enumerate(codomain)}
    if t < 0:
        return RationalMatrix(len(codomain), 0)
    domain = enumerate_basis(free, t)
    tau_elem = tau(n, l)
    columns = []
    for mono in domain:
        lifted = SuperMonomial(mono.even_set, mono.odd_exponents + (0,))
        image = wedge(SuperElement.from_monomial(lifted), tau_elem)
        col = {}
        for m2, c in image.terms.items():
            if m2.odd_exponents[n] != l - 1:
                raise AssertionError("unexpected z-dual power in psi image")
            dropped = SuperMonomial(m2.even_set, m2.odd_exponents[:n])
            col[row_index[dropped]] = c
        columns.append(col)
    return RationalMatrix.from_columns(len(codomain), columns)
