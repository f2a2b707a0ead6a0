"""Finite-dimensional Lie superalgebras presented by structure constants.

A LieSuperalgebra stores an ordered list of named generators, each of
parity 0 (even) or 1 (odd), and a sparse table of brackets

    [g_i, g_j] = sum_k c_{ij}^k g_k        (stored only for i <= j),

with rational coefficients.  Brackets for i > j are derived from super
skew-symmetry, [x, y] = -(-1)^{|x||y|} [y, x].  The two families built
here are the Heisenberg superalgebras: an even-center family h_{n,m}
and an odd-center family h_n, both two-step nilpotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

EVEN = 0
ODD = 1


@dataclass(frozen=True)
class Generator:
    name: str
    index: int
    parity: int


class LieSuperalgebra:
    """Immutable structure-constant presentation of a Lie superalgebra.

    `generators` is a sequence of (name, parity) pairs; `brackets` maps
    index pairs (i, j) with i <= j to {target_index: coefficient}.  The
    constructor normalizes coefficients to Fraction and drops zeros but
    does not check the axioms; use validate() for that.
    """

    __slots__ = ("name", "generators", "brackets", "_index_by_name",
                 "even_indices", "odd_indices")

    def __init__(self, name: str, generators: Iterable, brackets: Mapping):
        gens = []
        for idx, g in enumerate(generators):
            if isinstance(g, Generator):
                if g.index != idx:
                    raise ValueError("generator %r listed at position %d" % (g, idx))
                gens.append(g)
            else:
                gname, parity = g
                gens.append(Generator(str(gname), idx, int(parity)))
        if not gens:
            raise ValueError("an algebra needs at least one generator")
        by_name = {}
        for g in gens:
            if g.parity not in (EVEN, ODD):
                raise ValueError("parity of %r must be 0 or 1" % g.name)
            if g.name in by_name:
                raise ValueError("duplicate generator name %r" % g.name)
            by_name[g.name] = g.index
        dim = len(gens)
        table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for (i, j), targets in brackets.items():
            if not (0 <= i <= j < dim):
                raise ValueError("bracket pair (%d, %d) out of range or unordered" % (i, j))
            cleaned = {}
            for k, c in targets.items():
                if not 0 <= k < dim:
                    raise ValueError("bracket target %d out of range" % k)
                c = Fraction(c)
                if c:
                    cleaned[k] = c
            if cleaned:
                table[(i, j)] = cleaned
        self.name = str(name)
        self.generators = tuple(gens)
        self.brackets = table
        self._index_by_name = by_name
        self.even_indices = tuple(g.index for g in gens if g.parity == EVEN)
        self.odd_indices = tuple(g.index for g in gens if g.parity == ODD)

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def superdim(self) -> Tuple[int, int]:
        """(number of even generators, number of odd generators)."""
        return (len(self.even_indices), len(self.odd_indices))

    def parity(self, i: int) -> int:
        return self.generators[i].parity

    def index_of(self, name: str) -> int:
        try:
            return self._index_by_name[name]
        except KeyError:
            raise ValueError("unknown generator name %r" % name) from None

    def bracket(self, i: int, j: int) -> Dict[int, Fraction]:
        """[g_i, g_j] as {target: coefficient}, for any index order."""
        if i <= j:
            return dict(self.brackets.get((i, j), {}))
        base = self.brackets.get((j, i), {})
        # [x, y] = -(-1)^{|x||y|} [y, x]: symmetric only for odd-odd
        if self.parity(i) and self.parity(j):
            return dict(base)
        return {k: -c for k, c in base.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieSuperalgebra):
            return NotImplemented
        return (self.name == other.name
                and self.generators == other.generators
                and self.brackets == other.brackets)

    def __repr__(self) -> str:
        n0, n1 = self.superdim
        return "LieSuperalgebra(%r, dim=(%d|%d), brackets=%d)" % (
            self.name, n0, n1, len(self.brackets))


def _jacobi_defect(alg: LieSuperalgebra, a: int, b: int, c: int) -> Dict[int, Fraction]:
    """Left side of the graded Jacobi identity on (a, b, c); {} if it holds.

    Computes (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]]
    + (-1)^{|c||b|}[c,[a,b]] as a coefficient map.
    """
    out: Dict[int, Fraction] = {}
    for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
        sign = -1 if alg.parity(x) * alg.parity(z) else 1
        for k, ck in alg.bracket(y, z).items():
            for l, cl in alg.bracket(x, k).items():
                out[l] = out.get(l, Fraction(0)) + sign * ck * cl
    return {l: v for l, v in out.items() if v}


def validate(alg: LieSuperalgebra) -> list:
    """Check the Lie-superalgebra axioms; returns violation messages.

    Checks: no even generator has a nonzero self-bracket (skew-symmetry),
    every bracket is parity-homogeneous, and the graded Jacobi identity
    holds on all generator triples.  An empty list means the table is a
    genuine Lie superalgebra.
    """
    issues = []
    names = [g.name for g in alg.generators]
    for (i, j), targets in sorted(alg.brackets.items()):
        if i == j and alg.parity(i) == EVEN:
            issues.append("skew-symmetry: even generator %r has a nonzero self-bracket"
                          % names[i])
        want = (alg.parity(i) + alg.parity(j)) % 2
        for k in sorted(targets):
            if alg.parity(k) != want:
                issues.append("parity: [%s, %s] -> %s is not parity-homogeneous"
                              % (names[i], names[j], names[k]))
    d = alg.dim
    for a in range(d):
        for b in range(a, d):
            for c in range(b, d):
                defect = _jacobi_defect(alg, a, b, c)
                if defect:
                    terms = " + ".join("%s*%s" % (v, names[l])
                                       for l, v in sorted(defect.items()))
                    issues.append("jacobi: (%s, %s, %s) leaves %s"
                                  % (names[a], names[b], names[c], terms))
    return issues


def make_heisenberg_even(n: int, m: int) -> LieSuperalgebra:
    """Heisenberg superalgebra h_{n,m} with even central element z.

    Generators: z (even), x_1..x_{2n} (even), y_1..y_m (odd); brackets
    [x_i, x_{n+i}] = z and [y_j, y_j] = z.  Superdimension (2n+1 | m).
    """
    if n < 1 or m < 1:
        raise ValueError("h_{n,m} needs n >= 1 and m >= 1")
    gens = [("z", EVEN)]
    gens += [("x%d" % i, EVEN) for i in range(1, 2 * n + 1)]
    gens += [("y%d" % j, ODD) for j in range(1, m + 1)]
    brackets = {(i, n + i): {0: 1} for i in range(1, n + 1)}
    for j in range(1, m + 1):
        brackets[(2 * n + j, 2 * n + j)] = {0: 1}
    alg = LieSuperalgebra("h_{%d,%d}" % (n, m), gens, brackets)
    bad = validate(alg)
    if bad:
        raise AssertionError("h_{%d,%d} failed validation: %s" % (n, m, bad))
    return alg


def make_heisenberg_odd(n: int) -> LieSuperalgebra:
    """Heisenberg superalgebra h_n with odd central element z.

    Generators: x_1..x_n (even), y_1..y_n (odd), z (odd); brackets
    [x_i, y_i] = z.  Superdimension (n | n+1).
    """
    if n < 1:
        raise ValueError("h_n needs n >= 1")
    gens = [("x%d" % i, EVEN) for i in range(1, n + 1)]
    gens += [("y%d" % i, ODD) for i in range(1, n + 1)]
    gens.append(("z", ODD))
    brackets = {(i - 1, n + i - 1): {2 * n: 1} for i in range(1, n + 1)}
    alg = LieSuperalgebra("h_%d" % n, gens, brackets)
    bad = validate(alg)
    if bad:
        raise AssertionError("h_%d failed validation: %s" % (n, bad))
    return alg
