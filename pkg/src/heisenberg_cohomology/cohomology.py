"""Betti numbers from exact ranks of the coboundary matrices.

dim H^q = dim ker d_q - rank d_{q-1}, all over the rationals.  Matrix
sizes are capped (default 5000 columns) so a typo in q cannot silently
start a week-long elimination; the cap is an explicit, overridable
refusal, not a truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .algebra import LieSuperalgebra
from .differential import differential_matrix
from .linalg import rank
from .superexterior import SuperSpaceDims, graded_dim

DEFAULT_COLUMN_CAP = 5000

METHOD_RANK = "rank"
METHOD_FORMULA_EVEN = "formula-even"
METHOD_FORMULA_ODD_PROOF = "formula-odd-proof"
METHOD_FORMULA_ODD_DISPLAYED = "formula-odd-displayed"
METHODS = (METHOD_RANK, METHOD_FORMULA_EVEN, METHOD_FORMULA_ODD_PROOF,
           METHOD_FORMULA_ODD_DISPLAYED)


class ColumnCapExceeded(RuntimeError):
    """Refusal to build a coboundary matrix wider than the cap."""

    def __init__(self, algebra_name: str, q: int, columns: int, cap: int):
        super().__init__(
            "refusing %s at q=%d: matrix has %d columns, cap is %d "
            "(raise the cap to force the computation)"
            % (algebra_name, q, columns, cap))
        self.algebra_name = algebra_name
        self.q = q
        self.columns = columns
        self.cap = cap


@dataclass(frozen=True)
class CohomologyReport:
    """Dimension bookkeeping for one cohomological degree."""

    algebra_name: str
    q: int
    dim_cochain: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError("unknown method %r" % self.method)
        ok = (0 <= self.dim_cohomology
              and 0 <= self.dim_coboundaries
              and self.dim_cocycles <= self.dim_cochain
              and self.dim_cohomology == self.dim_cocycles - self.dim_coboundaries)
        if not ok:
            raise ValueError("inconsistent dimensions in %r" % (self,))


def _checked_rank(algebra: LieSuperalgebra, q: int, cap: int):
    """(dim C^q, rank d_q), refusing oversized matrices."""
    if q < 0:
        return 0, 0
    dims = SuperSpaceDims(*algebra.superdim)
    columns = graded_dim(dims, q)
    if columns > cap:
        raise ColumnCapExceeded(algebra.name, q, columns, cap)
    dm = differential_matrix(algebra, q)
    r = rank(dm.matrix)
    if r + (dm.matrix.cols - r) != columns:
        raise AssertionError("rank/nullity bookkeeping failed at q=%d" % q)
    return columns, r


def cohomology_dims(algebra: LieSuperalgebra, q: int,
                    column_cap: int = DEFAULT_COLUMN_CAP) -> CohomologyReport:
    """Betti data in a single degree, via exact ranks."""
    if q < 0:
        return CohomologyReport(algebra.name, q, 0, 0, 0, 0, METHOD_RANK)
    dim_c, rank_q = _checked_rank(algebra, q, column_cap)
    _, rank_prev = _checked_rank(algebra, q - 1, column_cap)
    z = dim_c - rank_q
    return CohomologyReport(algebra.name, q, dim_c, z, rank_prev,
                            z - rank_prev, METHOD_RANK)


def betti_table(algebra: LieSuperalgebra, q_max: int,
                column_cap: int = DEFAULT_COLUMN_CAP) -> List[CohomologyReport]:
    """Betti data for q = 0..q_max, computing each coboundary rank once.

    Also cross-checks dim H^q = dim Z^q + dim Z^{q-1} - dim C^{q-1} in
    every degree.
    """
    if q_max < 0:
        raise ValueError("q_max must be nonnegative")
    dim_c = {-1: 0}
    rk = {-1: 0}
    z = {-1: 0}
    for q in range(q_max + 1):
        dim_c[q], rk[q] = _checked_rank(algebra, q, column_cap)
        z[q] = dim_c[q] - rk[q]
    out = []
    for q in range(q_max + 1):
        h = z[q] - rk[q - 1]
        if h != z[q] + z[q - 1] - dim_c[q - 1]:
            raise AssertionError("cocycle/cochain dimension identity failed at q=%d" % q)
        out.append(CohomologyReport(algebra.name, q, dim_c[q], z[q],
                                    rk[q - 1], h, METHOD_RANK))
    return out
