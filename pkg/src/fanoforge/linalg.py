"""Exact sparse linear solving over the rationals.

Used by the bounded-degree ideal membership solver.  Solutions are never
trusted by callers: certificates are re-verified by exact polynomial
expansion, so this module only has to be correct about *in*consistency.
"""

from __future__ import annotations

from fractions import Fraction

try:  # gmpy2 rationals are several times faster than Fraction
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction


def solve_sparse(rows: list[dict[int, Fraction]], rhs: list[Fraction], ncols: int) -> list[Fraction] | None:
    """A particular solution of A x = b, or None when inconsistent.

    ``rows`` holds sparse equation rows (column -> coefficient).  Free
    variables are set to zero.
    """
    pivots: dict[int, tuple[dict[int, object], object]] = {}
    order: list[int] = []
    work = [({c: _mpq(v) for c, v in row.items() if v != 0}, _mpq(b))
            for row, b in zip(rows, rhs)]
    # denser rows last: they reduce further before creating a pivot
    work.sort(key=lambda rb: len(rb[0]))
    for row, b in work:
        # reduce against existing pivots until no pivot column remains
        while True:
            hit = None
            for c in row:
                if c in pivots:
                    hit = c
                    break
            if hit is None:
                break
            prow, pb = pivots[hit]
            factor = row.pop(hit)
            b -= factor * pb
            for c, v in prow.items():
                nv = row.get(c, 0) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            if b != 0:
                return None
            continue
        # normalize on the sparsest-looking column (smallest index is fine)
        pivot_col = min(row)
        inv = 1 / row[pivot_col]
        prow = {c: v * inv for c, v in row.items() if c != pivot_col}
        pivots[pivot_col] = (prow, b * inv)
        order.append(pivot_col)
    solution = [Fraction(0)] * ncols
    known: dict[int, object] = {}
    for col in reversed(order):
        prow, pb = pivots[col]
        value = pb
        for c, v in prow.items():
            other = known.get(c)
            if other is not None:
                value -= v * other
        known[col] = value
    for col, value in known.items():
        solution[col] = Fraction(value.numerator, value.denominator)
    return solution
