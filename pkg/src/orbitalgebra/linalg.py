"""Exact rank and kernel dimension over Q(λ).

Rows of Scalars are cleared to integer-coefficient polynomial rows, then
eliminated fraction-free (cross-multiplication instead of division) with
per-row content stripping to keep coefficients small. Pivot ties break to
the lowest row index, so results are deterministic.
"""

from __future__ import annotations

from .scalars import Coeffs, Scalar, _divexact, _gcd_poly, _mul, _sub


def _clear_row(row: list[Scalar]) -> list[Coeffs]:
    """Scale a Scalar row to integer polynomials (common denominator)."""
    lcm: Coeffs = (1,)
    for x in row:
        g = _gcd_poly(lcm, x.den)
        lcm = _mul(_divexact(lcm, g), x.den)
    out = []
    for x in row:
        out.append(_mul(x.num, _divexact(lcm, x.den)))
    return out


def _strip(row: list[Coeffs]) -> list[Coeffs]:
    g: Coeffs = ()
    for c in row:
        g = _gcd_poly(g, c)
        if g == (1,):
            return row
    if not g or g == (1,):
        return row
    return [_divexact(c, g) if c else () for c in row]


def poly_matrix_rank(rows: list[list[Coeffs]]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            entry = rows[r][col]
            if not entry:
                continue
            rows[r] = _strip(
                [
                    _sub(_mul(pv, rc), _mul(entry, pc))
                    for rc, pc in zip(rows[r], rows[rank])
                ]
            )
        rank += 1
        if rank == len(rows):
            break
    return rank


def matrix_rank(rows: list[list[Scalar]]) -> int:
    """Rank of a dense Scalar matrix (exact, no specialization)."""
    cleared = [_strip(_clear_row(r)) for r in rows]
    return poly_matrix_rank(cleared)


def kernel_dimension(rows: list[list[Scalar]], ncols: int) -> int:
    if not rows:
        return ncols
    return ncols - matrix_rank(rows)
