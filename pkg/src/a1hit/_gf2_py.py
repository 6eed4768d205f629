"""Pure-Python GF(2) row reduction on int bitsets (bit j = column j)."""

from __future__ import annotations

from typing import Iterable


def rref_bits(rows: Iterable[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row-echelon basis of the GF(2) span of ``rows``.

    Returns ``(basis, pivots)``: the nonzero reduced rows ordered by pivot
    column, and the matching pivot columns.  RREF is unique, so the output
    depends only on the row space.
    """
    pivot_row: dict[int, int] = {}
    # phase 1: echelon form; each stored row's lowest set bit is its pivot
    for row in rows:
        while row:
            col = (row & -row).bit_length() - 1
            other = pivot_row.get(col)
            if other is None:
                pivot_row[col] = row
                break
            row ^= other
    cols = sorted(pivot_row)
    # phase 2: back-substitute, highest pivot first, to clear pivot columns
    # from the remaining rows (rows already processed are fully reduced)
    for col in reversed(cols):
        rest = pivot_row[col] ^ (1 << col)
        acc = 1 << col
        while rest:
            low = rest & -rest
            other = pivot_row.get(low.bit_length() - 1)
            if other is None:
                acc |= low
                rest ^= low
            else:
                rest ^= other
        pivot_row[col] = acc
    return [pivot_row[c] for c in cols], cols
