"""Pure-Python fraction-free elimination over the integers.

This is the fallback used when the compiled ``_ckernels`` extension is not
available. Both implementations must return identical results.
"""


def eliminate(rows, ncols):
    """Bareiss elimination of an integer matrix given as a list of rows.

    Pivots are taken as the first nonzero entry, scanning columns left to
    right and rows top to bottom. Every intermediate entry is a minor of the
    input, so the division by the previous pivot is exact.

    Returns ``(rank, last_pivot, sign)``. For a square full-rank input the
    determinant is ``sign * last_pivot``. The input is not modified.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    prev = 1
    sign = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = rank
        while piv < nrows and not m[piv][col]:
            piv += 1
        if piv == nrows:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            sign = -sign
        prow = m[rank]
        p = prow[col]
        for r in range(rank + 1, nrows):
            row = m[r]
            a = row[col]
            if a:
                for c in range(col + 1, ncols):
                    row[c] = (p * row[c] - a * prow[c]) // prev
            elif p != prev:
                for c in range(col + 1, ncols):
                    row[c] = (p * row[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank, prev, sign
