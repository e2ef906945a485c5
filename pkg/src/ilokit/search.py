"""Backtracking search over Cayley tables.

Cells are filled in row-major order with ascending values, so tables come
out in lexicographic order of their flattened form.  Identities are checked
on partial tables: the working table is padded with an extra row and column
of ``-1`` so that looking up an unknown entry (``-1``) lands on the padding
and stays unknown.  An identity only rejects a partial table when both of
its sides are known and differ.
"""

from __future__ import annotations

from typing import Callable, Iterator, Mapping, Optional, Sequence

import numpy as np

__all__ = ["search_tables", "Identity", "identity_checker", "SELF_DISTRIBUTIVE", "MEDIAL"]

# An identity maps the padded table to a pair of arrays (lhs, rhs).
Identity = Callable[[np.ndarray, int], tuple]


def _grid(n, k):
    return np.ix_(*([np.arange(n)] * k))


def SELF_DISTRIBUTIVE(t, n):
    x, y, z = _grid(n, 3)
    return t[t[x, y], z], t[t[x, z], t[y, z]]


def MEDIAL(t, n):
    x, x2, y, y2 = _grid(n, 4)
    return t[t[x, x2], t[y, y2]], t[t[x, y], t[x2, y2]]


def identity_checker(identities: Sequence[Identity], n: int) -> Callable[[np.ndarray], bool]:
    def ok(t: np.ndarray) -> bool:
        for ident in identities:
            lhs, rhs = ident(t, n)
            if ((lhs != rhs) & (lhs >= 0) & (rhs >= 0)).any():
                return False
        return True

    return ok


def search_tables(
    n: int,
    *,
    fixed: Optional[Mapping[tuple, int]] = None,
    distinct_cols: bool = False,
    distinct_rows: bool = False,
    identities: Sequence[Identity] = (),
    accept: Optional[Callable[[np.ndarray], bool]] = None,
) -> Iterator[tuple]:
    """Yield every n x n table (as a flat row-major tuple) meeting the constraints.

    ``fixed`` pins cells to values; ``distinct_cols``/``distinct_rows`` ask
    for every column/row to be injective; ``identities`` are checked on
    partial tables after each assignment; ``accept`` is a final filter on the
    complete (unpadded) table.
    """
    fixed = dict(fixed or {})
    N = n * n
    full = (1 << n) - 1
    reserved_col = [0] * n
    reserved_row = [0] * n
    for (a, b), v in fixed.items():
        reserved_col[b] |= 1 << v
        reserved_row[a] |= 1 << v
    allowed = []
    for pos in range(N):
        a, b = divmod(pos, n)
        if (a, b) in fixed:
            allowed.append(1 << fixed[a, b])
            continue
        mask = full
        if distinct_cols:
            mask &= ~reserved_col[b]
        if distinct_rows:
            mask &= ~reserved_row[a]
        allowed.append(mask)
    # fixed cells must not clash with each other
    if distinct_cols or distinct_rows:
        seen_c, seen_r = {}, {}
        for (a, b), v in fixed.items():
            if distinct_cols and seen_c.setdefault((b, v), a) != a:
                return
            if distinct_rows and seen_r.setdefault((a, v), b) != b:
                return
    choices = [[v for v in range(n) if allowed[p] >> v & 1] for p in range(N)]

    check = identity_checker(identities, n) if identities else None
    padded = np.full((n + 1, n + 1), -1, dtype=np.int64)
    flat = [-1] * N
    colmask = [0] * n
    rowmask = [0] * n
    nxt = [0] * (N + 1)
    pos = 0
    while pos >= 0:
        if pos == N:
            table = tuple(flat)
            if accept is None or accept(np.array(table, dtype=np.int64).reshape(n, n)):
                yield table
            pos -= 1
            continue
        a, b = divmod(pos, n)
        v = flat[pos]
        if v >= 0:
            colmask[b] ^= 1 << v
            rowmask[a] ^= 1 << v
            flat[pos] = -1
            padded[a, b] = -1
        opts = choices[pos]
        k = nxt[pos]
        placed = False
        while k < len(opts):
            v = opts[k]
            k += 1
            bit = 1 << v
            if distinct_cols and colmask[b] & bit:
                continue
            if distinct_rows and rowmask[a] & bit:
                continue
            if check is not None:
                padded[a, b] = v
                if not check(padded):
                    padded[a, b] = -1
                    continue
            padded[a, b] = v
            flat[pos] = v
            colmask[b] |= bit
            rowmask[a] |= bit
            placed = True
            break
        if placed:
            nxt[pos] = k
            pos += 1
            nxt[pos] = 0
        else:
            nxt[pos] = 0
            pos -= 1
