"""Pure-Python column reduction. Reference implementation for the compiled core."""
from __future__ import annotations

from typing import Sequence

Column = Sequence[tuple[int, int]]


def reduce_columns(columns: Sequence[Column], nrows: int, modulus: int = 0):
    """Eliminate every column that can be reduced to a unit lowest entry.

    Column operations with +-1 pivots are unimodular, so the input matrix is
    equivalent to I_k + R where k is the returned pivot count and R is the
    residual (a list of {row: value} dicts with zero entries on every pivot
    row). modulus 0 works over Z, modulus p over F_p.
    """
    pivots: dict[int, dict[int, int]] = {}
    residual: list[dict[int, int]] = []
    p = modulus
    for col in columns:
        c: dict[int, int] = {}
        for r, v in col:
            if not 0 <= r < nrows:
                raise IndexError(f"row {r} out of range")
            v = c.get(r, 0) + v
            if p:
                v %= p
            if v:
                c[r] = v
            else:
                c.pop(r, None)
        while c:
            low = max(c)
            piv = pivots.get(low)
            if piv is None:
                break
            _axpy(c, piv, c[low] * _inverse_unit(piv[low], p), p)
        if not c:
            continue
        low = max(c)
        if p or c[low] in (1, -1):
            pivots[low] = c
        else:
            residual.append(c)
    for c in residual:
        # a pivot with lowest row r only touches rows <= r: sweep downwards
        while True:
            hits = [r for r in c if r in pivots]
            if not hits:
                break
            r = max(hits)
            piv = pivots[r]
            _axpy(c, piv, c[r] * _inverse_unit(piv[r], p), p)
    return len(pivots), residual


def _inverse_unit(u: int, p: int) -> int:
    if p:
        return pow(u, -1, p)
    return u  # +-1 is its own inverse


def _axpy(c: dict[int, int], piv: dict[int, int], q: int, p: int) -> None:
    """c -= q * piv, in place."""
    for r, v in piv.items():
        x = c.get(r, 0) - q * v
        if p:
            x %= p
        if x:
            c[r] = x
        else:
            c.pop(r, None)


def is_primitive(rows: Sequence[Sequence[int]], ncols: int) -> bool:
    """Do the rows extend to a basis of Z^ncols?

    Equivalent to: rank = len(rows) and every elementary divisor is 1.
    Reduces with minimal-absolute-value pivots and stops at the first
    pivot that cannot be made a unit.
    """
    a = [list(r) for r in rows]
    k = len(a)
    if k > ncols:
        return False
    for t in range(k):
        while True:
            best = None
            for i in range(t, k):
                for j in range(t, ncols):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return False
            _, pi, pj = best
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            p = a[t][t]
            if p in (1, -1):
                break
            # reduce row t and column t; a nonzero remainder becomes a smaller pivot
            dirty = False
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for i in range(t, k):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
            for i in range(t + 1, k):
                q = a[i][t] // p
                if q:
                    for j in range(t, ncols):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    dirty = True
            if not dirty:
                # first invariant factor is gcd(p, rest): fold in a row p does not divide
                for i in range(t + 1, k):
                    for j in range(t + 1, ncols):
                        if a[i][j] % p:
                            for c in range(t, ncols):
                                a[t][c] += a[i][c]
                            dirty = True
                            break
                    if dirty:
                        break
                if not dirty:
                    return False
        # unit pivot: clear its row and column
        p = a[t][t]
        for i in range(t + 1, k):
            q = a[i][t] * p
            if q:
                for j in range(t, ncols):
                    a[i][j] -= q * a[t][j]
        for j in range(t + 1, ncols):
            a[t][j] = 0
    return True
