"""Formed lattices: Z^n with its skew form and augmentation, exact integer
linear algebra, and the groups T_n, Q_n, T_n[2] acting on them.

Matrices are tuples of row tuples of Python ints, so there is no fixed-width
overflow anywhere. A matrix acts on column vectors.

The form on Z^n is <e_i, e_j> = sign(j - i) and phi(e_i) = 1. Under the
block sum Z^a + Z^b this is exactly the twisted sum form
<x+x', y+y'> = <x,y> + <x',y'> + phi(x)phi(y') - phi(y)phi(x').
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


class DimensionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# matrix helpers


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise DimensionError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x?")
    cols = list(zip(*b)) if b else []
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Matrix, v: Sequence[int]) -> Vector:
    if a and len(a[0]) != len(v):
        raise DimensionError(f"matrix has {len(a[0])} columns, vector has length {len(v)}")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def block_sum(a: Matrix, b: Matrix) -> Matrix:
    na, nb = len(a), len(b)
    top = tuple(tuple(row) + (0,) * nb for row in a)
    bottom = tuple((0,) * na + tuple(row) for row in b)
    return top + bottom


def determinant(a: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def unit_vector(n: int, i: int) -> Vector:
    """e_i in Z^n, 1-indexed like the standard basis e_1, ..., e_n."""
    if not 1 <= i <= n:
        raise DimensionError(f"e_{i} does not exist in Z^{n}")
    return tuple(int(j == i - 1) for j in range(n))


# ---------------------------------------------------------------------------
# the formed module


@dataclass(frozen=True)
class FormedModule:
    """Z^rank with the standard skew form and phi = sum of coordinates."""

    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")

    def _check(self, *vectors: Sequence[int]) -> None:
        for v in vectors:
            if len(v) != self.rank:
                raise DimensionError(f"vector of length {len(v)} in a rank {self.rank} module")

    def pairing(self, u: Sequence[int], v: Sequence[int]) -> int:
        self._check(u, v)
        # sum_{i<j} (u_i v_j - u_j v_i) in one pass via prefix sums
        total, pu, pv = 0, 0, 0
        for a, b in zip(u, v):
            total += pu * b - pv * a
            pu += a
            pv += b
        return total

    def phi(self, u: Sequence[int]) -> int:
        self._check(u)
        return sum(u)

    def gram(self) -> Matrix:
        n = self.rank
        return tuple(tuple((i < j) - (i > j) for j in range(n)) for i in range(n))


def form_pairing(m: FormedModule, u: Sequence[int], v: Sequence[int]) -> int:
    return m.pairing(u, v)


def phi(m: FormedModule, u: Sequence[int]) -> int:
    return m.phi(u)


def pairing(u: Sequence[int], v: Sequence[int]) -> int:
    """Standard form on Z^len(u)."""
    if len(u) != len(v):
        raise DimensionError("vectors of different lengths")
    return FormedModule(len(u)).pairing(u, v)


def distinguished_vector(n: int) -> Vector:
    """v_n = e_1 - e_2 + ... + (-1)^(n-1) e_n, fixed by all of T_n."""
    if n < 1:
        raise ValueError("v_n is defined for n >= 1")
    return tuple((-1) ** i for i in range(n))


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """Elementary divisors d_1 | d_2 | ... padded with zeros to min(rows, cols)."""

    diagonal: tuple[int, ...]
    rank: int

    @property
    def divisors(self) -> tuple[int, ...]:
        return self.diagonal[: self.rank]


def _min_pivot(a: list[list[int]], t: int):
    best = None
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Elementary divisors of an integer matrix.

    Pivots on a nonzero entry of minimal absolute value (ties: lowest row,
    then column), clears its row and column by Euclidean steps, and repairs
    divisibility by folding an offending row into the pivot row.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    size = min(rows, cols)
    diag: list[int] = []
    for t in range(size):
        while True:
            piv = _min_pivot(a, t)
            if piv is None:
                break
            _, pi, pj = piv
            a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, cols):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, rows):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            rb, rt = a[bad], a[t]
            for j in range(t, cols):
                rt[j] += rb[j]
        if _min_pivot(a, t) is None:
            break
        diag.append(abs(a[t][t]))
    rank = len(diag)
    return SmithDecomposition(tuple(diag) + (0,) * (size - rank), rank)


def is_partial_basis(vectors: Sequence[Sequence[int]], ambient: FormedModule | int) -> bool:
    """True iff the vectors extend to a Z-basis of Z^n (empty list: vacuously)."""
    n = ambient.rank if isinstance(ambient, FormedModule) else int(ambient)
    vectors = [tuple(v) for v in vectors]
    if len(vectors) > n:
        raise DimensionError(f"{len(vectors)} vectors cannot be part of a basis of Z^{n}")
    for v in vectors:
        if len(v) != n:
            raise DimensionError(f"vector of length {len(v)} in Z^{n}")
    if not vectors:
        return True
    # same criterion as smith_normal_form(vectors): rank k and all divisors 1
    return _kernels.is_primitive(vectors, n)


# ---------------------------------------------------------------------------
# group elements


class Level(enum.Enum):
    """Certification levels, finest first: T[2] < Q < T."""

    NOT_IN_T = "not_in_T"
    T = "T"
    Q = "Q"
    T2 = "T[2]"

    def __str__(self) -> str:
        return self.value


_ORDER = {Level.T2: 0, Level.Q: 1, Level.T: 2}


def _is_permutation_mod2(a: Matrix) -> bool:
    n = len(a)
    seen = set()
    for row in a:
        ones = [j for j, x in enumerate(row) if x % 2]
        if len(ones) != 1 or ones[0] in seen:
            return False
        seen.add(ones[0])
    return len(seen) == n


def classify_element(m: Sequence[Sequence[int]]) -> Level:
    """Finest group among T_n, Q_n, T_n[2] containing m, checked on basis vectors."""
    a = as_matrix(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionError("classify_element needs a square matrix")
    if any(sum(col) != 1 for col in zip(*a)) and n:
        return Level.NOT_IN_T
    gram = FormedModule(n).gram()
    if matmul(matmul(transpose(a), gram), a) != gram:
        return Level.NOT_IN_T
    if abs(determinant(a)) != 1:
        return Level.NOT_IN_T
    if all((a[i][j] - (i == j)) % 2 == 0 for i in range(n) for j in range(n)):
        return Level.T2
    if _is_permutation_mod2(a):
        return Level.Q
    return Level.T


@dataclass(frozen=True)
class GroupElement:
    """A matrix certified (by verification, not provenance) to lie in T_n."""

    matrix: Matrix
    level: Level

    @classmethod
    def certify(cls, m: Sequence[Sequence[int]]) -> "GroupElement":
        a = as_matrix(m)
        level = classify_element(a)
        if level is Level.NOT_IN_T:
            raise ValueError("matrix does not preserve the form and phi invertibly")
        return cls(a, level)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(matmul(self.matrix, other.matrix), meet(self.level, other.level))

    def apply(self, v: Sequence[int]) -> Vector:
        return matvec(self.matrix, v)


def meet(a: Level, b: Level) -> Level:
    """Smallest of T[2] < Q < T containing both levels."""
    if Level.NOT_IN_T in (a, b):
        raise ValueError("uncertified element")
    return a if _ORDER[a] >= _ORDER[b] else b


def monoidal_sum(m: GroupElement, m2: GroupElement) -> GroupElement:
    """Block sum; the result preserves the twisted sum form on Z^(a+b)."""
    if not isinstance(m, GroupElement) or not isinstance(m2, GroupElement):
        raise TypeError("monoidal_sum takes certified GroupElements")
    level = meet(m.level, m2.level)
    return GroupElement(block_sum(m.matrix, m2.matrix), level)


class Convention(enum.Enum):
    EQ31 = "eq31"
    EQ32 = "eq32"


def braiding(n: int, m: int, convention: Convention | str = Convention.EQ31) -> GroupElement:
    """Matrix of the braiding Z^n + Z^m -> Z^m + Z^n.

    eq31: (x, y) -> (y + 2 phi(x) v_m, (-1)^m x)
    eq32: (x, y) -> ((-1)^n y, x + (-1)^(n+1) 2 phi(y) v_n)

    braiding(m, n, eq32) is the inverse of braiding(n, m, eq31).
    """
    if n < 0 or m < 0:
        raise ValueError("ranks must be nonnegative")
    convention = Convention(convention)
    size = n + m
    a = [[0] * size for _ in range(size)]
    if convention is Convention.EQ31:
        vm = distinguished_vector(m) if m else ()
        sign = (-1) ** m
        for j in range(n):  # image of x = e_j
            for i in range(m):
                a[i][j] = 2 * vm[i]
            a[m + j][j] = sign
        for j in range(m):  # image of y = e_j
            a[j][n + j] = 1
    else:
        vn = distinguished_vector(n) if n else ()
        sign = (-1) ** n
        corr = 2 * (-1) ** (n + 1)
        for j in range(n):
            a[m + j][j] = 1
        for j in range(m):
            a[j][n + j] = sign
            for i in range(n):
                a[m + i][n + j] = corr * vn[i]
    mat = as_matrix(a)
    level = classify_element(mat)
    if level not in (Level.Q, Level.T2):
        raise AssertionError(f"braiding({n},{m},{convention.value}) left Q_n")
    return GroupElement(mat, level)


def restricted_gram(n: int) -> Matrix:
    """Gram matrix of the form on ker(phi) in the basis f_i = e_i - e_(i+1)."""
    fm = FormedModule(n)
    basis = [tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1)]
    return tuple(tuple(fm.pairing(u, v) for v in basis) for u in basis)


def restricted_action(m: Sequence[Sequence[int]]) -> Matrix:
    """Matrix of m on ker(phi) in the basis f_i = e_i - e_(i+1).

    f-coordinates of a sum-zero vector are its partial sums.
    """
    a = as_matrix(m)
    n = len(a)
    cols = []
    for j in range(n - 1):
        image = [a[r][j] - a[r][j + 1] for r in range(n)]
        coords, acc = [], 0
        for r in range(n - 1):
            acc += image[r]
            coords.append(acc)
        if acc + image[n - 1] != 0:
            raise ValueError("matrix does not preserve ker(phi)")
        cols.append(coords)
    return tuple(tuple(cols[j][i] for j in range(n - 1)) for i in range(n - 1))


def transvection(u: Sequence[int], k: int = 1) -> Matrix:
    """x -> x + k <u, x> u. Lies in T_n when phi(u) = 0."""
    n = len(u)
    if sum(u) != 0:
        raise ValueError("transvection vector must lie in ker(phi)")
    fm = FormedModule(n)
    cols = []
    for j in range(n):
        e = unit_vector(n, j + 1)
        c = k * fm.pairing(u, e)
        cols.append([e[i] + c * u[i] for i in range(n)])
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# JSON: integers as decimal strings


def matrix_to_json(m: Sequence[Sequence[int]]) -> list[list[str]]:
    return [[str(int(x)) for x in row] for row in m]


def matrix_from_json(data) -> Matrix:
    if isinstance(data, str):
        data = json.loads(data)
    return tuple(tuple(int(x) for x in row) for row in data)


def vector_to_json(v: Sequence[int]) -> list[str]:
    return [str(int(x)) for x in v]


def vector_from_json(data) -> Vector:
    if isinstance(data, str):
        data = json.loads(data)
    return tuple(int(x) for x in data)
