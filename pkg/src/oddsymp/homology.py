"""Exact simplicial homology over Q, F_2 and Z.

Boundary matrices are stored column-major as tuples of (row, value).
Each matrix goes through the column-reduction kernel once per
coefficient ring: unit pivots are eliminated there, and only the small
residual block (entries that are not +-1) needs Bareiss elimination or a
Smith normal form.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels
from .complexes import FiniteComplex, destab_faces
from .lattice import smith_normal_form

Column = tuple[tuple[int, int], ...]


class Coefficients(enum.Enum):
    Q = "Q"
    F2 = "F2"
    Z = "Z"


class NotClosedError(ValueError):
    """A face of some simplex is missing from the complex."""


@dataclass(frozen=True)
class ChainComplexData:
    """counts[d] is the number of d-simplices; boundaries[d] is the
    matrix of the boundary C_d -> C_(d-1) for d >= 1 (boundaries[0] is empty)."""

    counts: tuple[int, ...]
    boundaries: tuple[tuple[Column, ...], ...]

    @property
    def top_degree(self) -> int:
        return len(self.counts) - 1

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.counts))

    def check_square_zero(self) -> None:
        for d in range(2, len(self.boundaries)):
            lower = self.boundaries[d - 1]
            for j, col in enumerate(self.boundaries[d]):
                acc: dict[int, int] = {}
                for r, v in col:
                    for r2, v2 in lower[r]:
                        acc[r2] = acc.get(r2, 0) + v * v2
                if any(acc.values()):
                    raise AssertionError(f"boundary squared is nonzero on column {j} in degree {d}")


def chain_complex(fc: FiniteComplex, verify: bool = True) -> ChainComplexData:
    """Simplicial chains of fc with the alternating-sum boundary.

    Face i deletes entry i of a simplex. For the destabilisation complex
    the faces are taken from destab_faces and looked up by vector, so the
    twisted face maps are what is actually used.
    """
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for s in fc.simplices:
        by_dim.setdefault(len(s) - 1, []).append(s)
    top = max(by_dim, default=-1)
    layers = [by_dim.get(d, []) for d in range(top + 1)]
    position = [{s: i for i, s in enumerate(layer)} for layer in layers]
    twisted = fc.family == "W_Q"
    boundaries: list[tuple[Column, ...]] = [()]
    for d in range(1, top + 1):
        cols = []
        lower = position[d - 1]
        for s in layers[d]:
            if twisted:
                faces = [fc.key(f) for f in destab_faces(fc.vectors(s))]
            else:
                faces = [s[:i] + s[i + 1 :] for i in range(len(s))]
            col = []
            for i, f in enumerate(faces):
                row = lower.get(f) if f is not None else None
                if row is None:
                    raise NotClosedError(f"face {i} of simplex {s} is not in the complex")
                col.append((row, -1 if i % 2 else 1))
            cols.append(tuple(col))
        boundaries.append(tuple(cols))
    cc = ChainComplexData(tuple(len(layer) for layer in layers), tuple(boundaries))
    if verify:
        cc.check_square_zero()
    return cc


def cone(fc: FiniteComplex) -> FiniteComplex:
    """Join with a new apex vertex, placed last in every simplex.

    The apex is a zero vector one entry longer than any existing vertex,
    so it cannot collide with them.
    """
    width = max((len(v) for v in fc.vertices), default=0) + 1
    apex = len(fc.vertices)
    simplices = list(fc.simplices) + [(apex,)] + [s + (apex,) for s in fc.simplices]
    simplices.sort(key=lambda s: (len(s), s))
    return FiniteComplex(
        family=f"cone({fc.family})",
        n=fc.n,
        box=fc.box,
        vertices=fc.vertices + ((0,) * width,),
        simplices=tuple(simplices),
        ordered=fc.ordered,
    )


# ---------------------------------------------------------------------------
# rank and Smith form of sparse integer matrices


def _dense(residual: Sequence[dict[int, int]]) -> list[list[int]]:
    rows = sorted({r for c in residual for r in c})
    pos = {r: i for i, r in enumerate(rows)}
    m = [[0] * len(residual) for _ in rows]
    for j, c in enumerate(residual):
        for r, v in c.items():
            m[pos[r]][j] = v
    return m


def bareiss_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination."""
    a = [list(r) for r in m]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, nrows):
            x = a[r][c]
            row = a[r]
            top = a[rank]
            for k in range(c, ncols):
                row[k] = (p * row[k] - x * top[k]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass(frozen=True)
class MatrixInvariants:
    rank: int
    divisors: tuple[int, ...] = ()  # elementary divisors > 1 (integer case only)


def matrix_invariants(cols: Sequence[Column], nrows: int, coefficients: Coefficients) -> MatrixInvariants:
    if not cols or nrows == 0:
        return MatrixInvariants(0)
    if coefficients is Coefficients.F2:
        npiv, residual = _kernels.reduce_columns(cols, nrows, 2)
        return MatrixInvariants(npiv)
    npiv, residual = _kernels.reduce_columns(cols, nrows, 0)
    if not residual:
        return MatrixInvariants(npiv)
    dense = _dense(residual)
    if coefficients is Coefficients.Q:
        return MatrixInvariants(npiv + bareiss_rank(dense))
    snf = smith_normal_form(dense)
    return MatrixInvariants(npiv + snf.rank, tuple(d for d in snf.divisors if d > 1))


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class HomologyReport:
    """Per-degree homology. Lists are indexed from `first_degree`, which is
    -1 for reduced homology (so the empty complex has H_(-1) = Z) and 0
    otherwise. Fields for coefficient rings that were not requested are None.
    connectivity is None when reduced homology vanishes in every degree."""

    reduced: bool
    first_degree: int
    counts: tuple[int, ...]
    betti_q: tuple[int, ...]
    betti_f2: tuple[int, ...] | None = None
    torsion: tuple[tuple[int, ...], ...] | None = None
    euler_ok: bool = True
    connectivity: int | None = None

    def betti(self, d: int) -> int:
        return self.betti_q[d - self.first_degree]

    def torsion_in(self, d: int) -> tuple[int, ...]:
        if self.torsion is None:
            raise ValueError("integral torsion was not computed")
        return self.torsion[d - self.first_degree]

    def as_dict(self) -> dict:
        degrees = list(range(self.first_degree, self.first_degree + len(self.betti_q)))
        return {
            "reduced": self.reduced,
            "degrees": degrees,
            "simplex_counts": list(self.counts),
            "betti_Q": list(self.betti_q),
            "betti_F2": None if self.betti_f2 is None else list(self.betti_f2),
            "torsion_Z": None if self.torsion is None else [list(t) for t in self.torsion],
            "euler_ok": self.euler_ok,
            "connectivity": self.connectivity,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    def table(self) -> str:
        lines = ["deg  #simp  betti_Q  betti_F2  torsion"]
        for i, b in enumerate(self.betti_q):
            d = self.first_degree + i
            f2 = "-" if self.betti_f2 is None else str(self.betti_f2[i])
            tor = "-" if self.torsion is None else (",".join(f"Z/{t}" for t in self.torsion[i]) or "0")
            lines.append(f"{d:>3}  {self.counts[i]:>5}  {b:>7}  {f2:>8}  {tor}")
        lines.append(f"connectivity {self.connectivity}")
        return "\n".join(lines)


def homology(
    cc: ChainComplexData,
    coefficients: Iterable[Coefficients | str] | Coefficients | str = ("Q", "F2", "Z"),
    reduced: bool = True,
) -> HomologyReport:
    """Betti numbers over Q (always), and over F_2 and Z when requested.

    Reduced homology uses the augmentation C_0 -> Z as the boundary in
    degree 0. Connectivity is the largest c with vanishing (reduced)
    homology in all degrees <= c, read from integral homology when it was
    computed and from rational homology otherwise.
    """
    if isinstance(coefficients, (str, Coefficients)):
        coefficients = [coefficients]
    wanted = {Coefficients(c) for c in coefficients} | {Coefficients.Q}

    counts = list(cc.counts)
    bounds = [list(b) for b in cc.boundaries]
    if reduced:
        aug = tuple(((0, 1),) for _ in range(counts[0] if counts else 0))
        counts = [1] + counts
        bounds = [[]] + [list(aug)] + bounds[1:]
        first = -1
    else:
        first = 0
    top = len(counts)

    def invariants(ring: Coefficients) -> list[MatrixInvariants]:
        # inv[k] describes the boundary out of position k (into k-1)
        inv = [MatrixInvariants(0)]
        for k in range(1, top):
            inv.append(matrix_invariants(bounds[k], counts[k - 1], ring))
        inv.append(MatrixInvariants(0))
        return inv

    def betti(inv: list[MatrixInvariants]) -> tuple[int, ...]:
        return tuple(counts[k] - inv[k].rank - inv[k + 1].rank for k in range(top))

    inv_q = invariants(Coefficients.Q)
    betti_q = betti(inv_q)
    betti_f2 = betti(invariants(Coefficients.F2)) if Coefficients.F2 in wanted else None
    torsion = None
    if Coefficients.Z in wanted:
        inv_z = invariants(Coefficients.Z)
        if betti(inv_z) != betti_q:
            raise AssertionError("integral and rational ranks disagree")
        torsion = tuple(inv_z[k + 1].divisors for k in range(top))

    chi_chains = sum((-1) ** (k + first) * c for k, c in enumerate(counts))
    chi_betti = sum((-1) ** (k + first) * b for k, b in enumerate(betti_q))

    # connectivity is a reduced notion: shift an unreduced H_0 by one
    red = list(betti_q)
    if not reduced:
        red = [1 if not cc.counts or cc.counts[0] == 0 else 0] + red
        if cc.counts and cc.counts[0]:
            red[1] -= 1
    conn: int | None = None
    for k, b in enumerate(red):
        tor = torsion is not None and k - 1 >= first and torsion[k - 1 - first]
        if b or tor:
            conn = k - 2
            break
    return HomologyReport(
        reduced=reduced,
        first_degree=first,
        counts=tuple(counts),
        betti_q=betti_q,
        betti_f2=betti_f2,
        torsion=torsion,
        euler_ok=chi_chains == chi_betti,
        connectivity=conn,
    )
