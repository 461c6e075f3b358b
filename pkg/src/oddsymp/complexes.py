"""Destabilisation complexes and their relatives, truncated to a coefficient box.

Families (all subcomplexes of Z_n):

* ``Z``  -- sets {u_0..u_p} with {u_0..u_p, v_n} a partial basis and the
  parity supports rho(u_i) pairwise disjoint
* ``Y``  -- Z-simplices with phi(u_i) = 0 and |rho(u_i)| = 2
* ``IX`` -- Y-simplices with <u_i, u_j> = 0
* ``X``  -- ordered tuples, phi(u_i) = 1, |rho(u_i)| = 1, <u_i, u_j> = 1 for i < j
* ``W_Q`` -- partial Q-bases: X-simplices together with full Q-bases

X and W_Q simplices are stored in their canonical order; Z, Y and IX
simplices are stored sorted by vertex index. Vertices are listed
lexicographically, so serialized complexes are reproducible byte for byte.
"""
from __future__ import annotations

import enum
import itertools
import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExceeded
from .lattice import (
    DimensionError,
    Vector,
    block_sum,
    braiding,
    distinguished_vector,
    identity,
    is_partial_basis,
    matvec,
    pairing,
)

DEFAULT_MAX_VERTICES = int(os.environ.get("ODDSYMP_MAX_VERTICES", 50_000))
DEFAULT_MAX_SIMPLICES = int(os.environ.get("ODDSYMP_MAX_SIMPLICES", 2_000_000))


class Family(enum.Enum):
    Z = "Z"
    Y = "Y"
    IX = "IX"
    X = "X"
    W_Q = "W_Q"

    @property
    def ordered(self) -> bool:
        return self in (Family.X, Family.W_Q)


def rho_set(u: Sequence[int]) -> frozenset[int]:
    """1-based positions of the odd coordinates."""
    return frozenset(i + 1 for i, a in enumerate(u) if a % 2)


def _check_lengths(n: int, vectors: Iterable[Sequence[int]]) -> None:
    for v in vectors:
        if len(v) != n:
            raise DimensionError(f"vector {tuple(v)} does not lie in Z^{n}")


def _disjoint(sets: Sequence[frozenset]) -> bool:
    seen: set = set()
    for s in sets:
        if seen & s:
            return False
        seen |= s
    return True


def vertex_predicate(family: Family | str, n: int, u: Sequence[int]) -> bool:
    family = Family(family)
    _check_lengths(n, [u])
    u = tuple(u)
    r = rho_set(u)
    s = sum(u)
    if family in (Family.Y, Family.IX):
        if s != 0 or len(r) != 2:
            return False
    elif family in (Family.X, Family.W_Q):
        if s != 1 or len(r) != 1:
            return False
    if n < 2 and family is not Family.W_Q:
        return False
    if family is Family.W_Q and n == 1:
        return u == (1,)
    return is_partial_basis([u, distinguished_vector(n)], n)


def _z_conditions(n: int, vectors: Sequence[Vector]) -> bool:
    if len(set(vectors)) != len(vectors):
        return False
    if len(vectors) + 1 > n:
        return False
    if not _disjoint([rho_set(u) for u in vectors]):
        return False
    return is_partial_basis(list(vectors) + [distinguished_vector(n)], n)


def _is_full_q_basis(n: int, vectors: Sequence[Vector]) -> bool:
    """(u_1..u_n) is the image of the standard basis under some A in Q_n."""
    if any(sum(u) != 1 or len(rho_set(u)) != 1 for u in vectors):
        return False
    if not _disjoint([rho_set(u) for u in vectors]):
        return False
    if any(pairing(vectors[i], vectors[j]) != 1 for i in range(n) for j in range(i + 1, n)):
        return False
    alt = tuple(sum((-1) ** i * u[k] for i, u in enumerate(vectors)) for k in range(n))
    if alt != distinguished_vector(n):
        return False
    return is_partial_basis(vectors, n)


def simplex_predicate(family: Family | str, n: int, vectors: Sequence[Sequence[int]]) -> bool:
    """Exact membership test; for X and W_Q the tuple order matters."""
    family = Family(family)
    vectors = [tuple(v) for v in vectors]
    _check_lengths(n, vectors)
    if not vectors:
        return True
    if family is Family.W_Q and len(vectors) == n:
        return _is_full_q_basis(n, vectors)
    if not all(vertex_predicate(family, n, u) for u in vectors):
        return False
    if family is Family.IX:
        if any(pairing(a, b) != 0 for a, b in itertools.combinations(vectors, 2)):
            return False
    elif family.ordered:
        if any(pairing(a, b) != 1 for a, b in itertools.combinations(vectors, 2)):
            return False
    return _z_conditions(n, vectors)


def canonical_orders(vectors: Sequence[Sequence[int]]) -> list[tuple[Vector, ...]]:
    """All orderings with <u_i, u_j> = 1 for i < j (there is at most one)."""
    vs = [tuple(v) for v in vectors]
    return [
        perm
        for perm in itertools.permutations(vs)
        if all(pairing(perm[i], perm[j]) == 1 for i in range(len(perm)) for j in range(i + 1, len(perm)))
    ]


# ---------------------------------------------------------------------------
# finite complexes


@dataclass(frozen=True)
class ComplexSpec:
    family: Family
    n: int
    box: int
    relative_to: tuple[Vector, ...] | None = None
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_simplices: int = DEFAULT_MAX_SIMPLICES
    # "orthogonal": W(sigma); "left": the left-link of sigma (X family only)
    relation: str = "orthogonal"

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.relation not in ("orthogonal", "left"):
            raise ValueError(f"unknown relation {self.relation!r}")
        if self.relation == "left" and (self.family is not Family.X or self.relative_to is None):
            raise ValueError("left-links are built for a simplex of the X family")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.box < 0:
            raise ValueError("box must be nonnegative")
        if self.max_vertices <= 0 or self.max_simplices <= 0:
            raise ValueError("budgets must be positive")
        if self.relative_to is not None:
            sigma = tuple(tuple(v) for v in self.relative_to)
            _check_lengths(self.n, sigma)
            if not _z_conditions(self.n, sigma):
                raise ValueError(f"relative simplex {sigma} is not a simplex of Z_{self.n}")
            object.__setattr__(self, "relative_to", sigma)


@dataclass(frozen=True)
class FiniteComplex:
    """Vertices and simplices (tuples of vertex indices), closed under faces."""

    family: str
    n: int
    box: int
    vertices: tuple[Vector, ...]
    simplices: tuple[tuple[int, ...], ...]
    ordered: bool = False
    relative_to: tuple[Vector, ...] | None = None
    _index: dict = field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_simplex_set", frozenset(self.simplices))

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dimension + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return tuple(counts)

    def index(self, v: Sequence[int]) -> int:
        return self._index[tuple(v)]

    def vectors(self, simplex: Sequence[int]) -> tuple[Vector, ...]:
        return tuple(self.vertices[i] for i in simplex)

    def key(self, vectors: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
        """Index tuple of a simplex given by vectors, or None if absent."""
        try:
            idx = tuple(self._index[tuple(v)] for v in vectors)
        except KeyError:
            return None
        if not self.ordered:
            idx = tuple(sorted(idx))
        return idx if idx in self._simplex_set else None

    def __contains__(self, vectors) -> bool:
        return self.key(vectors) is not None

    def simplex_vectors(self) -> set[tuple[Vector, ...]]:
        """Simplices as vector tuples (canonical order) or frozensets (unordered)."""
        if self.ordered:
            return {self.vectors(s) for s in self.simplices}
        return {frozenset(self.vectors(s)) for s in self.simplices}

    def is_closed(self) -> bool:
        sset = self._simplex_set
        for s in self.simplices:
            if len(s) > 1:
                for i in range(len(s)):
                    if s[:i] + s[i + 1 :] not in sset:
                        return False
        return True

    def to_json(self) -> str:
        data = {
            "family": self.family,
            "n": self.n,
            "box": self.box,
            "ordered": self.ordered,
            "relative_to": None if self.relative_to is None else [list(v) for v in self.relative_to],
            "vertices": [list(v) for v in self.vertices],
            "simplices": [list(s) for s in self.simplices],
        }
        return json.dumps(data, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "FiniteComplex":
        data = json.loads(text)
        rel = data.get("relative_to")
        return cls(
            family=data["family"],
            n=int(data["n"]),
            box=int(data["box"]),
            vertices=tuple(tuple(int(x) for x in v) for v in data["vertices"]),
            simplices=tuple(tuple(int(i) for i in s) for s in data["simplices"]),
            ordered=bool(data.get("ordered", False)),
            relative_to=None if rel is None else tuple(tuple(int(x) for x in v) for v in rel),
        )

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence], family: str = "abstract") -> "FiniteComplex":
        """Abstract simplicial complex generated by facets on hashable vertex labels."""
        facets = [tuple(sorted(f)) for f in facets]
        labels = sorted({v for f in facets for v in f})
        vertices = tuple(v if isinstance(v, tuple) else (v,) for v in labels)
        pos = {v: i for i, v in enumerate(labels)}
        simplices = set()
        for f in facets:
            idx = [pos[v] for v in f]
            for k in range(1, len(idx) + 1):
                simplices.update(itertools.combinations(idx, k))
        return cls(family, 0, 0, vertices, _sorted_simplices(simplices))


def _sorted_simplices(simplices: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(simplices, key=lambda s: (len(s), s)))


def _box_vectors(n: int, box: int):
    return itertools.product(range(-box, box + 1), repeat=n)


def build_complex(spec: ComplexSpec) -> FiniteComplex:
    """All simplices of the family whose vertices have entries in [-box, box].

    Relative variants W(sigma) keep the simplices tau of W with tau + sigma a
    simplex of Z_n and every vertex of tau orthogonal to every vertex of sigma.
    With relation="left" the result is the left-link of sigma in X_n: the
    tau with the concatenation tau.sigma an X-simplex.
    """
    fam, n, box = spec.family, spec.n, spec.box
    sigma = spec.relative_to or ()
    target = 1 if spec.relation == "left" else 0
    if spec.relation == "left" and not simplex_predicate(fam, n, sigma):
        raise ValueError(f"{sigma} is not a simplex of X_{n}")
    stats = {"family": fam.value, "n": n, "box": box, "vertices": 0, "simplices": 0}
    vertices: list[Vector] = []
    if box > 0 and n > 0:
        for u in _box_vectors(n, box):
            if not vertex_predicate(fam, n, u):
                continue
            if sigma:
                if u in sigma or any(pairing(u, s) != target for s in sigma):
                    continue
                if not _z_conditions(n, [u, *sigma]):
                    continue
            vertices.append(u)
            if len(vertices) > spec.max_vertices:
                stats["vertices"] = len(vertices)
                raise BudgetExceeded("vertex budget exceeded", stats)
    stats["vertices"] = len(vertices)
    rhos = [rho_set(v) for v in vertices]
    nv = len(vertices)
    vn = distinguished_vector(n) if n else ()

    # pairwise compatibility, cheap conditions only
    adj: list[set[int]] = [set() for _ in range(nv)]
    for a in range(nv):
        for b in range(nv):
            if a == b or (not fam.ordered and b < a):
                continue
            if rhos[a] & rhos[b]:
                continue
            p = pairing(vertices[a], vertices[b])
            if fam is Family.IX and p != 0:
                continue
            if fam.ordered and p != 1:
                continue
            adj[a].add(b)

    max_size = n - 1 - len(sigma)
    simplices: list[tuple[int, ...]] = []

    def accept(idx: tuple[int, ...]) -> bool:
        vecs = [vertices[i] for i in idx] + list(sigma)
        return is_partial_basis(vecs + [vn], n)

    def extend(idx: tuple[int, ...], cands: set[int]) -> None:
        simplices.append(idx)
        if len(simplices) > spec.max_simplices:
            stats["simplices"] = len(simplices)
            raise BudgetExceeded("simplex budget exceeded", stats)
        if len(idx) >= max_size:
            return
        for b in sorted(cands):
            new = idx + (b,)
            if accept(new):
                extend(new, cands & adj[b])

    for a in range(nv):
        extend((a,), set(adj[a]))

    if fam is Family.W_Q and not sigma and n >= 2:
        # top simplices: full Q-bases; their first n-1 entries form an (n-2)-simplex
        for s in [s for s in simplices if len(s) == n - 1]:
            for b in range(nv):
                if b not in s and _is_full_q_basis(n, [vertices[i] for i in s + (b,)]):
                    simplices.append(s + (b,))
    stats["simplices"] = len(simplices)
    return FiniteComplex(
        family=f"LLk({fam.value})" if spec.relation == "left" else fam.value,
        n=n,
        box=box,
        vertices=tuple(vertices),
        simplices=_sorted_simplices(simplices),
        ordered=fam.ordered,
        relative_to=tuple(sigma) if spec.relative_to is not None else None,
    )


# ---------------------------------------------------------------------------
# face maps of the destabilisation complex


def braid_inverse_action(simplex: Sequence[Sequence[int]], i: int) -> tuple[Vector, ...]:
    """(w, u_0, .., u_(i-1), u_(i+1), .., u_p) with
    w = 2u_0 - 2u_1 + ... +- 2u_(i-1) -+ u_i."""
    t = [tuple(v) for v in simplex]
    if not 0 < i < len(t):
        raise ValueError(f"braid action index {i} out of range for a {len(t) - 1}-simplex")
    n = len(t[0])
    w = tuple(
        sum(2 * (-1) ** k * t[k][c] for k in range(i)) + (-1) ** i * t[i][c] for c in range(n)
    )
    return (w,) + tuple(t[:i]) + tuple(t[i + 1 :])


def braid_inverse_action_matrix(simplex: Sequence[Sequence[int]], i: int) -> tuple[Vector, ...]:
    """Same as braid_inverse_action, computed from the braiding matrix.

    The inverse of the eq32 braiding b_(i,1) is the eq31 braiding b_(1,i);
    the new tuple is A(beta + id) restricted to the last p+1 basis vectors,
    i.e. entry k is sum_j beta[j][k] u_j.
    """
    t = [tuple(v) for v in simplex]
    p1 = len(t)
    beta = block_sum(braiding(1, i, "eq31").matrix, identity(p1 - 1 - i))
    n = len(t[0])
    out = []
    for k in range(p1):
        out.append(tuple(sum(beta[j][k] * t[j][c] for j in range(p1)) for c in range(n)))
    return tuple(out)


def destab_faces(simplex: Sequence[Sequence[int]]) -> list[tuple[Vector, ...]]:
    """Faces d_0, ..., d_p with d_0 dropping the first entry and d_i = d_0 b_(i,1)^-1."""
    t = tuple(tuple(v) for v in simplex)
    if not t:
        raise ValueError("the empty simplex has no faces")
    if len({len(v) for v in t}) != 1:
        raise ValueError("malformed simplex: vectors of different lengths")
    faces = [t[1:]]
    for i in range(1, len(t)):
        faces.append(braid_inverse_action(t, i)[1:])
    return faces


# ---------------------------------------------------------------------------
# links and the bracket construction


def _sub_complex(fc: FiniteComplex, simplex_vectors: Iterable[tuple[Vector, ...]], family: str):
    simplex_vectors = list(simplex_vectors)
    verts = sorted({v for s in simplex_vectors for v in s})
    pos = {v: i for i, v in enumerate(verts)}
    simplices = []
    for s in simplex_vectors:
        idx = tuple(pos[v] for v in s)
        simplices.append(idx if fc.ordered else tuple(sorted(idx)))
    return FiniteComplex(family, fc.n, fc.box, tuple(verts), _sorted_simplices(simplices), fc.ordered)


def left_link(fc: FiniteComplex, sigma: Sequence[Sequence[int]]) -> FiniteComplex:
    """Simplices tau with tau.sigma (concatenation) a simplex; plain link if unordered."""
    sigma = tuple(tuple(v) for v in sigma)
    if sigma not in fc:
        raise KeyError(f"{sigma} is not a simplex of the complex")
    k = len(sigma)
    found = []
    if fc.ordered:
        for s in fc.simplices:
            vecs = fc.vectors(s)
            if len(vecs) > k and vecs[-k:] == sigma:
                found.append(vecs[:-k])
    else:
        sset = frozenset(sigma)
        for s in fc.simplices:
            vecs = fc.vectors(s)
            if len(vecs) > k and sset <= set(vecs):
                found.append(tuple(v for v in vecs if v not in sset))
    return _sub_complex(fc, found, f"LLk({fc.family})")


def bracket(fc: FiniteComplex, labels: Iterable[Sequence[int] | int]) -> FiniteComplex:
    """W<S>: vertices W_0 x S (stored as the vertex followed by the label),
    simplices all label choices over simplices of W."""
    labels = sorted(tuple(s) if isinstance(s, (tuple, list)) else (int(s),) for s in labels)
    found = []
    for s in fc.simplices:
        vecs = fc.vectors(s)
        for choice in itertools.product(labels, repeat=len(vecs)):
            found.append(tuple(v + c for v, c in zip(vecs, choice)))
    out = _sub_complex(fc, found, f"{fc.family}<S>")
    # isolated label choices of vertices are already covered by 0-simplices
    return out


# ---------------------------------------------------------------------------
# orbit conditions


class OrbitFamily(enum.Enum):
    X = "X"
    IX = "IX"


@dataclass(frozen=True)
class OrbitReport:
    conditions: tuple[bool, bool, bool, bool]

    @property
    def holds(self) -> bool:
        return all(self.conditions)

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict:
        names = ("partial_basis_with_v", "pairings", "rho_sets", "phi")
        return {name: ok for name, ok in zip(names, self.conditions)} | {"holds": self.holds}


def orbit_conditions(family: OrbitFamily | str, n: int, vectors: Sequence[Sequence[int]]) -> OrbitReport:
    """The four orbit conditions for the Q_n-orbit of a standard tuple.

    X:  partial basis with v_n; <u_i, u_j> = 1 for i < j; rho sets disjoint
        singletons; phi = 1.
    IX: partial basis with v_n; <x_i, x_j> = 0; rho sets disjoint two-element
        sets; phi = 0.
    """
    family = OrbitFamily(family)
    vecs = [tuple(v) for v in vectors]
    _check_lengths(n, vecs)
    if family is OrbitFamily.X and not len(vecs) < n:
        raise ValueError(f"X-orbit conditions need fewer than n={n} vectors")
    if family is OrbitFamily.IX and not 2 * len(vecs) < n:
        raise ValueError(f"IX-orbit conditions need fewer than n/2={n / 2} vectors")
    c1 = is_partial_basis(vecs + [distinguished_vector(n)], n)
    rhos = [rho_set(v) for v in vecs]
    if family is OrbitFamily.X:
        c2 = all(pairing(vecs[i], vecs[j]) == 1 for i in range(len(vecs)) for j in range(i + 1, len(vecs)))
        c3 = all(len(r) == 1 for r in rhos) and _disjoint(rhos)
        c4 = all(sum(v) == 1 for v in vecs)
    else:
        c2 = all(pairing(a, b) == 0 for a in vecs for b in vecs)
        c3 = all(len(r) == 2 for r in rhos) and _disjoint(rhos)
        c4 = all(sum(v) == 0 for v in vecs)
    return OrbitReport((c1, c2, c3, c4))


def standard_tuple(family: OrbitFamily | str, n: int, p: int) -> tuple[Vector, ...]:
    """The last standard p-simplex: (e_(n-p), .., e_n) for X, or
    {e_(n-2p-1) - e_(n-2p), .., e_(n-1) - e_n} for IX."""
    family = OrbitFamily(family)
    if family is OrbitFamily.X:
        if not 0 <= p < n:
            raise ValueError("need 0 <= p < n")
        return tuple(tuple(int(k == j) for k in range(n)) for j in range(n - p - 1, n))
    if not 0 <= 2 * p + 2 < n:
        # with 2p + 2 = n the differences and v_n are linearly dependent
        raise ValueError("need 2p + 2 < n")
    out = []
    for j in range(n - 2 * p - 2, n, 2):
        out.append(tuple(int(k == j) - int(k == j + 1) for k in range(n)))
    return tuple(out)


def act(matrix, vectors: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
    return tuple(matvec(matrix, v) for v in vectors)


# ---------------------------------------------------------------------------
# link lemmas as explicit bijections on truncations


@dataclass(frozen=True)
class IsomorphismCheck:
    name: str
    n: int
    p: int
    box: int
    source_f_vector: tuple[int, ...]
    target_f_vector: tuple[int, ...]
    vertex_bijection: bool
    simplex_bijection: bool

    @property
    def ok(self) -> bool:
        return self.vertex_bijection and self.simplex_bijection


def _compare(fc_src: FiniteComplex, fc_tgt: FiniteComplex, vmap) -> tuple[bool, bool]:
    src_vertices = set(fc_src.vertices)
    image = {vmap(v) for v in src_vertices}
    vertex_ok = (
        None not in image and len(image) == len(src_vertices) and image == set(fc_tgt.vertices)
    )
    if not vertex_ok:
        return False, False
    if fc_src.ordered:
        src = {tuple(vmap(v) for v in s) for s in fc_src.simplex_vectors()}
    else:
        src = {frozenset(vmap(v) for v in s) for s in fc_src.simplex_vectors()}
    return True, src == fc_tgt.simplex_vectors() and len(src) == len(fc_src.simplices)


def check_leftlink_lemma(n: int, p: int, box: int) -> IsomorphismCheck:
    """LLk of (e_(n-p), .., e_n) in X_n equals X_(n-p-1) on the span of the first coordinates."""
    sigma = standard_tuple("X", n, p)
    m = n - p - 1
    link = build_complex(ComplexSpec(Family.X, n, box, relative_to=sigma, relation="left"))
    small = build_complex(ComplexSpec(Family.X, m, box))

    def vmap(v):
        return v[:m] if all(x == 0 for x in v[m:]) else None

    vb, sb = _compare(link, small, vmap)
    return IsomorphismCheck("leftlink", n, p, box, link.f_vector(), small.f_vector(), vb, sb)


def check_ixtau_lemma(n: int, p: int, box: int) -> IsomorphismCheck:
    """IX_n(sigma) for sigma = {e_(n-p), .., e_n} equals IX_(n-p-1) on the first coordinates."""
    sigma = standard_tuple("X", n, p)
    m = n - p - 1
    rel = build_complex(ComplexSpec(Family.IX, n, box, relative_to=sigma))
    small = build_complex(ComplexSpec(Family.IX, m, box))

    def vmap(v):
        return v[:m] if all(x == 0 for x in v[m:]) else None

    vb, sb = _compare(rel, small, vmap)
    return IsomorphismCheck("IXtau", n, p, box, rel.f_vector(), small.f_vector(), vb, sb)


def check_xsigma_lemma(n: int, p: int, box: int) -> IsomorphismCheck:
    """X_n(sigma) for sigma the last standard IX p-simplex equals
    X_(n-2p-2)<(2Z)^(p+1)> via u = sum 2a_j (e_(2j-1) - e_(2j)) + u'."""
    sigma = standard_tuple("IX", n, p)
    m = n - 2 * p - 2
    rel = build_complex(ComplexSpec(Family.X, n, box, relative_to=sigma))
    small = build_complex(ComplexSpec(Family.X, m, box))
    labels = [
        tuple(c)
        for c in itertools.product(range(-box, box + 1), repeat=p + 1)
        if all(x % 2 == 0 for x in c)
    ]
    target = bracket(small, labels)

    def vmap(v):
        tail = v[m:]
        coeffs = tail[0::2]
        if any(a + b != 0 for a, b in zip(tail[0::2], tail[1::2])):
            return None
        return tuple(v[:m]) + tuple(coeffs)

    vb, sb = _compare(rel, target, vmap)
    return IsomorphismCheck("Xsigma", n, p, box, rel.f_vector(), target.f_vector(), vb, sb)
