"""The hyperoctahedral Weyl group of Sp_2n and Kostant's theorem for the
parabolic fixing a line (Levi Sp_(2n-2) x GL_1).

Weights are integer vectors in the epsilon basis. Positive roots are
e_i - e_j and e_i + e_j for i < j, and 2e_i; rho = (n, n-1, .., 1).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence

from .partitions import Partition, as_partition

Weight = tuple[int, ...]


def rho(n: int) -> Weight:
    if n < 1:
        raise ValueError("rho needs n >= 1")
    return tuple(range(n, 0, -1))


@dataclass(frozen=True)
class SignedPermutation:
    """w(e_i) = sign(images[i]) * e_|images[i]|, with 1-based images."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(abs(x) for x in imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def all(cls, n: int) -> list["SignedPermutation"]:
        return [
            cls(tuple(s * p for s, p in zip(signs, perm)))
            for perm in permutations(range(1, n + 1))
            for signs in product((1, -1), repeat=n)
        ]

    @classmethod
    def sending(cls, source: Sequence[int], target: Sequence[int]) -> "SignedPermutation":
        """The element mapping a regular weight `source` to `target`."""
        where = {abs(x): (i, 1 if x > 0 else -1) for i, x in enumerate(source)}
        if len(where) != len(source) or 0 in where:
            raise ValueError("source weight is not regular")
        imgs = [0] * len(source)
        for k, y in enumerate(target):
            if abs(y) not in where:
                raise ValueError(f"{target} is not in the orbit of {source}")
            i, s = where[abs(y)]
            imgs[i] = s * (1 if y > 0 else -1) * (k + 1)
        return cls(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def act(self, weight: Sequence[int]) -> Weight:
        if len(weight) != self.n:
            raise ValueError(f"weight of length {len(weight)} for a rank-{self.n} element")
        out = [0] * self.n
        for i, x in enumerate(self.images):
            out[abs(x) - 1] = (1 if x > 0 else -1) * weight[i]
        return tuple(out)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """(self * other)(x) = self(other(x))."""
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return SignedPermutation(
            tuple(
                (1 if y > 0 else -1) * self.images[abs(y) - 1] for y in other.images
            )
        )

    def inverse(self) -> "SignedPermutation":
        imgs = [0] * self.n
        for i, x in enumerate(self.images):
            imgs[abs(x) - 1] = (1 if x > 0 else -1) * (i + 1)
        return SignedPermutation(tuple(imgs))

    def length(self) -> int:
        """Number of positive roots sent to negative roots.

        With c = w^-1(rho) this counts pairs i < j with c_i < c_j, pairs
        with c_i + c_j < 0, and indices with c_i < 0.
        """
        return _length_from_c(self.inverse().act(rho(self.n)))

    def __str__(self) -> str:
        return "[" + " ".join(str(x) for x in self.images) + "]"


def _length_from_c(c: Sequence[int]) -> int:
    n = len(c)
    total = sum(1 for x in c if x < 0)
    for i in range(n):
        for j in range(i + 1, n):
            total += (c[i] < c[j]) + (c[i] + c[j] < 0)
    return total


def simple_reflections(n: int) -> list[SignedPermutation]:
    """s_1 .. s_(n-1) swap neighbours, s_n negates the last coordinate."""
    gens = []
    for i in range(1, n):
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        gens.append(SignedPermutation(tuple(imgs)))
    gens.append(SignedPermutation(tuple(range(1, n)) + (-n,)))
    return gens


def lengths_by_bfs(n: int) -> dict[SignedPermutation, int]:
    """Word length in the simple reflections, by breadth-first search."""
    start = SignedPermutation.identity(n)
    dist = {start: 0}
    queue = deque([start])
    gens = simple_reflections(n)
    while queue:
        w = queue.popleft()
        for s in gens:
            ws = w * s
            if ws not in dist:
                dist[ws] = dist[w] + 1
                queue.append(ws)
    return dist


def dot_action(w: SignedPermutation, lam: Sequence[int]) -> Weight:
    """w . lam = w(lam + rho) - rho."""
    r = rho(w.n)
    if len(lam) != w.n:
        raise ValueError(f"weight of length {len(lam)} for a rank-{w.n} element")
    shifted = w.act(tuple(a + b for a, b in zip(lam, r)))
    return tuple(a - b for a, b in zip(shifted, r))


@dataclass(frozen=True)
class CosetRep:
    w: SignedPermutation
    length: int

    @property
    def c(self) -> Weight:
        """w^-1(rho)."""
        return self.w.inverse().act(rho(self.w.n))


def coset_reps_WP(n: int) -> list[CosetRep]:
    """The 2n minimal coset representatives, one for each value of
    w^-1(rho)_1 in {+-1, .., +-n}, with the rest of w^-1(rho) positive
    and decreasing. Sorted by length."""
    r = rho(n)
    reps = []
    for first in range(n, 0, -1):
        for sign in (1, -1):
            rest = tuple(x for x in r if x != first)
            c = (sign * first,) + rest
            w_inv = SignedPermutation.sending(r, c)
            reps.append(CosetRep(w_inv.inverse(), _length_from_c(c)))
    reps.sort(key=lambda cr: (cr.length, cr.c))
    return reps


def is_wp_condition(c: Sequence[int]) -> bool:
    tail = list(c[1:])
    return all(x > 0 for x in tail) and all(a > b for a, b in zip(tail, tail[1:]))


@dataclass(frozen=True)
class KostantRow:
    w: SignedPermutation
    length: int
    levi_weight: Weight
    c: Weight  # w^-1(rho)

    def as_dict(self) -> dict:
        return {
            "degree": self.length,
            "w": list(self.w.images),
            "w_inv_rho": list(self.c),
            "levi_weight": list(self.levi_weight),
        }


def _dominant_vector(lam: Partition | Sequence[int] | str, n: int) -> Weight:
    if isinstance(lam, (Partition, str)):
        return as_partition(lam).padded(n)
    lam = tuple(int(x) for x in lam)
    if len(lam) != n:
        raise ValueError(f"weight {lam} does not have {n} entries")
    if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not dominant")
    return lam


def kostant_cohomology(lam: Partition | Sequence[int] | str, n: int) -> list[KostantRow]:
    """One row per w in W^P: degree l(w) and the Levi highest weight,
    which is w^-1 . lam with its first entry deleted."""
    lam = _dominant_vector(lam, n)
    rows = []
    for rep in coset_reps_WP(n):
        w_inv = rep.w.inverse()
        mu = dot_action(w_inv, lam)
        levi = mu[1:]
        if any(x < 0 for x in levi) or any(a < b for a, b in zip(levi, levi[1:])):
            raise AssertionError(f"Levi weight {levi} is not dominant")
        rows.append(KostantRow(rep.w, rep.length, levi, rep.c))
    return rows


def trivial_summand_degrees(lam: Partition | Sequence[int] | str, n: int) -> list[int]:
    """Degrees in which the Levi factor Sp_(2n-2) acts trivially."""
    lam = _dominant_vector(lam, n)
    length = sum(1 for x in lam if x)
    expected = [0, 2 * n - 1] if length <= 1 else []
    scanned = sorted(row.length for row in kostant_cohomology(lam, n) if not any(row.levi_weight))
    if scanned != expected:
        raise AssertionError(f"scan gives {scanned}, closed form gives {expected}")
    return expected


def brute_force_coset_lengths(n: int) -> list[int]:
    """Minimal lengths of the cosets w W_P, by enumerating all of W.

    W_P fixes e_1, so the coset of w is determined by w(e_1)."""
    best: dict[int, int] = {}
    for w, length in lengths_by_bfs(n).items():
        key = w.images[0]
        if key not in best or length < best[key]:
            best[key] = length
    return sorted(best.values())


def all_weights_dominant(rows: Iterable[KostantRow]) -> bool:
    return all(
        all(x >= 0 for x in r.levi_weight)
        and all(a >= b for a, b in zip(r.levi_weight, r.levi_weight[1:]))
        for r in rows
    )


def symbolic_dot_action(w: SignedPermutation) -> tuple[str, ...]:
    """w . lam for a generic lam = (λ1, .., λn), as affine expressions.

    Entry k of w(lam + rho) - rho is s * (λj + rho_j) - rho_k where
    w(e_j) = s e_k.
    """
    r = rho(w.n)
    out = [""] * w.n
    for j, x in enumerate(w.images):
        k, s = abs(x) - 1, (1 if x > 0 else -1)
        const = s * r[j] - r[k]
        var = ("" if s > 0 else "-") + f"λ{j + 1}"
        if const == 0:
            out[k] = var
        else:
            out[k] = f"{const}{var if s < 0 else '+' + var}"
    return tuple(out)
