"""Characters of Sp_2n as weight-multiplicity maps.

A character is a dict from weights (integer tuples of length n) to
multiplicities. Irreducible characters come from Freudenthal's formula
on dominant weights and are spread over Weyl orbits on demand.
Decomposition only ever looks at the dominant part, since characters
are W-invariant.
"""
from __future__ import annotations

import os
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, prod
from typing import Mapping, Sequence

from ..errors import BudgetExceeded
from .partitions import Partition, as_partition, partitions
from .weyl import Weight, rho

Character = dict[Weight, int]

MAX_DOMINANT_WEIGHTS = int(os.environ.get("ODDSYMP_MAX_DOMINANT_WEIGHTS", 200_000))


class NotACharacter(ValueError):
    """Greedy subtraction hit a negative multiplicity."""


def positive_roots(n: int) -> list[Weight]:
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            a = [0] * n
            a[i], a[j] = 1, -1
            roots.append(tuple(a))
            a = [0] * n
            a[i], a[j] = 1, 1
            roots.append(tuple(a))
        a = [0] * n
        a[i] = 2
        roots.append(tuple(a))
    return roots


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def dominant_rep(weight: Sequence[int]) -> Weight:
    """The dominant weight in the W-orbit: absolute values, sorted down."""
    return tuple(sorted((abs(x) for x in weight), reverse=True))


def is_dominant(weight: Sequence[int]) -> bool:
    return all(x >= 0 for x in weight) and all(a >= b for a, b in zip(weight, weight[1:]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam - mu is a nonnegative combination of positive roots."""
    acc = 0
    for a, b in zip(lam, mu):
        acc += a - b
        if acc < 0:
            return False
    return acc % 2 == 0


def _depth(lam: Sequence[int], mu: Sequence[int]) -> int:
    # coefficients of lam - mu in the simple roots e_i - e_(i+1), 2e_n
    partial, depth = 0, 0
    for k, (a, b) in enumerate(zip(lam, mu)):
        partial += a - b
        depth += partial if k < len(lam) - 1 else partial // 2
    return depth


def weyl_dim_sp(lam: Partition | Sequence[int] | str, n: int) -> int:
    """Dimension of the irreducible Sp_2n representation V_lam (0 if l(lam) > n)."""
    lam = as_partition(lam)
    if lam.length > n:
        return 0
    if n == 0:
        return 1
    shifted = [a + b for a, b in zip(lam.padded(n), rho(n))]
    r = rho(n)
    value = Fraction(1)
    for alpha in positive_roots(n):
        value *= Fraction(_dot(shifted, alpha), _dot(r, alpha))
    assert value.denominator == 1
    return int(value)


def dominant_weights_below(lam: Partition | Sequence[int], n: int) -> list[Weight]:
    lam = as_partition(lam)
    top = lam.padded(n)
    out = []
    for size in range(lam.size, -1, -2):
        for mu in partitions(size, max_length=n, max_part=lam[0] if lam.parts else 0):
            v = mu.padded(n)
            if dominates(top, v):
                out.append(v)
    return out


@lru_cache(maxsize=None)
def _freudenthal(top: Weight) -> tuple[tuple[Weight, int], ...]:
    n = len(top)
    weights = dominant_weights_below(Partition(tuple(x for x in top if x)), n)
    if len(weights) > MAX_DOMINANT_WEIGHTS:
        raise BudgetExceeded(f"character of {top} has {len(weights)} dominant weights")
    weights.sort(key=lambda mu: _depth(top, mu))
    inside = set(weights)
    r = rho(n)
    roots = positive_roots(n)
    lr = [a + b for a, b in zip(top, r)]
    norm_top = _dot(lr, lr)
    mult: dict[Weight, int] = {}
    for mu in weights:
        if mu == top:
            mult[mu] = 1
            continue
        num = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                rep = dominant_rep(nu)
                if rep not in inside:
                    break
                num += mult.get(rep, 0) * _dot(nu, alpha)
                k += 1
        mr = [a + b for a, b in zip(mu, r)]
        den = norm_top - _dot(mr, mr)
        q, rem = divmod(2 * num, den)
        if rem:
            raise AssertionError(f"non-integral multiplicity at {mu} in V{top}")
        if q:
            mult[mu] = q
    return tuple(sorted(mult.items()))


def dominant_character(lam: Partition | Sequence[int] | str, n: int) -> Character:
    lam = as_partition(lam)
    if lam.length > n:
        raise ValueError(f"V_{lam} vanishes for Sp_{2 * n}")
    return dict(_freudenthal(lam.padded(n)))


def orbit(weight: Sequence[int]) -> set[Weight]:
    out = set()
    for perm in set(permutations(weight)):
        nonzero = [i for i, x in enumerate(perm) if x]
        for signs in product((1, -1), repeat=len(nonzero)):
            v = list(perm)
            for i, s in zip(nonzero, signs):
                v[i] *= s
            out.add(tuple(v))
    return out


def sp_character(lam: Partition | Sequence[int] | str, n: int) -> Character:
    """Full character of V_lam, every weight with its multiplicity."""
    full: Character = {}
    for mu, m in dominant_character(lam, n).items():
        for nu in orbit(mu):
            full[nu] = m
    return full


def character_dimension(ch: Mapping[Weight, int]) -> int:
    return sum(ch.values())


def multiply(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> Character:
    out: Counter = Counter()
    for u, x in a.items():
        for v, y in b.items():
            out[tuple(p + q for p, q in zip(u, v))] += x * y
    return {k: v for k, v in out.items() if v}


def power(a: Mapping[Weight, int], k: int, n: int) -> Character:
    out: Character = {(0,) * n: 1}
    for _ in range(k):
        out = multiply(out, a)
    return out


def defining_character(n: int) -> Character:
    ch: Character = {}
    for i in range(n):
        for s in (1, -1):
            w = [0] * n
            w[i] = s
            ch[tuple(w)] = 1
    return ch


def decompose(ch: Mapping[Weight, int], n: int) -> Counter:
    """Multiplicities of irreducibles, by greedy subtraction of the
    highest remaining dominant weight (graded-lex order)."""
    rest = {w: m for w, m in ch.items() if m and is_dominant(w)}
    if any(len(w) != n for w in rest):
        raise ValueError(f"character weights must have {n} entries")
    out: Counter = Counter()
    while rest:
        top = max(rest, key=lambda w: (sum(w), w))
        m = rest[top]
        if m < 0:
            raise NotACharacter(f"negative multiplicity {m} at highest weight {top}")
        out[Partition(tuple(x for x in top if x))] += m
        for mu, k in dominant_character(top, n).items():
            left = rest.get(mu, 0) - m * k
            if left:
                rest[mu] = left
            else:
                rest.pop(mu, None)
    return out


def invariant_dimension_tensor(n: int, s: int) -> int:
    """Dimension of the Sp_2n invariants in V^(tensor 2s)."""
    if n < 1 or s < 1:
        raise ValueError("need n, s >= 1")
    return decompose(power(defining_character(n), 2 * s, n), n)[Partition()]


def exterior_power_character(g: int, r: int) -> Character:
    """Dominant part of the character of (wedge V)^(tensor r) for Sp_2g.

    The character of wedge V is prod_i (1 + x_i)(1 + 1/x_i), so its r-th
    power is prod_i (x_i^(1/2) + x_i^(-1/2))^(2r): the weight with
    coordinates mu_i has multiplicity prod_i binom(2r, r + mu_i).
    """
    ch: Character = {}
    for mu in product(range(r, -1, -1), repeat=g):
        if is_dominant(mu):
            ch[mu] = prod(comb(2 * r, r + x) for x in mu)
    return ch


def exterior_multiplicity(lam: Partition | Sequence[int] | str, g: int, r: int) -> int:
    """Multiplicity of V_lam in (wedge V_g)^(tensor r) for Sp_2g."""
    lam = as_partition(lam)
    if lam.length > g:
        raise ValueError(f"l({lam}) > g = {g}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    return decompose(exterior_power_character(g, r), g)[lam]


def double_factorial(k: int) -> int:
    return prod(range(k, 0, -2)) if k > 0 else 1
