"""Experiments on the Q_n-action through Burau words.

Random group elements are Burau images of random braid words. Each trial
draws from its own generator, derived from (seed, trial index), so any
single trial can be replayed without rerunning the others.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .burau import BraidWord, burau_matrix
from .complexes import OrbitFamily, act, orbit_conditions, standard_tuple
from .lattice import Matrix, Vector, identity, matmul, transvection


@dataclass(frozen=True)
class WordSampler:
    """Braid words with geometrically distributed length (mean `mean_length`)
    and uniformly chosen letters sigma_i^(+-1)."""

    n: int
    mean_length: float = 8.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("random words need at least two strands")
        if self.mean_length < 0:
            raise ValueError("mean length must be nonnegative")

    def rng(self, index: int) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=(index,)))

    def word(self, index: int) -> BraidWord:
        rng = self.rng(index)
        length = int(rng.geometric(1.0 / (self.mean_length + 1.0))) - 1
        gens = rng.integers(1, self.n, size=length)
        signs = rng.choice((-1, 1), size=length)
        return BraidWord(self.n, tuple((int(i), int(s)) for i, s in zip(gens, signs)))

    def words(self, count: int) -> Iterator[BraidWord]:
        for k in range(count):
            yield self.word(k)


def random_t_element(n: int, rng: np.random.Generator, factors: int = 6) -> Matrix:
    """Product of random transvections x -> x +- <u, x> u with u a nonzero
    sum-zero vector in {-1, 0, 1}^n. Many factors are outside Q_n, so the
    product exercises all of T_n rather than the Burau image."""
    if n < 2:
        return identity(n)
    m = identity(n)
    for _ in range(factors):
        while True:
            u = tuple(int(x) for x in rng.integers(-1, 2, size=n))
            if any(u) and sum(u) == 0:
                break
        m = matmul(m, transvection(u, int(rng.choice((-1, 1)))))
    return m


def apply_word(word: BraidWord, vectors: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
    """Burau image of the word applied to each vector, one letter at a time
    (rightmost letter first, matching the matrix product)."""
    vecs = [list(v) for v in vectors]
    for i, s in reversed(word.letters):
        a, b = i - 1, i
        for v in vecs:
            x, y = v[a], v[b]
            if s > 0:  # [[2, 1], [-1, 0]]
                v[a], v[b] = 2 * x + y, -x
            else:  # [[0, -1], [1, 2]]
                v[a], v[b] = -y, x + 2 * y
    return tuple(tuple(v) for v in vecs)


def _check_size(family: OrbitFamily, n: int, p: int) -> None:
    size = p + 1
    if family is OrbitFamily.X and not (p >= 0 and size < n):
        raise ValueError(f"X-orbit experiments need 0 <= p <= n - 2 (n={n}, p={p})")
    if family is OrbitFamily.IX and not (p >= 0 and 2 * size < n):
        raise ValueError(f"IX-orbit experiments need 2(p + 1) < n (n={n}, p={p})")


@dataclass(frozen=True)
class NecessityResult:
    family: str
    n: int
    p: int
    trials: int
    seed: int
    mean_length: float
    passed: bool
    counterexample: dict | None = None

    def as_dict(self) -> dict:
        return {
            "experiment": "orbit-necessity",
            "family": self.family,
            "n": self.n,
            "p": self.p,
            "trials": self.trials,
            "seed": self.seed,
            "mean_length": self.mean_length,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def necessity_experiment(
    n: int,
    p: int,
    trials: int,
    seed: int = 0,
    family: OrbitFamily | str = OrbitFamily.X,
    mean_length: float = 8.0,
) -> NecessityResult:
    """Apply random Burau words to the standard p-simplex and check that
    every image satisfies the orbit conditions."""
    family = OrbitFamily(family)
    _check_size(family, n, p)
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    std = standard_tuple(family, n, p)
    sampler = WordSampler(n, mean_length, seed)
    for k in range(trials):
        word = sampler.word(k)
        image = apply_word(word, std)
        report = orbit_conditions(family, n, image)
        if not report.holds:
            ce = {
                "trial": k,
                "word": list(word.to_ints()),
                "image": [list(v) for v in image],
                "conditions": report.as_dict(),
            }
            return NecessityResult(family.value, n, p, trials, seed, mean_length, False, ce)
    return NecessityResult(family.value, n, p, trials, seed, mean_length, True)


@dataclass(frozen=True)
class ReachabilityResult:
    target: tuple[Vector, ...]
    found: bool
    witness: BraidWord | None
    depth: int
    explored: int = field(default=0, compare=False)

    def as_dict(self) -> dict:
        return {
            "experiment": "orbit-search",
            "target": [list(v) for v in self.target],
            "found": self.found,
            "witness": None if self.witness is None else list(self.witness.to_ints()),
            "depth": self.depth,
            "explored": self.explored,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def infer_family(target: Sequence[Sequence[int]]) -> OrbitFamily:
    phis = {sum(v) for v in target}
    if phis == {1}:
        return OrbitFamily.X
    if phis == {0}:
        return OrbitFamily.IX
    raise ValueError("target vectors must all have phi = 1 (X) or all phi = 0 (IX)")


def reachability_search(
    target: Sequence[Sequence[int]],
    n: int,
    max_depth: int,
    family: OrbitFamily | str | None = None,
) -> ReachabilityResult:
    """Breadth-first search over braid words for one sending the standard
    tuple to `target`. Not finding one within max_depth says nothing about
    membership in the orbit."""
    target = tuple(tuple(int(x) for x in v) for v in target)
    if not target:
        raise ValueError("empty target")
    family = infer_family(target) if family is None else OrbitFamily(family)
    p = len(target) - 1
    _check_size(family, n, p)
    report = orbit_conditions(family, n, target)
    if not report.holds:
        raise ValueError(f"target fails the orbit conditions: {report.as_dict()}")
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    std = standard_tuple(family, n, p)
    letters = [(i, s) for i in range(1, n) for s in (1, -1)]
    seen = {std: ()}
    frontier = deque([std])
    depth = 0
    while True:
        if target in seen:
            word = BraidWord(n, seen[target])
            if act(burau_matrix(word), std) != target:
                raise AssertionError("witness does not reproduce the target")
            return ReachabilityResult(target, True, word, len(word.letters), len(seen))
        if depth == max_depth or not frontier:
            return ReachabilityResult(target, False, None, max_depth, len(seen))
        depth += 1
        nxt: deque = deque()
        for state in frontier:
            w = seen[state]
            for letter in letters:
                # prepend: the new letter acts last
                image = apply_word(BraidWord(n, (letter,)), state)
                if image not in seen:
                    seen[image] = (letter,) + w
                    nxt.append(image)
        frontier = nxt
