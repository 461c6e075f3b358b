"""Braid words and the integral (t = -1) Burau representation.

sigma_i maps to 1_(i-1) + B + 1_(n-i-1) with B = [[2, 1], [-1, 0]].
Transposing B everywhere gives an isomorphic representation (conjugate by
diag(1, -1, 1, ...)); the untransposed block is used throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from .lattice import (
    Convention,
    GroupElement,
    Level,
    Matrix,
    block_sum,
    braiding,
    classify_element,
    identity,
    matmul,
    restricted_action,
)

B = ((2, 1), (-1, 0))
B_INV = ((0, -1), (1, 2))


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for i, s in self.letters:
            if not 1 <= i < self.strands:
                raise ValueError(f"generator index {i} out of range for {self.strands} strands")
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")

    @classmethod
    def parse(cls, strands: int, text: str) -> "BraidWord":
        """'1,2,-1' is sigma_1 sigma_2 sigma_1^-1."""
        text = text.strip()
        if not text:
            return cls(strands)
        letters = []
        for tok in text.split(","):
            k = int(tok)
            if k == 0:
                raise ValueError("0 is not a generator index")
            letters.append((abs(k), 1 if k > 0 else -1))
        return cls(strands, tuple(letters))

    @classmethod
    def from_ints(cls, strands: int, ks: Iterable[int]) -> "BraidWord":
        return cls(strands, tuple((abs(k), 1 if k > 0 else -1) for k in ks))

    def to_ints(self) -> tuple[int, ...]:
        return tuple(i * s for i, s in self.letters)

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.to_ints())

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot multiply braids on different numbers of strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def permutation(self) -> tuple[int, ...]:
        """Underlying permutation, as the 0-indexed image of each position.

        Uses the same left-to-right composition as the matrices, so
        sigma_i acts as the transposition (i, i+1).
        """
        perm = list(range(self.strands))
        # composite P_1 P_2 ... P_k applied to e_j; apply the rightmost first
        for i, _ in reversed(self.letters):
            perm = [i if p == i - 1 else i - 1 if p == i else p for p in perm]
        return tuple(perm)


@dataclass(frozen=True)
class BurauImage:
    element: GroupElement
    word: BraidWord

    @property
    def matrix(self) -> Matrix:
        return self.element.matrix


@lru_cache(maxsize=None)
def _generator_matrix(n: int, i: int, sign: int) -> Matrix:
    return block_sum(block_sum(identity(i - 1), B if sign > 0 else B_INV), identity(n - i - 1))


def burau_generator(n: int, i: int, sign: int = 1) -> GroupElement:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return GroupElement(_generator_matrix(n, i, sign), Level.Q)


def burau_matrix(word: BraidWord) -> Matrix:
    n = word.strands
    return reduce(
        lambda acc, letter: matmul(acc, _generator_matrix(n, *letter)),
        word.letters,
        identity(n),
    )


def burau(word: BraidWord) -> BurauImage:
    m = burau_matrix(word)
    level = classify_element(m)
    if level not in (Level.Q, Level.T2):
        raise AssertionError(f"Burau image of {word} is not in Q_{word.strands}")
    return BurauImage(GroupElement(m, level), word)


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """Matrix sending e_j to e_perm[j]."""
    n = len(perm)
    return tuple(tuple(int(perm[j] == i) for j in range(n)) for i in range(n))


def reduced_burau(word: BraidWord) -> Matrix:
    """Action on the sum-zero sublattice in the basis f_i = e_i - e_(i+1)."""
    return restricted_action(burau_matrix(word))


def braiding_vs_burau(n: int, i: int, convention: Convention | str = Convention.EQ31) -> bool:
    """Does 1_(i-1) + b_(1,1) + 1_(n-i-1) equal the Burau image of sigma_i?"""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    b = braiding(1, 1, convention).matrix
    local = block_sum(block_sum(identity(i - 1), b), identity(n - i - 1))
    return local == burau_generator(n, i, 1).matrix
