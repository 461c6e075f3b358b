"""Partitions and the horizontal-strip shift rules."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from itertools import product
from typing import Iterable, Iterator


@total_ordering
@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            # trailing zeros are harmless padding; anything else is an error
            stripped = tuple(p for p in parts if p != 0)
            if any(p < 0 for p in parts) or parts[: len(stripped)] != stripped:
                raise ValueError(f"parts must be positive, got {self.parts}")
            parts = stripped
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """'2,1' -> (2,1); '', '0' and 'empty' give the empty partition."""
        text = text.strip()
        if text in ("", "0", "empty", "()"):
            return cls()
        return cls(tuple(int(t) for t in text.strip("()").split(",") if t.strip()))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        if self.length > n:
            raise ValueError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - self.length)

    def __getitem__(self, i: int) -> int:
        """i-th part (0-based), zero past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return (self.size, self.parts) < (other.size, other.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "()"


def partitions(size: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of `size`, largest parts first."""
    if max_part is None:
        max_part = size

    def rec(rest: int, cap: int, slots) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, None if slots is None else slots - 1):
                yield (first,) + tail

    for parts in rec(size, max_part, max_length):
        yield Partition(parts)


def partitions_up_to(size: int, max_length: int | None = None) -> list[Partition]:
    return [p for k in range(size + 1) for p in partitions(k, max_length)]


def horizontal_strips(lam: Partition) -> Iterator[Partition]:
    """All mu with lam / mu a horizontal strip: lam_(i+1) <= mu_i <= lam_i."""
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(lam.length)]
    for mu in product(*ranges):
        yield Partition(tuple(x for x in mu if x))


def pieri_shift(lam: Partition) -> Counter:
    """Multiset {mu : lam/mu a horizontal strip}, every multiplicity 1."""
    return Counter(horizontal_strips(lam))


def sp_shift(lam: Partition) -> Counter:
    """Horizontal-strip removal applied twice, with multiplicities."""
    out: Counter = Counter()
    for mu, k in pieri_shift(lam).items():
        for nu, j in pieri_shift(mu).items():
            out[nu] += k * j
    return out


def multiset_to_json(ms: Counter) -> list[dict]:
    return [{"partition": list(p.parts), "multiplicity": k} for p, k in sorted(ms.items())]


def as_partition(x: Partition | Iterable[int] | str) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    return Partition(tuple(x))
