"""Vertex subsets stored as Python integer bitmasks.

Bit ``v`` of ``mask`` is set iff vertex ``v`` is a member. Python integers are
arbitrary precision, so nothing here assumes ``n <= 64``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    n: int
    mask: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient vertex count must be non-negative")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has members outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside 0..{n - 1}")
        return cls(n, mask_of(vertices))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"ambient sizes differ: {self.n} vs {other.n}")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.mask != other.mask

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def add(self, v: int) -> "VertexSet":
        return VertexSet.of(self.n, [*self, v])

    def discard(self, v: int) -> "VertexSet":
        return VertexSet(self.n, self.mask & ~(1 << v)) if 0 <= v < self.n else self

    def sorted(self) -> list[int]:
        return list(iter_bits(self.mask))

    def sort_key(self) -> tuple[int, ...]:
        """Key for lexicographic order of ascending vertex sequences."""
        return tuple(iter_bits(self.mask))

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"


SetLike = Union[VertexSet, Iterable[int]]


def as_mask(n: int, s: SetLike) -> int:
    """Coerce a VertexSet or an iterable of vertex labels to a mask, checking range."""
    if isinstance(s, VertexSet):
        if s.n != n:
            raise ValueError(f"vertex set is over {s.n} vertices, digraph has {n}")
        return s.mask
    return VertexSet.of(n, s).mask
