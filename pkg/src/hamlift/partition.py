"""Vertex partitions used as quotient maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class QuotientMap:
    """Surjection from vertices onto blocks.

    Block ids are dense from 0 and ordered by the smallest vertex in each
    block; every block is stored as a sorted tuple.
    """

    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, vertex_count: int, blocks: Iterable[Iterable[int]]) -> QuotientMap:
        normalized = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else -1)
        block_of = [-1] * vertex_count
        for i, block in enumerate(normalized):
            if not block:
                raise ValueError("empty block")
            for v in block:
                if not 0 <= v < vertex_count:
                    raise ValueError(f"vertex {v} out of range")
                if block_of[v] != -1:
                    raise ValueError(f"vertex {v} lies in two blocks")
                block_of[v] = i
        if -1 in block_of:
            raise ValueError(f"vertex {block_of.index(-1)} is not covered")
        return cls(tuple(block_of), tuple(normalized))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> QuotientMap:
        groups: dict[int, list[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        return cls.from_blocks(len(labels), groups.values())

    @classmethod
    def singletons(cls, vertex_count: int) -> QuotientMap:
        return cls(tuple(range(vertex_count)), tuple((v,) for v in range(vertex_count)))

    @property
    def vertex_count(self) -> int:
        return len(self.block_of)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def __call__(self, v: int) -> int:
        return self.block_of[v]

    def block(self, i: int) -> tuple[int, ...]:
        return self.blocks[i]

    def project(self, vertices: Iterable[int]) -> list[int]:
        return [self.block_of[v] for v in vertices]
