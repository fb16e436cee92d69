"""Breadth-first closure of a finite set of generators under multiplication.

Works for any element type given an identity, a product and a hashable
canonical key.  Matrices, Clifford elements and quaternionic matrices all
go through this one routine.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

DEFAULT_CAP = 2_000_000


class ClosureCapExceeded(RuntimeError):
    def __init__(self, cap: int, partial: int):
        super().__init__(f"closure exceeded cap {cap} (partial count {partial})")
        self.cap = cap
        self.partial = partial


@dataclass
class ClosureResult:
    order: int
    elements: list
    words: list | None = field(default=None, repr=False)

    def to_json(self, include_words: bool = False) -> dict:
        out: dict[str, Any] = {"order": self.order}
        if include_words and self.words is not None:
            out["words"] = [list(w) for w in self.words]
        return out


def bfs_closure(
    gens: Sequence,
    identity,
    key: Callable[[Any], Any],
    mul: Callable[[Any, Any], Any] = operator.mul,
    cap: int = DEFAULT_CAP,
    track_words: bool = False,
    sort: bool = True,
) -> ClosureResult:
    """Enumerate the monoid generated by `gens` (a group when gens are of finite order).

    Words are tuples of 0-based generator indices, shortest first by BFS.
    Output is sorted by `key` so the result does not depend on hash order.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    seen = {key(identity): 0}
    elements = [identity]
    words: list[tuple[int, ...]] = [()]
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            x = elements[idx]
            for gi, g in enumerate(gens):
                y = mul(x, g)
                k = key(y)
                if k in seen:
                    continue
                seen[k] = len(elements)
                elements.append(y)
                if track_words:
                    words.append(words[idx] + (gi,))
                nxt.append(len(elements) - 1)
                if len(elements) > cap:
                    raise ClosureCapExceeded(cap, len(elements))
        frontier = nxt
    if sort:
        order = sorted(range(len(elements)), key=lambda i: key(elements[i]))
        elements = [elements[i] for i in order]
        if track_words:
            words = [words[i] for i in order]
    return ClosureResult(len(elements), elements, words if track_words else None)
