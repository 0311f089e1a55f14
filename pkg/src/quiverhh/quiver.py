"""Finite connected quivers and their paths."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class QuiverError(ValueError):
    """Malformed quiver or path."""


@dataclass(frozen=True)
class Arrow:
    id: str
    tail: str
    head: str


@dataclass(frozen=True, order=False)
class Path:
    """A path read left to right; ``arrows == ()`` is the trivial path at ``tail``."""

    tail: str
    head: str
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_cycle(self) -> bool:
        return self.tail == self.head

    def sort_key(self) -> tuple:
        if self.is_trivial:
            return (0, (self.tail,))
        return (self.length, self.arrows)

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.tail}"
        return "*".join(self.arrows)

    def __repr__(self) -> str:
        return f"Path({self})"


class Quiver:
    """Finite connected directed multigraph; loops and parallel arrows allowed.

    Vertex and arrow order is the declaration order.  Construction rejects
    duplicate ids, dangling endpoints and disconnected underlying graphs.
    """

    def __init__(self, vertices: Sequence[str], arrows: Iterable[tuple[str, str, str]]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.arrows: tuple[Arrow, ...] = tuple(Arrow(*a) for a in arrows)
        if not self.vertices:
            raise QuiverError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex id")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise QuiverError("duplicate arrow id")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.tail not in vset or a.head not in vset:
                raise QuiverError(f"arrow {a.id} has an unknown endpoint")
        self._arrow = {a.id: a for a in self.arrows}
        self._out: dict[str, list[Arrow]] = defaultdict(list)
        self._in: dict[str, list[Arrow]] = defaultdict(list)
        for a in self.arrows:
            self._out[a.tail].append(a)
            self._in[a.head].append(a)
        if not self._connected():
            raise QuiverError("the underlying graph is not connected")

    def _connected(self) -> bool:
        nbrs = defaultdict(set)
        for a in self.arrows:
            nbrs[a.tail].add(a.head)
            nbrs[a.head].add(a.tail)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in nbrs[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == len(self.vertices)

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._arrow[arrow_id]
        except KeyError:
            raise QuiverError(f"unknown arrow {arrow_id!r}") from None

    def has_arrow(self, arrow_id: str) -> bool:
        return arrow_id in self._arrow

    def outgoing(self, v: str) -> list[Arrow]:
        return list(self._out[v])

    def incoming(self, v: str) -> list[Arrow]:
        return list(self._in[v])

    def trivial(self, v: str) -> Path:
        if v not in self.vertices:
            raise QuiverError(f"unknown vertex {v!r}")
        return Path(v, v)

    def path(self, *arrow_ids: str) -> Path:
        """The path through ``arrow_ids``; raises on a non-composable sequence."""
        if not arrow_ids:
            raise QuiverError("use trivial(v) for a length-0 path")
        arrs = [self.arrow(a) for a in arrow_ids]
        for x, y in zip(arrs, arrs[1:]):
            if x.head != y.tail:
                raise QuiverError(f"non-composable path: {x.id} then {y.id}")
        return Path(arrs[0].tail, arrs[-1].head, tuple(arrow_ids))

    def arrow_path(self, arrow_id: str) -> Path:
        a = self.arrow(arrow_id)
        return Path(a.tail, a.head, (a.id,))

    def generators(self) -> list[Path]:
        """Trivial paths then arrows, in declaration order."""
        return [Path(v, v) for v in self.vertices] + [
            Path(a.tail, a.head, (a.id,)) for a in self.arrows
        ]

    def adjacency(self) -> np.ndarray:
        idx = {v: i for i, v in enumerate(self.vertices)}
        m = np.zeros((len(self.vertices),) * 2, dtype=np.int64)
        for a in self.arrows:
            m[idx[a.tail], idx[a.head]] += 1
        return m


def compose(p: Path, q: Path) -> Path | None:
    """Concatenation ``p*q``, or ``None`` when ``head(p) != tail(q)``."""
    if p.head != q.tail:
        return None
    return Path(p.tail, q.head, p.arrows + q.arrows)


def parallel(p: Path, q: Path) -> bool:
    return p.tail == q.tail and p.head == q.head


def enumerate_paths(q: Quiver, max_len: int) -> list[Path]:
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    layer = [Path(v, v) for v in q.vertices]
    out = list(layer)
    layer = [Path(a.tail, a.head, (a.id,)) for a in q.arrows]
    for length in range(1, max_len + 1):
        out.extend(layer)
        if length == max_len:
            break
        layer = [
            Path(p.tail, a.head, p.arrows + (a.id,)) for p in layer for a in q._out[p.head]
        ]
    out.sort(key=Path.sort_key)
    return out


def is_acyclic_quiver(q: Quiver) -> bool:
    indeg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        indeg[a.head] += 1
    ready = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for a in q._out[v]:
            indeg[a.head] -= 1
            if indeg[a.head] == 0:
                ready.append(a.head)
    return seen == len(q.vertices)


def has_walk_of_length_at_least(q: Quiver, source: str, target: str, length: int) -> bool:
    """Whether some path of length >= ``length`` runs from ``source`` to ``target``.

    A walk longer than ``length + |V| - 1`` always contains a closed sub-walk
    that can be cut out without dropping below ``length``, so only the window
    ``length .. length + |V|`` needs checking.
    """
    idx = {v: i for i, v in enumerate(q.vertices)}
    if source not in idx or target not in idx:
        raise QuiverError("unknown vertex")
    adj = np.minimum(q.adjacency(), 1)
    n = len(q.vertices)
    reach = np.eye(n, dtype=np.int64)
    for _ in range(max(length, 0)):
        reach = np.minimum(reach @ adj, 1)
    i, j = idx[source], idx[target]
    for _ in range(n + 1):
        if reach[i, j]:
            return True
        reach = np.minimum(reach @ adj, 1)
    return False
