"""Finite acyclic digraphs: parsing, validation and basic queries."""

from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

Label = Hashable

_INT_RE = re.compile(r"-?\d+")


class GraphError(ValueError):
    """Base class for invalid digraph input."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SelfLoopError(GraphError):
    def __init__(self, label: Label):
        super().__init__(f"self-edge {label}->{label} is not allowed")
        self.label = label


class CycleError(GraphError):
    def __init__(self, witness: Sequence[Label]):
        text = "->".join(str(x) for x in witness)
        super().__init__(f"digraph has a directed cycle: {text}")
        self.witness = tuple(witness)


class EmptyGraphError(GraphError):
    def __init__(self):
        super().__init__("empty graph")


def topological_order(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Kahn's algorithm, smallest index first among ready vertices.

    Raises :class:`CycleError` with a directed cycle (as indices, first vertex
    repeated at the end) when no order exists.
    """
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for u, v in edges:
        succ[u].append(v)
        indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    if len(order) == n:
        return tuple(order)
    raise CycleError(_find_cycle(n, succ))


def _find_cycle(n: int, succ: list[list[int]]) -> list[int]:
    color = [0] * n
    parent = [-1] * n
    for root in range(n):
        if color[root]:
            continue
        stack = [(root, iter(sorted(succ[root])))]
        color[root] = 1
        while stack:
            u, it = stack[-1]
            for v in it:
                if color[v] == 0:
                    color[v] = 1
                    parent[v] = u
                    stack.append((v, iter(sorted(succ[v]))))
                    break
                if color[v] == 1:
                    cyc = [u]
                    while cyc[-1] != v:
                        cyc.append(parent[cyc[-1]])
                    cyc.reverse()
                    return cyc + [v]
            else:
                color[u] = 2
                stack.pop()
    raise AssertionError("no cycle found")  # pragma: no cover


@dataclass(frozen=True)
class Digraph:
    """Acyclic digraph without self-edges; vertices are indexed ``0..n-1``.

    ``labels[i]`` is the user-facing name of vertex ``i``. Labels are kept for
    output only; all computations use indices.
    """

    labels: tuple[Label, ...]
    edges: frozenset[tuple[int, int]]
    duplicate_edges: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "edges", frozenset((int(u), int(v)) for u, v in self.edges))
        n = len(self.labels)
        if n == 0:
            raise EmptyGraphError()
        if len(set(self.labels)) != n:
            raise GraphError("vertex labels must be distinct")
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references a missing vertex")
            if u == v:
                raise SelfLoopError(self.labels[u])
        try:
            topological_order(n, self.edges)
        except CycleError as exc:
            raise CycleError([self.labels[i] for i in exc.witness]) from None

    @classmethod
    def from_labeled_edges(
        cls, edges: Iterable[tuple[Label, Label]], vertices: Iterable[Label] = ()
    ) -> "Digraph":
        """Build from label pairs; vertex order is order of first appearance."""
        index: dict[Label, int] = {}
        for v in vertices:
            index.setdefault(v, len(index))
        seen: set[tuple[int, int]] = set()
        dups = 0
        for a, b in edges:
            u = index.setdefault(a, len(index))
            v = index.setdefault(b, len(index))
            if (u, v) in seen:
                dups += 1
            seen.add((u, v))
        return cls(tuple(index), frozenset(seen), dups)

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
        return tuple(tuple(sorted(s)) for s in out)

    @cached_property
    def index(self) -> dict[Label, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def label_path(self, path: Sequence[int]) -> str:
        labs = [str(self.labels[v]) for v in path]
        if all(len(s) == 1 for s in labs):
            return "".join(labs)
        return "-".join(labs)

    def weak_components(self) -> int:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in range(self.n)})


def check_acyclic(g: Digraph) -> tuple[int, ...]:
    """Vertex order (indices) in which every edge points forward."""
    return topological_order(g.n, g.edges)


def max_allowed_path_length(g: Digraph) -> int:
    """Number of edges on the longest directed path of ``g``."""
    longest = [0] * g.n
    for u in reversed(check_acyclic(g)):
        for v in g.successors[u]:
            longest[u] = max(longest[u], longest[v] + 1)
    return max(longest)


def _coerce_label(tok: str) -> Label:
    if _INT_RE.fullmatch(tok) and str(int(tok)) == tok:
        return int(tok)
    return tok


def parse_edge_list(text: str) -> Digraph:
    """Parse ``LABEL->LABEL`` lines.

    Blank lines and ``#`` comments are skipped. A line holding a single label
    declares an isolated vertex. Integer-looking labels become ``int``.
    """
    edges: list[tuple[Label, Label]] = []
    vertices: list[Label] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        parts = line.split("->")
        if len(parts) > 2:
            col = line.index("->", line.index("->") + 2) + 1
            raise ParseError("more than one '->' on a line", lineno, col)
        toks = []
        offset = 0
        for part in parts:
            tok = part.strip()
            col = offset + (part.index(tok) if tok else len(part)) + 1
            if not tok:
                raise ParseError("missing vertex label", lineno, col)
            if any(ch.isspace() for ch in tok):
                raise ParseError(f"invalid vertex label {tok!r}", lineno, col)
            toks.append(_coerce_label(tok))
            offset += len(part) + 2
        if len(toks) == 1:
            vertices.append(toks[0])
            continue
        a, b = toks
        if a == b:
            raise SelfLoopError(a)
        if a not in vertices:
            vertices.append(a)
        if b not in vertices:
            vertices.append(b)
        edges.append((a, b))
    if not vertices:
        raise EmptyGraphError()
    return Digraph.from_labeled_edges(edges, vertices)


def parse_json(text: str) -> Digraph:
    """Parse ``{"vertices": [...], "edges": [[u, v], ...]}`` (labels)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError("expected an object with an 'edges' array", 1, 1)
    edges = []
    for e in data["edges"]:
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"bad edge entry {e!r}", 1, 1)
        if e[0] == e[1]:
            raise SelfLoopError(e[0])
        edges.append((e[0], e[1]))
    vertices = data.get("vertices", [])
    if not vertices and not edges:
        raise EmptyGraphError()
    return Digraph.from_labeled_edges(edges, vertices)


def parse_digraph(text: str) -> Digraph:
    """Dispatch on content: JSON objects start with ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_edge_list(text)


def to_edge_list(g: Digraph) -> str:
    """Serialize so that ``parse_edge_list(to_edge_list(g)) == g``."""
    lines = [str(lab) for lab in g.labels]
    lines += [f"{g.labels[u]}->{g.labels[v]}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def to_json(g: Digraph) -> str:
    return json.dumps(
        {
            "vertices": list(g.labels),
            "edges": [[g.labels[u], g.labels[v]] for u, v in g.sorted_edges()],
        }
    )
