"""Immutable undirected simple graphs and the composition operators.

Vertices are dense ids ``0..n-1``.  Edges are stored sorted with ``u < v``.
Labels map a role string to a single vertex; one vertex may carry several
roles.  All operations are pure: they return new graphs together with the
id maps needed to locate distinguished vertices after composition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .errors import (
    DisconnectedError,
    DuplicateRoleError,
    EdgeAbsentError,
    ParseError,
    SelfLoopError,
    VertexOutOfRangeError,
    ZeroLengthError,
)

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    labels: Mapping[str, int] = field(default_factory=dict)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edge_set

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexOutOfRangeError(f"vertex {v} not in 0..{self.n - 1}")

    def components(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def delete_vertex(self, v: int) -> tuple["Graph", dict[int, int]]:
        """Remove ``v``; remaining ids shift down to stay dense."""
        self.check_vertex(v)
        id_map = {u: (u if u < v else u - 1) for u in range(self.n) if u != v}
        edges = tuple(
            sorted((id_map[a], id_map[b]) for a, b in self.edges if v not in (a, b))
        )
        labels = {r: id_map[x] for r, x in self.labels.items() if x != v}
        return Graph(self.n - 1, edges, labels), id_map

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        verts = sorted(set(vertices))
        for v in verts:
            self.check_vertex(v)
        id_map = {v: i for i, v in enumerate(verts)}
        keep = set(verts)
        edges = tuple(
            sorted((id_map[a], id_map[b]) for a, b in self.edges if a in keep and b in keep)
        )
        labels = {r: id_map[x] for r, x in self.labels.items() if x in keep}
        return Graph(len(verts), edges, labels), id_map


def from_edge_list(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Mapping[str, int] | Iterable[tuple[str, int]] | None = None,
) -> Graph:
    """Build a canonical graph; duplicate edges collapse silently."""
    norm = set()
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        norm.add(_normalize_edge(u, v))
    label_map: dict[str, int] = {}
    if labels is not None:
        pairs = labels.items() if isinstance(labels, Mapping) else labels
        for role, v in pairs:
            if role in label_map:
                raise DuplicateRoleError(f"role {role!r} assigned twice")
            if not (0 <= v < n):
                raise VertexOutOfRangeError(f"role {role!r} points at missing vertex {v}")
            label_map[role] = v
    return Graph(n, tuple(sorted(norm)), label_map)


class UnionResult(NamedTuple):
    graph: Graph
    b_map: dict[int, int]


def disjoint_union(a: Graph, b: Graph, b_label_prefix: str = "b:") -> UnionResult:
    """Disjoint union; ``b``'s ids shift by ``a.n`` and its roles get a prefix."""
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    labels = dict(a.labels)
    for role, v in b.labels.items():
        labels[b_label_prefix + role] = v + a.n
    g = Graph(a.n + b.n, tuple(sorted(edges)), labels)
    return UnionResult(g, {v: v + a.n for v in range(b.n)})


class IdentifyResult(NamedTuple):
    graph: Graph
    id_map: dict[int, int]
    collapsed_parallel: int
    dropped_loop: bool


def identify_vertices(g: Graph, u: int, v: int) -> IdentifyResult:
    """Merge ``v`` into ``u`` (the smaller id survives).

    Parallel edges collapse; an edge between the two merged vertices would
    become a loop and is dropped, recorded in the warning fields.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise SelfLoopError("cannot identify a vertex with itself")
    keep, gone = (u, v) if u < v else (v, u)
    dropped_loop = g.has_edge(u, v)
    id_map = {}
    for x in range(g.n):
        if x == gone:
            id_map[x] = keep
        else:
            id_map[x] = x if x < gone else x - 1
    raw = {(id_map[a], id_map[b]) for a, b in g.edges}
    before = len(g.edges) - (1 if dropped_loop else 0)
    edges = {_normalize_edge(a, b) for a, b in raw if a != b}
    labels = {role: id_map[x] for role, x in g.labels.items()}
    out = Graph(g.n - 1, tuple(sorted(edges)), labels)
    return IdentifyResult(out, id_map, before - len(edges), dropped_loop)


class AppendResult(NamedTuple):
    graph: Graph
    tip: int


def append_path(g: Graph, at: int, length: int) -> AppendResult:
    """Attach a pendant path of ``length`` edges at ``at``; returns the tip id."""
    g.check_vertex(at)
    if length < 1:
        raise ZeroLengthError(f"pendant path needs length >= 1, got {length}")
    edges = list(g.edges)
    prev = at
    for i in range(length):
        nxt = g.n + i
        edges.append(_normalize_edge(prev, nxt))
        prev = nxt
    return AppendResult(Graph(g.n + length, tuple(sorted(edges)), dict(g.labels)), prev)


class ReplaceResult(NamedTuple):
    graph: Graph
    gadget_map: dict[int, int]


def replace_edge_with_gadget(g: Graph, e: tuple[int, int], gadget, label_prefix: str | None = None) -> ReplaceResult:
    """Replace edge ``e`` by a gadget copy.

    Orientation rule: the gadget entry vertex ``v`` lands on ``min(e)`` and the
    exit vertex ``w`` on ``max(e)``.  ``gadget`` needs ``graph``/``v``/``w``
    attributes.  The returned map sends gadget-local ids to final ids.
    """
    lo, hi = _normalize_edge(*e)
    if (lo, hi) not in g.edge_set:
        raise EdgeAbsentError(f"edge ({lo},{hi}) not present")
    if gadget.v == gadget.w:
        raise SelfLoopError("gadget endpoints must be distinct")
    prefix = label_prefix if label_prefix is not None else f"gadget:{lo}-{hi}:"
    base = Graph(g.n, tuple(x for x in g.edges if x != (lo, hi)), dict(g.labels))
    merged, b_map = disjoint_union(base, gadget.graph, b_label_prefix=prefix)
    gmap = dict(b_map)
    step = identify_vertices(merged, lo, gmap[gadget.v])
    gmap = {k: step.id_map[x] for k, x in gmap.items()}
    step = identify_vertices(step.graph, step.id_map[hi], gmap[gadget.w])
    gmap = {k: step.id_map[x] for k, x in gmap.items()}
    return ReplaceResult(step.graph, gmap)


# -- block-cut decomposition ----------------------------------------------------

@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_cuts: tuple[tuple[int, ...], ...]  # per block, the cut vertices inside it
    cut_blocks: Mapping[int, tuple[int, ...]]  # cut vertex -> indices of its blocks


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Biconnected components via iterative Tarjan; deterministic block order."""
    if not g.is_connected():
        raise DisconnectedError("block_cut_tree needs a connected graph")
    if g.n == 1:
        return BlockCutTree((frozenset({0}),), frozenset(), ((),), {})
    adj = g.adjacency
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    cut = [False] * g.n
    stack: list[Edge] = []
    blocks: list[set[int]] = []
    timer = 0

    for root in range(g.n):
        if disc[root] != -1:
            continue
        work = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while work:
            x, ptr = work[-1]
            if ptr < len(adj[x]):
                work[-1] = (x, ptr + 1)
                y = adj[x][ptr]
                if disc[y] == -1:
                    parent[y] = x
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((x, y))
                    work.append((y, 0))
                elif y != parent[x] and disc[y] < disc[x]:
                    stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            else:
                work.pop()
                if work:
                    p = work[-1][0]
                    low[p] = min(low[p], low[x])
                    if p == root:
                        root_children += 1
                    if (p != root and low[x] >= disc[p]) or (p == root and root_children > 1):
                        cut[p] = True
                    if low[x] >= disc[p]:
                        comp: set[int] = set()
                        while stack and stack[-1] != (p, x):
                            a, b = stack.pop()
                            comp.update((a, b))
                        if stack:
                            a, b = stack.pop()
                            comp.update((a, b))
                        blocks.append(comp)

    blocks.sort(key=lambda b: tuple(sorted(b)))
    frozen = tuple(frozenset(b) for b in blocks)
    cut_set = frozenset(v for v in range(g.n) if cut[v])
    block_cuts = tuple(tuple(sorted(b & cut_set)) for b in frozen)
    cut_blocks: dict[int, list[int]] = {v: [] for v in cut_set}
    for i, b in enumerate(frozen):
        for v in block_cuts[i]:
            cut_blocks[v].append(i)
    return BlockCutTree(frozen, cut_set, block_cuts, {v: tuple(ix) for v, ix in cut_blocks.items()})


# -- weighted graphs --------------------------------------------------------------

@dataclass(frozen=True)
class WeightedGraph:
    base: Graph
    weight: Mapping[Edge, int]

    def __post_init__(self):
        for e in self.base.edges:
            w = self.weight.get(e)
            if w is None:
                raise EdgeAbsentError(f"missing weight for edge {e}")
            if w < 0:
                raise ValueError(f"negative weight on edge {e}")

    def delete_vertex(self, v: int) -> "WeightedGraph":
        sub, id_map = self.base.delete_vertex(v)
        w = {
            (id_map[a], id_map[b]): self.weight[(a, b)]
            for a, b in self.base.edges
            if v not in (a, b)
        }
        return WeightedGraph(sub, w)


# -- file formats ------------------------------------------------------------------

def graph_to_json_dict(g: Graph) -> dict:
    return {
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges],
        "labels": {role: v for role, v in sorted(g.labels.items())},
    }


def graph_from_json_dict(d: dict) -> Graph:
    try:
        n = d["n"]
        edges = [tuple(e) for e in d["edges"]]
        labels = d.get("labels", {})
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from exc
    return from_edge_list(n, edges, labels)


def _no_duplicate_keys(pairs):
    d = {}
    for k, v in pairs:
        if k in d:
            raise DuplicateRoleError(f"duplicate key {k!r} in JSON object")
        d[k] = v
    return d


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_json_dict(g), sort_keys=True, separators=(",", ":")) + "\n"


def graph_from_json(text: str) -> Graph:
    try:
        d = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    except DuplicateRoleError as exc:
        raise ParseError(str(exc)) from exc
    return graph_from_json_dict(d)


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    lines += [f"# {role} {v}" for role, v in sorted(g.labels.items())]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    n = m = None
    edges: list[Edge] = []
    labels: list[tuple[str, int]] = []
    seen_edges = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) != 2:
                raise ParseError("label comment must read '# role id'", line=lineno)
            try:
                labels.append((parts[0], int(parts[1])))
            except ValueError:
                raise ParseError(f"bad label id {parts[1]!r}", line=lineno)
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise ParseError("header must read 'n m'", line=lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("header must hold two integers", line=lineno)
            continue
        if len(parts) != 2:
            raise ParseError("edge line must read 'u v'", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge line must hold two integers", line=lineno)
        edges.append((u, v))
        seen_edges += 1
    if n is None:
        raise ParseError("missing 'n m' header", line=1)
    if seen_edges != m:
        raise ParseError(f"header promised {m} edges, found {seen_edges}")
    try:
        return from_edge_list(n, edges, labels)
    except DuplicateRoleError as exc:
        raise ParseError(str(exc)) from exc


def write_graph(g: Graph, path) -> None:
    """JSON when the path ends in .json, edge-list text otherwise."""
    text = graph_to_json(g) if str(path).endswith(".json") else graph_to_text(g)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(text)
    return graph_from_text(text)
