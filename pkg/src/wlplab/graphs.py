"""Simple graphs as adjacency bitsets, family constructors, and a small spec parser.

Vertices are labeled 1..n in every public interface; internally vertex v
occupies bit v-1 of each adjacency mask.  Graphs are immutable (frozen
dataclasses over tuples), so they can be shared across worker threads
without synchronization.
"""
from __future__ import annotations

from dataclasses import dataclass


class GraphSpecError(ValueError):
    """Malformed or out-of-range graph specification."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    adj[i] is the neighbor bitmask of vertex i+1; bit j-1 set means j is a
    neighbor.  Symmetric, irreflexive, indices in range (checked on build).
    n = 0 (the empty graph on no vertices) is allowed; it arises naturally
    when closed neighborhoods are deleted.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphSpecError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphSpecError("adjacency list length does not match vertex count")
        full = (1 << self.n) - 1
        for i, mask in enumerate(self.adj):
            if mask & ~full:
                raise GraphSpecError(f"vertex {i + 1} has a neighbor outside 1..{self.n}")
            if mask >> i & 1:
                raise GraphSpecError(f"vertex {i + 1} has a self-loop")
            rest = mask
            while rest:
                low = rest & -rest
                rest ^= low
                j = low.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise GraphSpecError(f"edge {{{i + 1},{j + 1}}} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphSpecError(f"edge {{{u},{v}}} out of range 1..{n}")
            if u == v:
                raise GraphSpecError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            rest = self.adj[i] >> (i + 1) << (i + 1)
            while rest:
                low = rest & -rest
                rest ^= low
                out.append((i + 1, low.bit_length()))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v - 1].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_mask_to_vertices(self.adj[v - 1]))

    def closed_neighborhood_mask(self, v: int) -> int:
        """Bitmask of N[v] = N(v) together with v itself (0-based bits)."""
        self._check_vertex(v)
        return self.adj[v - 1] | 1 << (v - 1)

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(m.bit_count() for m in self.adj))

    def induced(self, keep_mask: int) -> "Graph":
        """Induced subgraph on the vertices in keep_mask, relabeled 1..k
        preserving the relative order of the surviving labels."""
        kept = _mask_to_bits(keep_mask & self.full_mask)
        index = {b: i for i, b in enumerate(kept)}
        adj = []
        for b in kept:
            mask = self.adj[b] & keep_mask
            new = 0
            while mask:
                low = mask & -mask
                mask ^= low
                new |= 1 << index[low.bit_length() - 1]
            adj.append(new)
        return Graph(len(kept), tuple(adj))

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphSpecError(f"vertex {v} out of range 1..{self.n}")


def _mask_to_bits(mask: int) -> list[int]:
    bits = []
    while mask:
        low = mask & -mask
        mask ^= low
        bits.append(low.bit_length() - 1)
    return bits


def _mask_to_vertices(mask: int) -> list[int]:
    return [b + 1 for b in _mask_to_bits(mask)]


# ---------------------------------------------------------------------------
# Graph families
# ---------------------------------------------------------------------------

FAMILY_KINDS = (
    "path", "cycle", "pan", "ce", "tadpole3", "complete", "empty", "bk",
    "union", "file",
)


@dataclass(frozen=True)
class FamilySpec:
    """A parsed graph specification: a family kind plus its parameters.

    For kind 'union' the params are two nested FamilySpec values; for 'file'
    a single path string; otherwise a tuple of integers.
    """

    kind: str
    params: tuple

    def canonical(self) -> str:
        if self.kind == "union":
            a, b = self.params
            return f"union({a.canonical()},{b.canonical()})"
        if self.kind == "file":
            return f"file:{self.params[0]}"
        if self.kind == "tadpole3":
            return f"tadpole:3,{self.params[0]}"
        return f"{self.kind}:" + ",".join(str(p) for p in self.params)


def _path_edges(n):
    return [(i, i + 1) for i in range(1, n)]


def make_family(spec: FamilySpec) -> Graph:
    """Build the graph a FamilySpec describes, with the standard labeling:
    paths and cycles 1..n in order, pan pendant at n+1 attached to n, the
    cycle-with-chord family adds {n-2, n}, and the triangle tadpole uses
    cycle vertices 1..3 with path 4..n+3 bridged at {3,4}."""
    kind, params = spec.kind, spec.params

    def need(count):
        if len(params) != count or not all(isinstance(p, int) for p in params):
            raise GraphSpecError(f"{kind} expects {count} integer parameter(s)")

    if kind == "path":
        need(1)
        n = params[0]
        if n < 1:
            raise GraphSpecError(f"path requires n >= 1, got {n}")
        return Graph.from_edges(n, _path_edges(n))
    if kind == "cycle":
        need(1)
        n = params[0]
        if n < 3:
            raise GraphSpecError(f"cycle requires n >= 3, got {n}")
        return Graph.from_edges(n, _path_edges(n) + [(1, n)])
    if kind == "pan":
        need(1)
        n = params[0]
        if n < 3:
            raise GraphSpecError(f"pan requires n >= 3, got {n}")
        return Graph.from_edges(n + 1, _path_edges(n) + [(1, n), (n, n + 1)])
    if kind == "ce":
        need(1)
        n = params[0]
        # n = 3 would duplicate an existing cycle edge; rejected rather than
        # silently deduplicated.
        if n < 4:
            raise GraphSpecError(f"ce requires n >= 4, got {n}")
        return Graph.from_edges(n, _path_edges(n) + [(1, n), (n - 2, n)])
    if kind == "tadpole3":
        need(1)
        n = params[0]
        if n < 1:
            raise GraphSpecError(f"tadpole:3,n requires n >= 1, got {n}")
        edges = [(1, 2), (1, 3), (2, 3), (3, 4)]
        edges += [(i, i + 1) for i in range(4, n + 3)]
        return Graph.from_edges(n + 3, edges)
    if kind == "complete":
        need(1)
        n = params[0]
        if n < 1:
            raise GraphSpecError(f"complete requires n >= 1, got {n}")
        return Graph.from_edges(n, [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)])
    if kind == "empty":
        need(1)
        n = params[0]
        if n < 1:
            raise GraphSpecError(f"empty requires n >= 1, got {n}")
        return Graph(n, (0,) * n)
    if kind == "bk":
        need(2)
        m, n = params
        if not (m >= 1 and n > m):
            raise GraphSpecError(f"bk requires 1 <= m < n, got m={m}, n={n}")
        # Blocks: V1 = 1..n-m, V2 = n-m+1..n, V3 = n+1..n+m.  Complete
        # bipartite between V1 and V2, perfect matching between V2 and V3.
        edges = [(u, v) for u in range(1, n - m + 1) for v in range(n - m + 1, n + 1)]
        edges += [(n - m + i, n + i) for i in range(1, m + 1)]
        return Graph.from_edges(n + m, edges)
    if kind == "union":
        if len(params) != 2 or not all(isinstance(p, FamilySpec) for p in params):
            raise GraphSpecError("union expects two nested specs")
        return disjoint_union(make_family(params[0]), make_family(params[1]))
    if kind == "file":
        if len(params) != 1 or not isinstance(params[0], str):
            raise GraphSpecError("file expects a path")
        return load_edge_list(params[0])
    raise GraphSpecError(f"unknown family kind {kind!r}")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of g2 are relabeled by the offset g1.n."""
    shift = g1.n
    adj = list(g1.adj) + [m << shift for m in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on V minus {v}, relabeled contiguously in order."""
    g._check_vertex(v)
    return g.induced(g.full_mask & ~(1 << (v - 1)))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    """Induced subgraph on V minus N[v], relabeled contiguously in order."""
    return g.induced(g.full_mask & ~g.closed_neighborhood_mask(v))


# ---------------------------------------------------------------------------
# Spec grammar
#
#   path:<n> | cycle:<n> | pan:<n> | ce:<n> | tadpole:3,<n> | complete:<n>
#   | empty:<n> | bk:<m>,<n> | union(<spec>,<spec>) | file:<path>
# ---------------------------------------------------------------------------

_INT_ARITY = {"path": 1, "cycle": 1, "pan": 1, "ce": 1, "complete": 1,
              "empty": 1, "bk": 2, "tadpole": 2}


def parse_family_spec(text: str) -> FamilySpec:
    spec, pos = _parse_spec(text, 0)
    if pos != len(text):
        raise GraphSpecError("trailing characters after spec", offset=pos)
    return spec


def parse_spec(text: str) -> Graph:
    """Parse a spec string and build the graph it describes."""
    return make_family(parse_family_spec(text))


def _parse_spec(text: str, pos: int) -> tuple[FamilySpec, int]:
    start = pos
    while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
        pos += 1
    word = text[start:pos]
    if not word:
        raise GraphSpecError("expected a family name", offset=start)
    if word == "union":
        pos = _expect(text, pos, "(")
        left, pos = _parse_spec(text, pos)
        pos = _expect(text, pos, ",")
        right, pos = _parse_spec(text, pos)
        pos = _expect(text, pos, ")")
        return FamilySpec("union", (left, right)), pos
    pos = _expect(text, pos, ":")
    if word == "file":
        end = pos
        while end < len(text) and text[end] not in ",)":
            end += 1
        if end == pos:
            raise GraphSpecError("file spec needs a path", offset=pos)
        return FamilySpec("file", (text[pos:end],)), end
    arity = _INT_ARITY.get(word)
    if arity is None:
        raise GraphSpecError(f"unknown family name {word!r}", offset=start)
    values = []
    for i in range(arity):
        if i:
            pos = _expect(text, pos, ",")
        value, pos = _parse_int(text, pos)
        values.append(value)
    if word == "tadpole":
        if values[0] != 3:
            raise GraphSpecError("only tadpole:3,<n> is supported", offset=start)
        return FamilySpec("tadpole3", (values[1],)), pos
    return FamilySpec(word, tuple(values)), pos


def _expect(text: str, pos: int, ch: str) -> int:
    if pos >= len(text) or text[pos] != ch:
        raise GraphSpecError(f"expected {ch!r}", offset=pos)
    return pos + 1


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise GraphSpecError("expected an integer", offset=start)
    return int(text[start:pos]), pos


def load_edge_list(path: str) -> Graph:
    """Read an edge-list file: first line n, then 'u v' lines with
    1 <= u < v <= n.  Duplicate edges are rejected; '#' lines are comments."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read(), source=path)


def parse_edge_list(text: str, source: str = "<edge list>") -> Graph:
    n = None
    seen = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphSpecError(f"{source}:{lineno}: expected a vertex count, got {line!r}") from None
            if n < 0:
                raise GraphSpecError(f"{source}:{lineno}: vertex count must be nonnegative")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphSpecError(f"{source}:{lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphSpecError(f"{source}:{lineno}: expected integers, got {line!r}") from None
        if not (1 <= u < v <= n):
            raise GraphSpecError(f"{source}:{lineno}: edge needs 1 <= u < v <= {n}")
        if (u, v) in seen:
            raise GraphSpecError(f"{source}:{lineno}: duplicate edge {{{u},{v}}}")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise GraphSpecError(f"{source}: missing vertex count line")
    return Graph.from_edges(n, edges)
