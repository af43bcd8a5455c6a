"""Core k-uniform hypergraph types and primitives.

Vertices are 0-based contiguous integers. Edge lists are kept in a canonical
storage order (sorted tuples, lexicographically sorted list) so that equal
objects compare equal structurally. All types are immutable; all operations
are pure functions of their inputs.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union


class FormatError(ValueError):
    """Malformed hypergraph text, with a 1-based line number in the message."""


@dataclass(frozen=True, slots=True)
class Hypergraph:
    """Simple k-uniform hypergraph in canonical storage order.

    Fields must already be normalized (strictly increasing k-tuples, list
    sorted, duplicate-free). Build from raw input with `make_hypergraph`,
    which validates and normalizes.
    """

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True, slots=True)
class MultiHypergraph:
    """k-uniform multihypergraph: non-decreasing k-tuples with multiplicities.

    A tuple may repeat a vertex (within-tuple repeats) and carries a positive
    multiplicity. The degree of v counts multiplicity times the number of
    occurrences of v in each tuple.
    """

    k: int
    n: int
    edges: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for tup, mult in self.edges:
            for v in tup:
                deg[v] += mult
        return deg

    def is_simple(self) -> bool:
        return all(
            mult == 1 and all(a < b for a, b in zip(tup, tup[1:]))
            for tup, mult in self.edges
        )

    def to_hypergraph(self) -> Hypergraph:
        """Lossless conversion; valid only when `is_simple()`."""
        if not self.is_simple():
            raise ValueError("multihypergraph has repeats; not convertible")
        return Hypergraph(self.k, self.n, tuple(tup for tup, _ in self.edges))


AnyHypergraph = Union[Hypergraph, MultiHypergraph]


@dataclass(frozen=True, slots=True)
class LayerDecomposition:
    """BFS layers around a root: S_0 = {root}, S_1, ..., S_L."""

    root: int
    layers: tuple[frozenset[int], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        """|S_0|, |S_1|, ..., |S_L| (|S_0| is always 1)."""
        return tuple(len(s) for s in self.layers)

    @property
    def depth(self) -> int:
        return len(self.layers) - 1


class DenseWitness(NamedTuple):
    """A connected edge subset whose union violates the sparsity bound."""

    edge_indices: tuple[int, ...]
    vertices: frozenset[int]


def make_hypergraph(k: int, n: int, raw_edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and normalize raw edges into a Hypergraph.

    Each raw edge must contain k distinct vertex ids in [0, n); tuples are
    sorted internally, the edge list is sorted, and duplicates are rejected.
    """
    if k < 2:
        raise ValueError(f"edge size k={k} must be >= 2")
    if n < k:
        raise ValueError(f"vertex count n={n} smaller than edge size k={k}")
    edges: list[tuple[int, ...]] = []
    for raw in raw_edges:
        tup = tuple(sorted(raw))
        if len(set(tup)) != len(tup):
            raise ValueError(f"repeated vertex in edge {tup}")
        if len(tup) != k:
            raise ValueError(f"edge {tup} has {len(tup)} vertices, expected {k}")
        if tup[0] < 0 or tup[-1] >= n:
            raise ValueError(f"vertex out of range [0, {n}) in edge {tup}")
        edges.append(tup)
    edges.sort()
    for a, b in zip(edges, edges[1:]):
        if a == b:
            raise ValueError(f"duplicate edge {a}")
    return Hypergraph(k, n, tuple(edges))


def make_multihypergraph(
    k: int, n: int, raw_edges: Iterable[Iterable[int]]
) -> MultiHypergraph:
    """Aggregate raw tuples (repeats allowed) into a MultiHypergraph."""
    if k < 2:
        raise ValueError(f"edge size k={k} must be >= 2")
    if n < 1:
        raise ValueError("need at least one vertex")
    counts: Counter[tuple[int, ...]] = Counter()
    for raw in raw_edges:
        tup = tuple(sorted(raw))
        if len(tup) != k:
            raise ValueError(f"edge {tup} has {len(tup)} vertices, expected {k}")
        if tup[0] < 0 or tup[-1] >= n:
            raise ValueError(f"vertex out of range [0, {n}) in edge {tup}")
        counts[tup] += 1
    return MultiHypergraph(k, n, tuple(sorted(counts.items())))


def edge_tuples(hg: AnyHypergraph) -> Iterable[tuple[int, ...]]:
    """Distinct edge tuples, ignoring multiplicities."""
    if isinstance(hg, MultiHypergraph):
        return (tup for tup, _ in hg.edges)
    return iter(hg.edges)


def link(H: Hypergraph, v: int) -> Hypergraph:
    """The link of v: delete v from every edge containing it.

    The result is (k-1)-uniform on n-1 vertices; ids above v shift down by
    one (order-preserving deletion). Its edge count equals deg(v).
    """
    if H.k < 3:
        raise ValueError("links are defined here only for k >= 3")
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} out of range")
    out = []
    for e in H.edges:
        if v in e:
            out.append(tuple(u if u < v else u - 1 for u in e if u != v))
    out.sort()
    return Hypergraph(H.k - 1, H.n - 1, tuple(out))


def all_links(H: Hypergraph) -> list[Hypergraph]:
    """Links of every vertex, built in one pass over the edge list."""
    if H.k < 3:
        raise ValueError("links are defined here only for k >= 3")
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(H.n)]
    for e in H.edges:
        for v in e:
            buckets[v].append(tuple(u if u < v else u - 1 for u in e if u != v))
    for b in buckets:
        b.sort()
    return [Hypergraph(H.k - 1, H.n - 1, tuple(b)) for b in buckets]


def adjacency_lists(hg: AnyHypergraph) -> list[list[int]]:
    """Per-vertex neighbor lists; two vertices are adjacent iff they co-occur
    in some edge. Multiplicities and within-tuple repeats are ignored."""
    nbr: list[set[int]] = [set() for _ in range(hg.n)]
    for tup in edge_tuples(hg):
        for a, b in itertools.combinations(set(tup), 2):
            nbr[a].add(b)
            nbr[b].add(a)
    return [sorted(s) for s in nbr]


def bfs_layers(hg: AnyHypergraph, v: int, lmax: int) -> LayerDecomposition:
    """BFS layers from v up to depth min(lmax, eccentricity of v)."""
    if not 0 <= v < hg.n:
        raise ValueError(f"vertex {v} out of range")
    if lmax < 1:
        raise ValueError("lmax must be >= 1")
    adj = adjacency_lists(hg)
    layers = [frozenset({v})]
    seen = {v}
    frontier = [v]
    for _ in range(lmax):
        nxt = {u for w in frontier for u in adj[w] if u not in seen}
        if not nxt:
            break
        layers.append(frozenset(nxt))
        seen |= nxt
        frontier = list(nxt)
    return LayerDecomposition(root=v, layers=tuple(layers))


def edges_within(H: Hypergraph, S: Iterable[int]) -> int:
    """Number of edges entirely contained in the vertex set S."""
    Sset = frozenset(S)
    if Sset and (min(Sset) < 0 or max(Sset) >= H.n):
        raise ValueError("S contains out-of-range vertices")
    return sum(1 for e in H.edges if Sset.issuperset(e))


def find_dense_witness(H: Hypergraph, tmax: int) -> DenseWitness | None:
    """Search for a vertex set S with e_H(S) > |S|/(k-1).

    Enumerates connected edge subsets of size t <= tmax whose union S
    satisfies |S| <= t*(k-1) - 1; such a subset certifies e_H(S) >= t >
    |S|/(k-1). Any minimal violating S is recovered this way provided its
    internal edge count is at most tmax, because its internal edges are
    connected and cover it exactly.

    Returns the minimal witness found (fewest edges, then smallest union,
    then lexicographically least index tuple), or None.
    """
    if tmax < 2:
        raise ValueError("tmax must be >= 2")
    m = H.m
    km1 = H.k - 1
    union_cap = tmax * km1 - 1
    incident: dict[int, list[int]] = {}
    for i, e in enumerate(H.edges):
        for v in e:
            incident.setdefault(v, []).append(i)
    edge_adj: list[set[int]] = [set() for _ in range(m)]
    for ids in incident.values():
        for a, b in itertools.combinations(ids, 2):
            edge_adj[a].add(b)
            edge_adj[b].add(a)

    best: tuple[int, int, tuple[int, ...]] | None = None
    best_union: frozenset[int] | None = None

    def consider(sub: list[int], union: set[int]) -> None:
        nonlocal best, best_union
        t = len(sub)
        if t < 2 or len(union) > t * km1 - 1:
            return
        key = (t, len(union), tuple(sorted(sub)))
        if best is None or key < best:
            best = key
            best_union = frozenset(union)

    def extend(root: int, sub: list[int], union: set[int],
               ext: list[int], closed: set[int]) -> None:
        consider(sub, union)
        if len(sub) == tmax:
            return
        for pos, w in enumerate(ext):
            new_union = union | set(H.edges[w])
            if len(new_union) > union_cap:
                continue
            fresh = [u for u in edge_adj[w] if u > root and u not in closed]
            extend(root, sub + [w], new_union,
                   ext[pos + 1:] + fresh, closed | edge_adj[w])

    for i in range(m):
        ext0 = [j for j in edge_adj[i] if j > i]
        extend(i, [i], set(H.edges[i]), ext0, {i} | edge_adj[i])

    if best is None:
        return None
    return DenseWitness(edge_indices=best[2], vertices=best_union)


def permute_hypergraph(H: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Isomorphic copy with vertex v renamed to perm[v]."""
    if sorted(perm) != list(range(H.n)):
        raise ValueError("perm is not a bijection on 0..n-1")
    edges = sorted(tuple(sorted(perm[v] for v in e)) for e in H.edges)
    return Hypergraph(H.k, H.n, tuple(edges))


def permute_multihypergraph(mh: MultiHypergraph, perm: Sequence[int]) -> MultiHypergraph:
    if sorted(perm) != list(range(mh.n)):
        raise ValueError("perm is not a bijection on 0..n-1")
    counts: Counter[tuple[int, ...]] = Counter()
    for tup, mult in mh.edges:
        counts[tuple(sorted(perm[v] for v in tup))] += mult
    return MultiHypergraph(mh.k, mh.n, tuple(sorted(counts.items())))


# --- text format -----------------------------------------------------------
#
# Simple:   line 1 "k n m", then m lines of k space-separated strictly
#           increasing vertex ids.
# Multi:    line 1 "k n m multi", tuples non-decreasing, optional trailing
#           "x<c>" multiplicity token (omitted when c = 1).


def render_text(hg: AnyHypergraph) -> str:
    lines = []
    if isinstance(hg, MultiHypergraph):
        lines.append(f"{hg.k} {hg.n} {hg.m} multi")
        for tup, mult in hg.edges:
            body = " ".join(str(v) for v in tup)
            lines.append(body if mult == 1 else f"{body} x{mult}")
    else:
        lines.append(f"{hg.k} {hg.n} {hg.m}")
        for e in hg.edges:
            lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: {what} {token!r} is not an integer") from None


def parse_text(text: str) -> AnyHypergraph:
    """Parse the line-oriented hypergraph format; raises FormatError with the
    offending 1-based line number."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("line 1: empty input")
    head = lines[0].split()
    multi = False
    if len(head) == 4 and head[3] == "multi":
        multi = True
    elif len(head) != 3:
        raise FormatError("line 1: header must be 'k n m' or 'k n m multi'")
    k = _parse_int(head[0], 1, "k")
    n = _parse_int(head[1], 1, "n")
    m = _parse_int(head[2], 1, "m")
    if k < 2 or n < 1 or m < 0:
        raise FormatError("line 1: need k >= 2, n >= 1, m >= 0")
    if len(lines) - 1 != m:
        raise FormatError(
            f"line {len(lines)}: expected {m} edge lines, found {len(lines) - 1}"
        )
    edges: list[tuple[int, ...]] = []
    mults: list[int] = []
    seen: set[tuple[int, ...]] = set()
    for idx, line in enumerate(lines[1:], start=2):
        toks = line.split()
        mult = 1
        if multi and len(toks) == k + 1 and toks[-1].startswith("x"):
            mult = _parse_int(toks[-1][1:], idx, "multiplicity")
            if mult < 1:
                raise FormatError(f"line {idx}: multiplicity must be >= 1")
            toks = toks[:-1]
        if len(toks) != k:
            raise FormatError(f"line {idx}: expected {k} vertex ids, got {len(toks)}")
        tup = tuple(_parse_int(t, idx, "vertex id") for t in toks)
        for v in tup:
            if not 0 <= v < n:
                raise FormatError(f"line {idx}: vertex {v} out of range [0, {n})")
        if multi:
            if any(a > b for a, b in zip(tup, tup[1:])):
                raise FormatError(f"line {idx}: tuple must be non-decreasing")
        else:
            if any(a >= b for a, b in zip(tup, tup[1:])):
                raise FormatError(f"line {idx}: tuple must be strictly increasing")
        if tup in set(edges):
            raise FormatError(f"line {idx}: duplicate edge tuple {tup}")
        edges.append(tup)
        mults.append(mult)
    if multi:
        return MultiHypergraph(k, n, tuple(sorted(zip(edges, mults))))
    if n < k:
        raise FormatError("line 1: n smaller than k for a simple hypergraph")
    return Hypergraph(k, n, tuple(sorted(edges)))


def load(path: str) -> AnyHypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_text(fh.read())


def dump(hg: AnyHypergraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_text(hg))
