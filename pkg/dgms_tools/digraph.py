#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

from __future__ import annotations

import graphlib
from dataclasses import dataclass, field
from typing import Hashable, Iterable

# vertex ids: any hashable; generated and parsed games use strings
Vertex = Hashable

# =============================================================================
#                                   CLASSES
# =============================================================================

@dataclass(frozen = True)
class Edge:

    id: int
    source: Vertex
    target: Vertex

    @property
    def is_loop(self) -> bool:
        return self.source == self.target

@dataclass(frozen = True)
class Digraph:
    """
    Finite directed graph with stable integer edge ids; parallel edges are
    permitted, loops are limited to one per vertex.

    `terminal_loops` holds the ids of loops flagged as terminal by
    `normalize_terminals()`; adjacency is derived on construction and is not
    part of equality.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    terminal_loops: frozenset[int] = frozenset()
    out_edges: dict[Vertex, tuple[Edge, ...]] = field(
        init = False, repr = False, compare = False
    )
    edge_by_id: dict[int, Edge] = field(
        init = False, repr = False, compare = False
    )

    def __post_init__(
        self
    ) -> None:

        out_edges: dict[Vertex, list[Edge]] = {}
        for v in self.vertices:
            if v in out_edges:
                raise ValueError(
                    f'duplicate vertex id \'{v}\''
                )
            out_edges[v] = []

        edge_by_id: dict[int, Edge] = {}
        looped = set()
        for edge in self.edges:
            if edge.id in edge_by_id:
                raise ValueError(
                    f'duplicate edge id {edge.id}'
                )
            for endpoint in (edge.source, edge.target):
                if endpoint not in out_edges:
                    raise ValueError(
                        f'edge {edge.id} ({edge.source} -> {edge.target}) '
                        f'references the unknown vertex \'{endpoint}\''
                    )
            if edge.is_loop:
                if edge.source in looped:
                    raise ValueError(
                        f'vertex \'{edge.source}\' already carries a loop; at '
                        f'most one loop per vertex is allowed'
                    )
                looped.add(edge.source)
            edge_by_id[edge.id] = edge
            out_edges[edge.source].append(edge)

        for edge_id in self.terminal_loops:
            edge = edge_by_id.get(edge_id)
            if edge is None or not edge.is_loop:
                raise ValueError(
                    f'edge {edge_id} is flagged terminal but is not a loop'
                )
            if len(out_edges[edge.source]) != 1:
                raise ValueError(
                    f'loop at \'{edge.source}\' is flagged terminal but the '
                    f'vertex has other outgoing edges'
                )

        object.__setattr__(
            self, 'out_edges', {v: tuple(es) for v, es in out_edges.items()}
        )
        object.__setattr__(self, 'edge_by_id', edge_by_id)

    def __contains__(
        self,
        v: Vertex
    ) -> bool:

        return v in self.out_edges

    def __len__(
        self
    ) -> int:

        return len(self.vertices)

    def successors(
        self,
        v: Vertex
    ) -> tuple[Vertex, ...]:

        return tuple(edge.target for edge in self.out_edges[v])

    def loop(
        self,
        v: Vertex
    ) -> Edge | None:

        for edge in self.out_edges[v]:
            if edge.is_loop:
                return edge
        return None

    def is_terminal(
        self,
        v: Vertex
    ) -> bool:
        """
        Returns True if the vertex has a loop and no other outgoing edge, i.e.,
        if it is a terminal (its loop, flagged or not, is terminal).
        """

        edges = self.out_edges[v]
        return len(edges) == 1 and edges[0].is_loop

@dataclass(frozen = True)
class SccDecomposition:
    """
    Partition of a digraph's vertices into strongly connected components.

    Component ids follow the reverse topological order of the condensation:
    every edge between two components runs from a higher id to a lower id,
    so iterating ids in increasing order visits sinks first.
    """

    components: tuple[tuple[Vertex, ...], ...]
    component_of: dict[Vertex, int]
    j_zero: frozenset[int]
    j_terminal: frozenset[int]
    has_dicycle: tuple[bool, ...]

    def __len__(
        self
    ) -> int:

        return len(self.components)

@dataclass(frozen = True)
class Condensation:

    quotient: Digraph
    lift: dict[int, int]

    def topological_order(
        self
    ) -> list[int]:
        """
        Returns the component ids of the quotient digraph in topological
        order (sources first).

        Raises:
            graphlib.CycleError: If the quotient digraph is not acyclic.
        """

        sorter = graphlib.TopologicalSorter(
            {j: () for j in self.quotient.vertices}
        )
        for edge in self.quotient.edges:
            sorter.add(edge.target, edge.source)
        return list(sorter.static_order())

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def build_digraph(
    vertices: Iterable[Vertex],
    edges: Iterable[tuple[int, Vertex, Vertex]]
) -> Digraph:
    """
    Returns a digraph over the supplied vertex ids with the supplied
    (edge id, source, target) triples, kept in insertion order.

    Args:
        vertices (Iterable[Vertex]): Vertex ids.
        edges (Iterable[tuple[int, Vertex, Vertex]]): Edge triples.

    Returns:
        Digraph: Digraph.

    Raises:
        ValueError: If a vertex id is duplicated;
        ValueError: If an edge id is duplicated;
        ValueError: If an edge references a vertex that does not exist;
        ValueError: If a vertex would carry more than one loop.
    """

    return Digraph(
        vertices = tuple(vertices),
        edges = tuple(
            Edge(id = edge_id, source = source, target = target)
            for edge_id, source, target in edges
        )
    )

def normalize_terminals(
    digraph: Digraph
) -> Digraph:
    """
    Returns a copy of the digraph in which every vertex without a non-loop
    outgoing edge carries exactly one loop flagged terminal; loops are added
    where missing (with fresh edge ids) and existing edge ids are kept, so the
    operation is idempotent.

    Args:
        digraph (Digraph): Digraph.

    Returns:
        Digraph: Normalized digraph.
    """

    edges = list(digraph.edges)
    terminal_loops = set(digraph.terminal_loops)
    next_id = max((edge.id for edge in edges), default = -1) + 1

    for v in digraph.vertices:
        if any(not edge.is_loop for edge in digraph.out_edges[v]):
            continue
        loop = digraph.loop(v)
        if loop is None:
            loop = Edge(id = next_id, source = v, target = v)
            next_id += 1
            edges.append(loop)
        terminal_loops.add(loop.id)

    return Digraph(
        vertices = digraph.vertices,
        edges = tuple(edges),
        terminal_loops = frozenset(terminal_loops)
    )

def scc_decompose(
    digraph: Digraph
) -> SccDecomposition:
    """
    Returns the strongly connected component decomposition of the digraph,
    computed in linear time with an iterative (explicit work stack) version
    of Tarjan's algorithm.

    Components are numbered in the order Tarjan's algorithm completes them,
    which is a reverse topological order of the condensation (sinks first);
    vertices inside a component keep the digraph's vertex order.

    Args:
        digraph (Digraph): Digraph.

    Returns:
        SccDecomposition: Strongly connected component decomposition.
    """

    position = {v: i for i, v in enumerate(digraph.vertices)}
    index: dict[Vertex, int] = {}
    lowlink: dict[Vertex, int] = {}
    on_stack: set[Vertex] = set()
    stack: list[Vertex] = []
    components: list[tuple[Vertex, ...]] = []

    for root in digraph.vertices:
        if root in index:
            continue
        index[root] = lowlink[root] = len(index)
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(digraph.successors(root)))]
        while work:
            v, successors = work[-1]
            descended = False
            for w in successors:
                if w not in index:
                    index[w] = lowlink[w] = len(index)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(digraph.successors(w))))
                    descended = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == v:
                        break
                components.append(tuple(sorted(component, key = position.get)))

    component_of = {
        v: j for j, component in enumerate(components) for v in component
    }
    has_dicycle = tuple(
        len(component) > 1 or digraph.loop(component[0]) is not None
        for component in components
    )
    j_zero = frozenset(
        j for j, cyclic in enumerate(has_dicycle) if not cyclic
    )
    j_terminal = frozenset(
        j for j, component in enumerate(components)
        if len(component) == 1 and digraph.is_terminal(component[0])
    )

    return SccDecomposition(
        components = tuple(components),
        component_of = component_of,
        j_zero = j_zero,
        j_terminal = j_terminal,
        has_dicycle = has_dicycle
    )

def condense(
    digraph: Digraph,
    decomposition: SccDecomposition
) -> Condensation:
    """
    Returns the condensation of the digraph: the acyclic quotient digraph over
    component ids, with one quotient edge per ordered pair of distinct
    components joined by at least one original edge, and a lift from each
    quotient edge to the first original edge (in insertion order) that
    witnesses it.

    Args:
        digraph (Digraph): Digraph.
        decomposition (SccDecomposition): Strongly connected component
            decomposition of the digraph.

    Returns:
        Condensation: Condensation.

    Raises:
        ValueError: If the decomposition does not belong to the digraph.
    """

    if set(decomposition.component_of) != set(digraph.vertices):
        raise ValueError(
            'the decomposition does not cover exactly the vertices of the '
            'digraph'
        )

    quotient_edges: dict[tuple[int, int], int] = {}
    lift: dict[int, int] = {}
    for edge in digraph.edges:
        j = decomposition.component_of[edge.source]
        k = decomposition.component_of[edge.target]
        if j == k or (j, k) in quotient_edges:
            continue
        quotient_edges[(j, k)] = len(quotient_edges)
        lift[quotient_edges[(j, k)]] = edge.id

    quotient = build_digraph(
        range(len(decomposition)),
        ((edge_id, j, k) for (j, k), edge_id in quotient_edges.items())
    )

    return Condensation(quotient = quotient, lift = lift)

# =============================================================================
#                                     EOF
# =============================================================================
