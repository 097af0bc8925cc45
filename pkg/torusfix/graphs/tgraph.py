"""
T-graphs: finite multigraphs whose edges carry nonzero integral labels.

Holds the combinatorial side of graph realizability: fixed subgraphs, parallel
classes, the forest criterion and the GKM axiom check.
"""

"""
Copyright (c) 2025 Firefly Software Solutions Inc.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at:

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.lattice import SubgroupLattice, canonicalize, identity_component
from ..core.linalg import span_rank
from ..core.poset import PairPoset, generate_stable
from ..core.polynomials import LinearForm
from ..errors import InputError

logger = logging.getLogger(__name__)

Label = Tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    label: Label

    def form(self) -> LinearForm:
        return LinearForm.of(self.label)

    def to_dict(self) -> Dict[str, Any]:
        return {"u": self.u, "v": self.v, "label": list(self.label)}


@dataclass(frozen=True)
class TGraph:
    """A T-graph on a torus of rank n. Values are immutable and hashable."""

    n: int
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError(f"Torus rank must be positive, got {self.n}")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("Vertex identifiers must be unique")
        known = set(self.vertices)
        for index, edge in enumerate(self.edges):
            if edge.u not in known or edge.v not in known:
                raise InputError(f"Edge {index} joins unknown vertices {edge.u!r}, {edge.v!r}")
            if edge.u == edge.v:
                raise InputError(f"Edge {index} is a loop at {edge.u!r}")
            if len(edge.label) != self.n:
                raise InputError(f"Edge {index} label {list(edge.label)} does not have length {self.n}")
            if not any(edge.label):
                raise InputError(f"Edge {index} has the zero label")

    @classmethod
    def build(cls, n: int, vertices: Sequence[str], edges: Sequence[Tuple[str, str, Sequence[int]]]) -> "TGraph":
        return cls(n, tuple(vertices), tuple(Edge(u, v, tuple(int(x) for x in label)) for u, v, label in edges))

    def vertex_index(self, vertex: str) -> int:
        return self.vertices.index(vertex)

    def relabel(self, matrix: Sequence[Sequence[int]]) -> "TGraph":
        """Apply an integer matrix to every label."""
        edges = []
        for edge in self.edges:
            label = tuple(sum(row[j] * edge.label[j] for j in range(self.n)) for row in matrix)
            edges.append(Edge(edge.u, edge.v, label))
        return TGraph(self.n, self.vertices, tuple(edges))

    def with_edges(self, indices: Sequence[int]) -> "TGraph":
        return TGraph(self.n, self.vertices, tuple(self.edges[i] for i in indices))

    def connected_components(self) -> int:
        forest = DisjointSet(self.vertices)
        for edge in self.edges:
            forest.union(edge.u, edge.v)
        return len({forest.find(v) for v in self.vertices})

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "vertices": list(self.vertices), "edges": [e.to_dict() for e in self.edges]}


class DisjointSet:
    """Union-find with path halving and union by size."""

    def __init__(self, items: Sequence[str]):
        self.parent = {item: item for item in items}
        self.size = {item: 1 for item in items}

    def find(self, item: str) -> str:
        while self.parent[item] != item:
            self.parent[item] = self.parent[self.parent[item]]
            item = self.parent[item]
        return item

    def union(self, a: str, b: str) -> bool:
        """Merge the sets of a and b; False when they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def primitive_direction(label: Sequence[int]) -> Label:
    """Primitive vector on the line of label, first nonzero entry positive."""
    divisor = 0
    for value in label:
        divisor = gcd(divisor, abs(value))
    direction = [value // divisor for value in label]
    first = next(value for value in direction if value != 0)
    if first < 0:
        direction = [-value for value in direction]
    return tuple(direction)


def fixed_subgraph(graph: TGraph, H: SubgroupLattice) -> TGraph:
    """Γ^H: edges whose labels vanish rationally on H."""
    if H.n != graph.n:
        raise InputError(f"Subgroup of rank {H.n} used with a graph of rank {graph.n}")
    span = [tuple(Fraction(v) for v in row) for row in H.ann]
    base = span_rank(span, graph.n)
    kept = []
    for index, edge in enumerate(graph.edges):
        label = tuple(Fraction(v) for v in edge.label)
        if span_rank(span + [label], graph.n) == base:
            kept.append(index)
    return graph.with_edges(kept)


def parallel_classes(graph: TGraph) -> Dict[Label, List[int]]:
    """Edge indices grouped by primitive label direction, in order of first appearance."""
    classes: Dict[Label, List[int]] = {}
    for index, edge in enumerate(graph.edges):
        classes.setdefault(primitive_direction(edge.label), []).append(index)
    return classes


def codimension_one_subtorus(direction: Sequence[int]) -> SubgroupLattice:
    """The subtorus annihilated by a primitive character."""
    return canonicalize([list(direction)], len(direction))


@dataclass(frozen=True)
class ClassWitness:
    """Forest certificate or cycle for one parallel class."""

    direction: Label
    edges: Tuple[int, ...]
    cycle: Optional[Tuple[int, ...]] = None

    @property
    def is_forest(self) -> bool:
        return self.cycle is None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "direction": list(self.direction),
            "subtorus": codimension_one_subtorus(self.direction).to_dict(),
            "edges": list(self.edges),
        }
        if self.cycle is None:
            data["forest"] = True
        else:
            data["forest"] = False
            data["cycle"] = list(self.cycle)
        return data


@dataclass(frozen=True)
class RealizabilityVerdict:
    realizable: bool
    witnesses: Tuple[ClassWitness, ...] = field(default_factory=tuple)

    def cycles(self) -> List[ClassWitness]:
        return [w for w in self.witnesses if not w.is_forest]

    def to_dict(self) -> Dict[str, Any]:
        return {"realizable": self.realizable, "witnesses": [w.to_dict() for w in self.witnesses]}


def _path(adjacency: Dict[str, List[Tuple[str, int]]], start: str, goal: str) -> List[int]:
    """Edge indices on the unique forest path from start to goal."""
    previous: Dict[str, Tuple[str, int]] = {}
    queue = deque([start])
    seen = {start}
    while queue:
        vertex = queue.popleft()
        if vertex == goal:
            break
        for neighbour, index in adjacency.get(vertex, []):
            if neighbour not in seen:
                seen.add(neighbour)
                previous[neighbour] = (vertex, index)
                queue.append(neighbour)
    path = []
    vertex = goal
    while vertex != start:
        vertex, index = previous[vertex]
        path.append(index)
    path.reverse()
    return path


def _class_witness(graph: TGraph, direction: Label, indices: List[int]) -> ClassWitness:
    forest = DisjointSet(graph.vertices)
    adjacency: Dict[str, List[Tuple[str, int]]] = {}
    for index in indices:
        edge = graph.edges[index]
        if not forest.union(edge.u, edge.v):
            cycle = tuple(_path(adjacency, edge.u, edge.v) + [index])
            return ClassWitness(direction, tuple(indices), cycle)
        adjacency.setdefault(edge.u, []).append((edge.v, index))
        adjacency.setdefault(edge.v, []).append((edge.u, index))
    return ClassWitness(direction, tuple(indices))


def realizable(graph: TGraph) -> RealizabilityVerdict:
    """Forest criterion: every parallel class must be acyclic on the full vertex set."""
    witnesses = tuple(
        _class_witness(graph, direction, indices) for direction, indices in parallel_classes(graph).items()
    )
    verdict = RealizabilityVerdict(all(w.is_forest for w in witnesses), witnesses)
    logger.info(
        "Forest criterion evaluated",
        extra={"realizable": verdict.realizable, "classes": len(witnesses)},
    )
    return verdict


@dataclass(frozen=True)
class GkmCheck:
    ok: bool
    vertex: Optional[str] = None
    edge_pair: Optional[Tuple[int, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"ok": self.ok}
        if not self.ok:
            data["vertex"] = self.vertex
            data["edges"] = list(self.edge_pair or ())
        return data


def gkm_axiom_check(graph: TGraph) -> GkmCheck:
    """Pairwise independence of labels at every vertex; first offending pair on failure."""
    for vertex in graph.vertices:
        incident = [i for i, e in enumerate(graph.edges) if vertex in (e.u, e.v)]
        for a_pos, a in enumerate(incident):
            for b in incident[a_pos + 1:]:
                if primitive_direction(graph.edges[a].label) == primitive_direction(graph.edges[b].label):
                    return GkmCheck(False, vertex, (a, b))
    return GkmCheck(True)


def graph_isotropy_poset(graph: TGraph) -> PairPoset:
    """Stable subset generated by the isotropy groups of the graph's one-skeleton."""
    isotropy = [canonicalize([list(edge.label)], graph.n) for edge in graph.edges]
    return generate_stable(isotropy, graph.n)


def realizable_by_isotropy(graph: TGraph) -> bool:
    """Forest criterion evaluated over codimension-one identity components of isotropy groups."""
    poset = graph_isotropy_poset(graph)
    for H in poset.d_left:
        if H.rank != 1:
            continue
        sub = fixed_subgraph(graph, identity_component(H))
        if sub.connected_components() != len(sub.vertices) - len(sub.edges):
            return False
    return True
