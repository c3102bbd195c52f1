"""Rooted binary phylogenetic networks: data model, validation, reachability,
vertex classification, and leaf-label-preserving isomorphism.

A network is a rooted acyclic digraph without parallel arcs in which the root
has in-degree 0 / out-degree 2, every out-degree-0 vertex is a labeled leaf of
in-degree 1, and every remaining vertex is either a tree vertex (in 1, out 2)
or a reticulation (in 2, out 1).  A single labeled vertex is also admitted as
the one-leaf network.
"""

from __future__ import annotations

import enum
import heapq
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    BadDegree,
    CycleDetected,
    DuplicateLeafLabel,
    MultipleRoots,
    ParallelArcs,
    UnknownVertex,
    UnlabeledLeaf,
)

Arc = tuple[str, str]


class VertexKind(enum.Enum):
    ROOT = "root"
    LEAF = "leaf"
    TREE = "tree"
    RETICULATION = "reticulation"


@dataclass(frozen=True)
class PhyloNetwork:
    """An immutable, validated phylogenetic network.

    ``internal_order`` fixes the ordering v1..vt of the non-leaf vertices that
    ancestral profiles are indexed by.  Instances are only built through
    :func:`validate`, are hashable, and are safe to share between threads.
    """

    root: str
    vertices: frozenset[str]
    arcs: frozenset[Arc]
    leaf_labels: Mapping[str, str] = field(compare=True)
    internal_order: tuple[str, ...] = ()

    @cached_property
    def children(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in sorted(self.arcs):
            out[u].append(v)
        return {v: tuple(cs) for v, cs in out.items()}

    @cached_property
    def parents(self) -> dict[str, tuple[str, ...]]:
        inc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in sorted(self.arcs):
            inc[v].append(u)
        return {v: tuple(ps) for v, ps in inc.items()}

    @cached_property
    def label_to_leaf(self) -> dict[str, str]:
        return {lab: v for v, lab in self.leaf_labels.items()}

    @property
    def leaf_set(self) -> frozenset[str]:
        """The leaf labels (the set X)."""
        return frozenset(self.leaf_labels.values())

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_labels)

    @cached_property
    def n_reticulations(self) -> int:
        return sum(1 for v in self.internal_order if len(self.parents[v]) == 2)

    @property
    def is_single_vertex(self) -> bool:
        return len(self.vertices) == 1

    def kind(self, v: str) -> VertexKind:
        if v not in self.vertices:
            raise UnknownVertex(v)
        if not self.children[v]:
            # Covers the one-leaf network, whose root is itself the leaf.
            return VertexKind.LEAF
        if not self.parents[v]:
            return VertexKind.ROOT
        if len(self.parents[v]) == 2:
            return VertexKind.RETICULATION
        return VertexKind.TREE

    def parent_of_leaf(self, label: str) -> str:
        leaf = self.label_to_leaf.get(label)
        if leaf is None:
            raise UnknownVertex(label)
        return self.parents[leaf][0]

    def __repr__(self) -> str:  # keep pytest output readable
        return (
            f"PhyloNetwork(n={self.n_leaves}, k={self.n_reticulations}, "
            f"|V|={len(self.vertices)})"
        )


def validate(
    arcs: Iterable[Arc],
    isolated: Iterable[str] = (),
    leaf_labels: Mapping[str, str] | None = None,
    internal_order: Iterable[str] | None = None,
) -> PhyloNetwork:
    """Check a raw vertex/arc description and build a PhyloNetwork.

    Raises the first violated invariant as a specific NetworkInvalid subclass.
    ``isolated`` admits the one-leaf network (a single vertex, no arcs).  When
    ``leaf_labels`` is omitted each leaf is labeled by its own vertex name;
    when ``internal_order`` is omitted a deterministic topological order with
    lexicographic tie-break is used.
    """
    arc_list = [(str(u), str(v)) for u, v in arcs]
    seen: set[Arc] = set()
    for arc in arc_list:
        if arc in seen:
            raise ParallelArcs(arc)
        seen.add(arc)

    vertices = {v for arc in arc_list for v in arc} | {str(v) for v in isolated}
    if not vertices:
        raise ValueError("empty network description")

    indeg = {v: 0 for v in vertices}
    outdeg = {v: 0 for v in vertices}
    for u, v in arc_list:
        outdeg[u] += 1
        indeg[v] += 1

    roots = sorted(v for v in vertices if indeg[v] == 0)
    if len(roots) > 1:
        raise MultipleRoots(roots)
    if not roots:
        raise CycleDetected(sorted(vertices))
    root = roots[0]

    # Kahn's algorithm; leftovers witness a cycle.
    order: list[str] = []
    remaining = dict(indeg)
    ready = [root]
    succ: dict[str, list[str]] = {v: [] for v in vertices}
    for u, v in arc_list:
        succ[u].append(v)
    heapq.heapify(ready)
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for w in succ[u]:
            remaining[w] -= 1
            if remaining[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != len(vertices):
        raise CycleDetected(sorted(v for v in vertices if remaining[v] > 0))

    leaves = sorted(v for v in vertices if outdeg[v] == 0)
    single = len(vertices) == 1
    if not single:
        if outdeg[root] != 2:
            raise BadDegree(root, 0, outdeg[root])
        for v in sorted(vertices):
            din, dout = indeg[v], outdeg[v]
            if v == root:
                continue
            if dout == 0:
                if din != 1:
                    raise BadDegree(v, din, dout)
            elif (din, dout) not in ((1, 2), (2, 1)):
                raise BadDegree(v, din, dout)

    if leaf_labels is None:
        labels = {v: v for v in leaves}
    else:
        labels = {str(v): str(lab) for v, lab in leaf_labels.items()}
        for v in leaves:
            if v not in labels:
                raise UnlabeledLeaf(v)
        labels = {v: labels[v] for v in leaves}
    used: set[str] = set()
    for lab in labels.values():
        if lab in used:
            raise DuplicateLeafLabel(lab)
        used.add(lab)

    if internal_order is None:
        internals = tuple(v for v in order if outdeg[v] > 0)
    else:
        internals = tuple(str(v) for v in internal_order)
        if sorted(internals) != sorted(v for v in vertices if outdeg[v] > 0):
            raise ValueError("internal_order must list every non-leaf vertex once")
    if single:
        internals = ()

    return PhyloNetwork(
        root=root,
        vertices=frozenset(vertices),
        arcs=frozenset(arc_list),
        leaf_labels=labels,
        internal_order=internals,
    )


def reachable(net: PhyloNetwork, u: str, v: str) -> bool:
    """True iff a directed path (possibly empty) runs from u to v."""
    for w in (u, v):
        if w not in net.vertices:
            raise UnknownVertex(w)
    if u == v:
        return True
    queue = deque(net.children[u])
    seen = set(queue)
    while queue:
        w = queue.popleft()
        if w == v:
            return True
        for c in net.children[w]:
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return False


def _leaf_distance_signature(net: PhyloNetwork) -> dict[str, tuple]:
    """Per-vertex invariant used to prune the isomorphism search: vertex kind
    plus the sorted multiset of (leaf label, shortest distance) pairs."""
    dist: dict[str, dict[str, int]] = {v: {} for v in net.vertices}
    for leaf, lab in net.leaf_labels.items():
        dist[leaf][lab] = 0
    for v in reversed(_topo_order(net)):
        for c in net.children[v]:
            for lab, d in dist[c].items():
                cur = dist[v].get(lab)
                if cur is None or d + 1 < cur:
                    dist[v][lab] = d + 1
    return {
        v: (net.kind(v).value, tuple(sorted(dist[v].items())))
        for v in net.vertices
    }


def _topo_order(net: PhyloNetwork) -> list[str]:
    indeg = {v: len(net.parents[v]) for v in net.vertices}
    ready = deque([net.root])
    order = []
    while ready:
        u = ready.popleft()
        order.append(u)
        for w in net.children[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order


def find_isomorphism(n1: PhyloNetwork, n2: PhyloNetwork) -> dict[str, str] | None:
    """A bijection fixing every leaf label and preserving arcs both ways,
    or None.

    Backtracking is seeded from the leaves, walks n1 in topological order so
    that assignments propagate parent constraints, and prunes candidates by
    vertex kind and leaf-distance signature.
    """
    if n1.leaf_set != n2.leaf_set:
        return None
    if len(n1.vertices) != len(n2.vertices) or len(n1.arcs) != len(n2.arcs):
        return None

    sig1 = _leaf_distance_signature(n1)
    sig2 = _leaf_distance_signature(n2)
    by_sig2: dict[tuple, list[str]] = {}
    for v in sorted(n2.vertices):
        by_sig2.setdefault(sig2[v], []).append(v)
    if sorted(sig1.values()) != sorted(sig2[v] for v in n2.vertices):
        return None

    mapping: dict[str, str] = {}
    used: set[str] = set()
    for leaf, lab in n1.leaf_labels.items():
        img = n2.label_to_leaf[lab]
        mapping[leaf] = img
        used.add(img)

    internals = [v for v in _topo_order(n1) if v not in n1.leaf_labels]

    def consistent(v: str, w: str) -> bool:
        for p in n1.parents[v]:
            if p in mapping and (mapping[p], w) not in n2.arcs:
                return False
        for c in n1.children[v]:
            if c in mapping and (w, mapping[c]) not in n2.arcs:
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(internals):
            return all((mapping[u], mapping[v]) in n2.arcs for u, v in n1.arcs)
        v = internals[i]
        for w in by_sig2.get(sig1[v], ()):
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    return dict(mapping) if extend(0) else None


def isomorphic(n1: PhyloNetwork, n2: PhyloNetwork) -> bool:
    return find_isomorphism(n1, n2) is not None
