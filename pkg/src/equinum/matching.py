"""Hopcroft-Karp maximum bipartite matching and Hall deficiency extraction."""

from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, List

from .model import DirectedRelation, ObjectId

_INF = float("inf")


def _adjacency(left, edges: DirectedRelation) -> Dict[ObjectId, List[ObjectId]]:
    adj = {u: [] for u in sorted(left)}
    for s, t in edges.sorted_pairs():
        adj[s].append(t)
    return adj


class HopcroftKarp:
    """Maximum-cardinality matching in O(E * sqrt(V)).

    Vertices are visited in ordinal order so the returned matching is
    deterministic for a given input.
    """

    def __init__(self, left: Iterable[ObjectId], right: Iterable[ObjectId], edges: DirectedRelation):
        self.left = sorted(left)
        self.right = sorted(right)
        left_set, right_set = set(self.left), set(self.right)
        for s, t in edges.pairs:
            if s not in left_set or t not in right_set:
                raise ValueError(f"edge ({s!r}, {t!r}) is not in left x right")
        self.adj = _adjacency(self.left, edges)
        self.match_left: Dict[ObjectId, ObjectId] = {}
        self.match_right: Dict[ObjectId, ObjectId] = {}
        self._dist: Dict[ObjectId, float] = {}

    def _bfs(self) -> bool:
        queue = deque()
        for u in self.left:
            if u in self.match_left:
                self._dist[u] = _INF
            else:
                self._dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                w = self.match_right.get(v)
                if w is None:
                    found = True
                elif self._dist[w] == _INF:
                    self._dist[w] = self._dist[u] + 1
                    queue.append(w)
        return found

    def _dfs(self, root: ObjectId) -> bool:
        # iterative augmenting-path search along the BFS layering
        stack = [(root, iter(self.adj[root]))]
        path = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                w = self.match_right.get(v)
                if w is None:
                    path.append((u, v))
                    for a, b in path:
                        self.match_left[a] = b
                        self.match_right[b] = a
                    return True
                if self._dist[w] == self._dist[u] + 1:
                    path.append((u, v))
                    stack.append((w, iter(self.adj[w])))
                    advanced = True
                    break
            if not advanced:
                self._dist[u] = _INF
                stack.pop()
                if path:
                    path.pop()
        return False

    def run(self) -> DirectedRelation:
        while self._bfs():
            for u in self.left:
                if u not in self.match_left:
                    self._dfs(u)
        return DirectedRelation(self.match_left.items())

    def deficiency(self) -> frozenset:
        """Left vertices reachable by alternating paths from unmatched left vertices.

        Call after :meth:`run`. When the matching is not left-perfect the
        returned set ``S`` satisfies ``|N(S)| < |S|``.
        """
        free = [u for u in self.left if u not in self.match_left]
        seen = set(free)
        queue = deque(free)
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                w = self.match_right.get(v)
                if w is not None and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return frozenset(seen)


def max_matching(left, right, edges: DirectedRelation) -> DirectedRelation:
    """A maximum-cardinality matching of the bipartite graph ``edges`` between
    ``left`` and ``right``; the result is functional, exclusive and a subset of
    ``edges``."""
    return HopcroftKarp(left, right, edges).run()


def neighbors(objects, relation: DirectedRelation) -> frozenset:
    return frozenset(t for s, t in relation.pairs if s in objects)
