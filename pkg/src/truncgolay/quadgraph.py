"""Labeled graphs of quadratic forms and the delete-to-path test."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable


class NotAPathError(ValueError):
    def __init__(self, violations: Iterable[str]):
        self.violations = tuple(violations)
        super().__init__("graph is not a labeled path: " + "; ".join(self.violations))


@dataclass(frozen=True)
class QuadGraph:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int, int], ...]  # sorted (i, j, label), i < j
    q: int

    def neighbours(self, v: int) -> list[int]:
        return [j if i == v else i for i, j, _ in self.edges if v in (i, j)]

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    def label(self, i: int, j: int) -> int:
        i, j = min(i, j), max(i, j)
        for a, b, lab in self.edges:
            if (a, b) == (i, j):
                return lab
        return 0


@dataclass(frozen=True)
class PathWitness:
    order: tuple[int, ...]

    @property
    def ends(self) -> tuple[int, int]:
        return self.order[0], self.order[-1]


def graph_of(terms: Iterable[tuple[int, int, int]], n_vertices: int, q: int) -> QuadGraph:
    """Graph on ``{0..n_vertices-1}`` with an edge per non-zero ``q_ij``."""
    seen = set()
    edges = []
    for i, j, coeff in terms:
        if not 0 <= i < j < n_vertices:
            raise ValueError(f"quadratic term ({i}, {j}) needs 0 <= i < j < {n_vertices}")
        if (i, j) in seen:
            raise ValueError(f"duplicate quadratic term ({i}, {j})")
        seen.add((i, j))
        if coeff % q:
            edges.append((i, j, coeff % q))
    return QuadGraph(frozenset(range(n_vertices)), tuple(sorted(edges)), q)


def delete_vertices(g: QuadGraph, victims: Iterable[int]) -> QuadGraph:
    victims = frozenset(victims)
    unknown = victims - g.vertices
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown)}")
    keep = g.vertices - victims
    edges = tuple(e for e in g.edges if e[0] in keep and e[1] in keep)
    return QuadGraph(keep, edges, g.q)


def path_violations(g: QuadGraph) -> list[str]:
    """Reasons ``g`` is not a path with every edge labeled ``q/2``."""
    problems = []
    n = len(g.vertices)
    if n == 0:
        return ["no vertices"]
    bad = [(i, j) for i, j, lab in g.edges if lab != g.q // 2]
    if bad:
        problems.append(f"wrong label on edges {bad}")
    heavy = sorted(v for v in g.vertices if g.degree(v) > 2)
    if heavy:
        problems.append(f"degree > 2 at vertices {heavy}")
    start = min(g.vertices)
    reached, stack = {start}, [start]
    while stack:
        for w in g.neighbours(stack.pop()):
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != n:
        problems.append("disconnected")
    elif len(g.edges) != n - 1:
        problems.append("cycle")
    return problems


def path_witness(g: QuadGraph) -> PathWitness:
    """Vertex order of the labeled path ``g``; raises :class:`NotAPathError`.

    The order starts at the smaller-index end.
    """
    problems = path_violations(g)
    if problems:
        raise NotAPathError(problems)
    if len(g.vertices) == 1:
        return PathWitness(tuple(g.vertices))
    prev, cur = None, min(v for v in g.vertices if g.degree(v) == 1)
    order = [cur]
    while len(order) < len(g.vertices):
        prev, cur = cur, next(w for w in g.neighbours(cur) if w != prev)
        order.append(cur)
    return PathWitness(tuple(order))


def is_labeled_path(g: QuadGraph) -> bool:
    return not path_violations(g)


def path_reducing_victims(g: QuadGraph, k_max: int | None = None) -> list[tuple[int, ...]]:
    """Every vertex set of size <= ``k_max`` whose deletion leaves a labeled path.

    At least one vertex must survive, so ``k_max`` is capped at ``|V| - 1``.
    """
    verts = sorted(g.vertices)
    top = len(verts) - 1 if k_max is None else min(k_max, len(verts) - 1)
    found = []
    for k in range(top + 1):
        for victims in combinations(verts, k):
            if is_labeled_path(delete_vertices(g, victims)):
                found.append(victims)
    return found


def path_terms(w: PathWitness, q: int) -> list[tuple[int, int, int]]:
    """Quadratic terms ``(q/2) z_a z_b`` along consecutive vertices of ``w``."""
    return [(min(a, b), max(a, b), q // 2) for a, b in zip(w.order, w.order[1:])]
