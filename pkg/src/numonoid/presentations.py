"""Factorization graphs, Betti elements, and minimal presentations.

The factorization graph of an element a joins two factorizations whenever
they share an atom.  Elements with a disconnected graph are the Betti
elements; a minimal presentation of M consists, for each Betti element, of
any set of relations forming a spanning tree on the components of its graph.
This module computes a deterministic ("canonical") choice, enumerates or
counts all choices, and finds the Betti elements from the finite Apery
candidate set rather than an unbounded scan.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache
from heapq import heapify, heappop, heappush

from .core import NumericalMonoid, apery
from .errors import (
    BudgetExceeded,
    InvalidInput,
    NotAnElement,
    NotARelation,
    NotMinimal,
    NotPrimitive,
)
from .factorizations import DEFAULT_CAP, _enumerate
from .unionfind import UnionFind


@dataclass(frozen=True)
class Relation:
    """Two factorizations of the same element, stored in canonical order.

    The canonical order puts the side with the larger length first, breaking
    ties by lexicographic comparison, so a relation and its flip compare
    equal after construction through make_relation.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    betti: int

    def pair(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.left, self.right)


def make_relation(M: NumericalMonoid, left, right) -> Relation:
    """Validate and canonicalize a relation; betti tag is the common value."""
    left, right = tuple(left), tuple(right)
    lval = M.evaluate(left)
    rval = M.evaluate(right)
    if lval != rval:
        raise NotARelation(
            f"sides evaluate to {lval} and {rval} under {M!r}"
        )
    if left == right:
        raise NotARelation("sides of a relation must differ")
    a, b = sorted((left, right), key=lambda v: (sum(v), v), reverse=True)
    return Relation(a, b, lval)


@dataclass(frozen=True)
class Presentation:
    """A set of relations, canonically sorted by (betti, left, right)."""

    monoid: NumericalMonoid
    relations: tuple[Relation, ...]

    def relation_pairs(self) -> frozenset:
        """Unordered comparison form: the set of canonical (left, right)."""
        return frozenset(r.pair() for r in self.relations)

    def betti_values(self) -> list[int]:
        return sorted({r.betti for r in self.relations})

    def by_betti(self) -> dict[int, list[Relation]]:
        out: dict[int, list[Relation]] = {}
        for r in self.relations:
            out.setdefault(r.betti, []).append(r)
        return out

    def to_json_dict(self) -> dict:
        return {
            "generators": list(self.monoid.generators),
            "betti_elements": self.betti_values(),
            "relations": [
                {"betti": r.betti, "left": list(r.left), "right": list(r.right)}
                for r in self.relations
            ],
        }


def make_presentation(M: NumericalMonoid, relations) -> Presentation:
    rels = sorted(set(relations), key=lambda r: (r.betti, r.left, r.right))
    return Presentation(M, tuple(rels))


@dataclass(frozen=True)
class FactorizationGraph:
    """Z(a) plus the component partition of the shared-atom graph.

    Edges are implicit; only the partition is stored.  Components are sorted
    by their lexicographically smallest member and hold vertex indices.
    """

    element: int
    vertices: tuple[tuple[int, ...], ...]
    components: tuple[tuple[int, ...], ...]

    def members(self, ci: int) -> list[tuple[int, ...]]:
        return sorted(self.vertices[i] for i in self.components[ci])

    def component_sets(self) -> list[frozenset]:
        return [frozenset(self.vertices[i] for i in comp) for comp in self.components]


def _atom_union(t: int, zs: list[tuple[int, ...]]) -> UnionFind:
    # vertices sharing an atom are merged through a per-atom anchor vertex,
    # linear in the total support size, no pairwise scan
    uf = UnionFind(len(zs))
    anchor = [-1] * t
    for vi, z in enumerate(zs):
        for i in range(t):
            if z[i]:
                if anchor[i] < 0:
                    anchor[i] = vi
                else:
                    uf.union(vi, anchor[i])
    return uf


def factorization_graph(
    M: NumericalMonoid,
    a: int,
    *,
    cap: int = DEFAULT_CAP,
    deadline: float | None = None,
) -> FactorizationGraph:
    """Component partition of the factorization graph of a."""
    if a < 0:
        raise InvalidInput("target element must be non-negative")
    zs = _enumerate(M.generators, a, cap, deadline)
    if not zs:
        raise NotAnElement(f"{a} is not in {M!r}")
    uf = _atom_union(M.t, zs)
    comps = [tuple(sorted(g)) for g in uf.groups()]
    comps.sort(key=lambda comp: min(zs[i] for i in comp))
    return FactorizationGraph(a, tuple(zs), tuple(comps))


def _require_minimal(M: NumericalMonoid) -> None:
    # the tuple is minimal iff every generator factors only as itself
    for i, m in enumerate(M.generators):
        if len(_enumerate(M.generators, m)) != 1:
            raise NotMinimal(
                f"generator {m} is a combination of the others in {M!r}"
            )


def _betti_impl(M: NumericalMonoid, deadline: float | None) -> tuple[int, ...]:
    if not M.is_primitive:
        raise NotPrimitive(f"gcd of generators is {M.gcd}")
    _require_minimal(M)
    # Candidate set {m_i + w : i >= 2, w in Ap(M, m_1), w != 0}.  Every Betti
    # element b lies in it: the factorizations of b using the atom m_1
    # pairwise share it, so they occupy a single component of the graph, and
    # a disconnected graph has some component C avoiding m_1 entirely.  Pick
    # z in C and an index i >= 2 with z_i > 0.  If b - m_i - m_1 were in M,
    # extending one of its factorizations by e_1 + e_i would share m_i with z
    # and m_1 with the m_1-using component, collapsing the two, which is
    # impossible.  So w = b - m_i is in the Apery set, and w != 0 because an
    # atom of a minimal tuple factors uniquely (as itself).
    table = apery(M)
    candidates = sorted(
        {m + w for m in M.generators[1:] for w in table.entries if w}
    )
    gens = M.generators
    t = M.t
    out = []
    for c in candidates:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("Betti scan deadline exceeded")
        zs = _enumerate(gens, c, DEFAULT_CAP, deadline)
        if len(zs) >= 2 and _atom_union(t, zs).n_components > 1:
            out.append(c)
    return tuple(out)


@lru_cache(maxsize=None)
def _betti_cached(M: NumericalMonoid) -> tuple[int, ...]:
    return _betti_impl(M, None)


def betti_elements(M: NumericalMonoid, *, deadline: float | None = None) -> list[int]:
    """Sorted Betti elements of M (elements with disconnected graph)."""
    if deadline is None:
        return list(_betti_cached(M))
    return list(_betti_impl(M, deadline))


def _canonical_star(
    M: NumericalMonoid, graph: FactorizationGraph
) -> list[Relation]:
    # one spanning choice per Betti element: root at the component with the
    # lexicographically smallest factorization and join each other
    # component's smallest member to the root's smallest member
    root_rep = min(graph.vertices[i] for i in graph.components[0])
    rels = []
    for comp in graph.components[1:]:
        rep = min(graph.vertices[i] for i in comp)
        rels.append(make_relation(M, root_rep, rep))
    return rels


def _minpres_impl(M: NumericalMonoid, deadline: float | None) -> Presentation:
    rels: list[Relation] = []
    for beta in _betti_impl(M, deadline) if deadline is not None else _betti_cached(M):
        graph = factorization_graph(M, beta, deadline=deadline)
        rels.extend(_canonical_star(M, graph))
    return make_presentation(M, rels)


@lru_cache(maxsize=None)
def _minpres_cached(M: NumericalMonoid) -> Presentation:
    return _minpres_impl(M, None)


def minimal_presentation(
    M: NumericalMonoid, *, deadline: float | None = None
) -> Presentation:
    """The canonical minimal presentation of M."""
    if deadline is None:
        return _minpres_cached(M)
    return _minpres_impl(M, deadline)


def _labeled_trees(c: int):
    """All labeled trees on c nodes as sorted edge lists, by Prufer code."""
    if c == 1:
        yield []
        return
    for seq in itertools.product(range(c), repeat=c - 2):
        degree = [1] * c
        for x in seq:
            degree[x] += 1
        leaves = [i for i in range(c) if degree[i] == 1]
        heapify(leaves)
        edges = []
        for x in seq:
            leaf = heappop(leaves)
            edges.append((min(leaf, x), max(leaf, x)))
            degree[x] -= 1
            if degree[x] == 1:
                heappush(leaves, x)
        u = heappop(leaves)
        v = heappop(leaves)
        edges.append((min(u, v), max(u, v)))
        yield sorted(edges)


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of a small integer matrix."""
    m = [row[:] for row in m]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _spanning_tree_count(sizes: list[int]) -> int:
    """Spanning trees of the complete multigraph with |C_i||C_j| parallel edges."""
    c = len(sizes)
    if c == 1:
        return 1
    if c == 2:
        return sizes[0] * sizes[1]
    lap = [[0] * c for _ in range(c)]
    total = sum(sizes)
    for i in range(c):
        lap[i][i] = sizes[i] * (total - sizes[i])
        for j in range(c):
            if j != i:
                lap[i][j] = -sizes[i] * sizes[j]
    return _bareiss_det([row[1:] for row in lap[1:]])


def _beta_choices(
    M: NumericalMonoid, comps: list[list[tuple[int, ...]]], cap: int
) -> list[tuple[Relation, ...]]:
    # all spanning choices at one Betti element, truncated at cap; order is
    # deterministic (Prufer code order, then product order over sorted members)
    choices: list[tuple[Relation, ...]] = []
    for tree in _labeled_trees(len(comps)):
        per_edge = [
            [(u, v) for u in comps[i] for v in comps[j]] for i, j in tree
        ]
        for pick in itertools.product(*per_edge):
            choices.append(tuple(make_relation(M, u, v) for u, v in pick))
            if len(choices) >= cap:
                return choices
    return choices


def all_minimal_presentations(
    M: NumericalMonoid, cap: int = 64
) -> tuple[int, list[Presentation]]:
    """Exact count of minimal presentations plus up to cap of them.

    The count is the product over Betti elements of the spanning-tree count
    of the complete multigraph on the components of the factorization graph,
    with edge multiplicity |C|*|C'| between components C and C'.
    """
    if cap < 0:
        raise InvalidInput("cap must be non-negative")
    count = 1
    per_beta: list[list[tuple[Relation, ...]]] = []
    for beta in betti_elements(M):
        graph = factorization_graph(M, beta)
        comps = [graph.members(ci) for ci in range(len(graph.components))]
        count *= _spanning_tree_count([len(c) for c in comps])
        if cap > 0:
            per_beta.append(_beta_choices(M, comps, cap))
    items: list[Presentation] = []
    if cap > 0:
        for combo in itertools.product(*per_beta):
            items.append(
                make_presentation(M, [r for group in combo for r in group])
            )
            if len(items) >= cap:
                break
    return count, items
