"""Order diagrams over a finite set of matrices.

Builds the directed graph of a chosen relation on labeled matrices,
collapses mutually comparable elements into one node (relevant for the
space pre-order and for duplicate inputs), and keeps only covering edges,
i.e. the transitive reduction of the strict order between nodes. The DOT
rendering lists every node and one edge per cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ShapeError
from .matrix import EQ_TOL, RANK_FACTOR, Matrix
from .orders import RELATIONS


@dataclass(frozen=True)
class PosetGraph:
    """Cover diagram of a relation on labeled matrices.

    nodes holds tuples of input labels (singletons unless inputs were
    mutually comparable); edges holds (lower, upper) node indices and form
    a transitively reduced acyclic graph.
    """

    relation: str
    nodes: tuple
    edges: tuple

    def node_label(self, idx: int) -> str:
        return "=".join(self.nodes[idx])


def build_poset(items, relation: str = "diamond", tol: float = EQ_TOL,
                rank_factor: float = RANK_FACTOR) -> PosetGraph:
    """Cover diagram of the relation over [(label, matrix), ...]."""
    if relation not in RELATIONS:
        raise DomainError("unknown relation %r" % relation)
    labels = [label for label, _ in items]
    mats = [m for _, m in items]
    n = len(mats)
    if n == 0:
        return PosetGraph(relation, (), ())
    shape = mats[0].shape
    backend = mats[0].backend
    for m in mats[1:]:
        if m.shape != shape:
            raise ShapeError("poset needs equally shaped matrices")
        if m.backend != backend:
            raise DomainError("poset needs a single backend")

    pred = RELATIONS[relation]
    leq = [[True] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                leq[i][j] = pred(mats[i], mats[j], tol).verdict

    # merge mutually comparable inputs into one node
    assigned = [-1] * n
    groups = []
    for i in range(n):
        if assigned[i] >= 0:
            continue
        group = [i]
        assigned[i] = len(groups)
        for j in range(i + 1, n):
            if assigned[j] < 0 and leq[i][j] and leq[j][i]:
                group.append(j)
                assigned[j] = len(groups)
        groups.append(group)

    g = len(groups)
    strict = [[False] * g for _ in range(g)]
    for gi in range(g):
        for gj in range(g):
            if gi != gj:
                strict[gi][gj] = leq[groups[gi][0]][groups[gj][0]]

    edges = []
    for gi in range(g):
        for gj in range(g):
            if not strict[gi][gj]:
                continue
            if any(strict[gi][gk] and strict[gk][gj] for gk in range(g)):
                continue
            edges.append((gi, gj))

    nodes = tuple(tuple(labels[i] for i in group) for group in groups)
    return PosetGraph(relation, nodes, tuple(sorted(edges)))


def to_dot(graph: PosetGraph) -> str:
    """DOT text with one quoted node per class and one edge per cover."""
    lines = ["digraph poset {"]
    for idx in range(len(graph.nodes)):
        lines.append('  "%s";' % graph.node_label(idx))
    for lo, hi in graph.edges:
        lines.append('  "%s" -> "%s";' % (graph.node_label(lo),
                                          graph.node_label(hi)))
    lines.append("}")
    return "\n".join(lines) + "\n"
