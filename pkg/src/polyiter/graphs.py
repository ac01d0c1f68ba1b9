"""Labeled graphs recording how tuple coordinates collide under iteration.

Vertices are 1..k.  An edge {a,b} carries a shared level xi in [-1, r] and a
directed twist eta: xi = -1 means the coordinates are equal (eta 0 both
ways); xi >= 0 means the xi-th iterates differ by a power of the fixed
d-th root of unity, with eta(a,b) + eta(b,a) divisible by d.  Only the
a < b twist is stored; the partner value is derived, which makes the
antisymmetry rule unviolable by construction.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from itertools import permutations, product

from .errors import BudgetError
from .recur import Partition, u_value

# Hard cap on raw label assignments per enumeration call.
ENUMERATION_CAP = 10**7


@dataclass(frozen=True)
class IterGraph:
    k: int
    r: int
    d: int
    # (a, b) with a < b  ->  (xi, eta(a, b))
    edges: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def xi(self, a: int, b: int) -> int:
        return self.edges[(min(a, b), max(a, b))][0]

    def eta(self, a: int, b: int) -> int:
        """Directed twist on the ordered pair (a, b)."""
        xi, eta_fwd = self.edges[(min(a, b), max(a, b))]
        if xi == -1:
            return 0
        if a < b:
            return eta_fwd
        return (self.d - eta_fwd) % self.d

    def with_edge(self, a: int, b: int, xi: int, eta_ab: int) -> "IterGraph":
        """New graph with edge {a,b} added, eta_ab read in the a->b direction."""
        key = (min(a, b), max(a, b))
        if key in self.edges:
            raise ValueError(f"edge {key} already present")
        if xi == -1:
            stored = 0
        elif a < b:
            stored = eta_ab % self.d
        else:
            stored = (self.d - eta_ab) % self.d
        new_edges = dict(self.edges)
        new_edges[key] = (xi, stored)
        return IterGraph(k=self.k, r=self.r, d=self.d, edges=new_edges)

    def edge_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return len(self.edges) == self.k * (self.k - 1) // 2

    def is_strict(self) -> bool:
        return any(xi == self.r for xi, _ in self.edges.values())

    def canonical(self) -> str:
        parts = [f"{self.k} {self.r} {self.d}"]
        for (a, b), (xi, eta) in sorted(self.edges.items()):
            parts.append(f"{a}-{b}:{xi},{eta}")
        return "; ".join(parts)

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __eq__(self, other) -> bool:
        if not isinstance(other, IterGraph):
            return NotImplemented
        return (
            (self.k, self.r, self.d) == (other.k, other.r, other.d)
            and self.edges == other.edges
        )


def parse_canonical(text: str) -> IterGraph:
    """Inverse of IterGraph.canonical()."""
    head, *edge_parts = [part.strip() for part in text.split(";")]
    k, r, d = (int(tok) for tok in head.split())
    g = IterGraph(k=k, r=r, d=d)
    for part in edge_parts:
        if not part:
            continue
        pair, labels = part.split(":")
        a, b = (int(tok) for tok in pair.split("-"))
        xi, eta = (int(tok) for tok in labels.split(","))
        g = g.with_edge(a, b, xi, eta)
    return g


def graph_violation(g: IterGraph) -> str | None:
    """First violated structural invariant, or None when valid."""
    for (a, b), (xi, eta) in sorted(g.edges.items()):
        if not (1 <= a < b <= g.k):
            return f"edge ({a},{b}) outside vertex range 1..{g.k}"
        if not (-1 <= xi <= g.r):
            return f"edge ({a},{b}) has level {xi} outside [-1, {g.r}]"
        if xi == -1 and eta != 0:
            return f"edge ({a},{b}) has level -1 but twist {eta}"
        if xi >= 0 and not (1 <= eta <= g.d - 1):
            return f"edge ({a},{b}) has level {xi} but twist {eta} outside [1, {g.d - 1}]"
    return None


def validate_graph(g: IterGraph) -> bool:
    return graph_violation(g) is None


def _triple_ok(g: IterGraph, a: int, b: int, c: int) -> bool:
    """Conditions for the ordered triple (a, b, c) with all three edges present."""
    xi_ab, xi_bc, xi_ac = g.xi(a, b), g.xi(b, c), g.xi(a, c)
    if xi_ab == xi_bc == -1:
        return xi_ac == -1
    if xi_ab < xi_bc:
        return xi_ac == xi_bc and g.eta(a, c) == g.eta(b, c)
    if xi_ab == xi_bc and xi_ab >= 0:
        s = g.eta(a, b) + g.eta(b, c)
        if s != g.d:
            return xi_ac == xi_ab and g.eta(a, c) == s % g.d
        return xi_ac < xi_ab
    return True


def is_proper(g: IterGraph) -> bool:
    """Closure under the triangle rules, over every ordered vertex triple."""
    for a, b, c in permutations(range(1, g.k + 1), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            if not _triple_ok(g, a, b, c):
                return False
    return True


def extract_partition(g: IterGraph) -> Partition:
    """Block structure of a complete proper strict graph: top-level edges
    cross blocks, lower-level edges stay inside.  Verified from every seed."""
    if not g.is_complete():
        raise ValueError("partition extraction needs a complete graph")
    if not g.is_strict():
        raise ValueError("partition extraction needs a strict graph (some edge at top level)")
    result: Partition | None = None
    for seed in range(1, g.k + 1):
        buckets: dict[int, list[int]] = {0: [seed]}
        for b in range(1, g.k + 1):
            if b == seed:
                continue
            if g.xi(seed, b) < g.r:
                buckets.setdefault(0, []).append(b)
            else:
                buckets.setdefault(g.eta(seed, b), []).append(b)
        part = Partition(tuple(sorted(tuple(sorted(v)) for v in buckets.values())))
        if result is None:
            result = part
        elif part != result:
            raise ValueError("partition extraction disagrees between seed vertices")
    assert result is not None
    if not (2 <= result.t <= g.d):
        raise ValueError(f"partition has {result.t} blocks, outside [2, {g.d}]")
    for block in result.blocks:
        for a in block:
            for b in block:
                if a < b and g.xi(a, b) >= g.r:
                    raise ValueError("within-block edge at top level")
    for i, bi in enumerate(result.blocks):
        for bj in result.blocks[i + 1 :]:
            for a in bi:
                for b in bj:
                    if g.xi(a, b) != g.r:
                        raise ValueError("cross-block edge below top level")
    return result


def generate_step(g: IterGraph, a: int, b: int, c: int) -> IterGraph | None:
    """Try to add edge {a,c} from the path a-b-c.

    Returns the extended graph when one of the three label rules applies and
    the result is still proper; otherwise None (the step is skipped).
    """
    if not (g.has_edge(a, b) and g.has_edge(b, c)) or g.has_edge(a, c):
        return None
    xi_ab, xi_bc = g.xi(a, b), g.xi(b, c)
    if xi_ab == xi_bc == -1:
        new = g.with_edge(a, c, -1, 0)
    elif xi_ab == xi_bc and xi_ab >= 0 and (g.eta(a, b) + g.eta(b, c)) % g.d != 0:
        new = g.with_edge(a, c, xi_ab, (g.eta(a, b) + g.eta(b, c)) % g.d)
    elif xi_ab < xi_bc:
        new = g.with_edge(a, c, xi_bc, g.eta(b, c))
    else:
        return None
    return new if is_proper(new) else None


def maximal_extension(g: IterGraph, order: str = "lex") -> IterGraph:
    """Saturate generate_step.  Terminates because each step adds an edge.

    For subgraphs of a complete proper graph the fixpoint is independent of
    the scan order; "lex" and "reverse" exist so tests can assert that.
    """
    triples = list(permutations(range(1, g.k + 1), 3))
    if order == "reverse":
        triples.reverse()
    elif order != "lex":
        raise ValueError(f"unknown scan order {order!r}")
    current = g
    progressed = True
    while progressed:
        progressed = False
        for a, b, c in triples:
            new = generate_step(current, a, b, c)
            if new is not None:
                current = new
                progressed = True
                break
    return current


def is_potentially_complete(g: IterGraph, path: list[int]) -> bool:
    """Unimodal levels along the path, no two adjacent equalities, and no
    cancelling twists across an equal-level elbow."""
    if len(path) < 2:
        return True
    if len(set(path)) != len(path):
        raise ValueError("path repeats a vertex")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"path step {a}-{b} is not an edge")
    xis = [g.xi(path[i], path[i + 1]) for i in range(len(path) - 1)]
    rels = []
    for left, right in zip(xis, xis[1:]):
        rels.append(0 if left == right else (-1 if left < right else 1))
    seen_descent = False
    for i, rel in enumerate(rels):
        if rel == 1:
            seen_descent = True
        elif rel == -1 and seen_descent:
            return False
        if rel == 0 and i + 1 < len(rels) and rels[i + 1] == 0:
            return False
    for i in range(1, len(path) - 1):
        if g.xi(path[i - 1], path[i]) == g.xi(path[i], path[i + 1]) >= 0:
            if (g.eta(path[i - 1], path[i]) + g.eta(path[i], path[i + 1])) % g.d == 0:
                return False
    return True


def _adjacency(g: IterGraph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, g.k + 1)}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def tree_path(g: IterGraph, a: int, b: int) -> list[int]:
    """Unique chain between a and b in an acyclic connected graph."""
    adj = _adjacency(g)
    parent = {a: 0}
    stack = [a]
    while stack:
        v = stack.pop()
        if v == b:
            break
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def is_tree(g: IterGraph) -> bool:
    """Acyclic, spanning, and every vertex pair's chain is potentially complete."""
    if not validate_graph(g):
        return False
    if g.k == 1:
        return len(g.edges) == 0
    if len(g.edges) != g.k - 1:
        return False
    adj = _adjacency(g)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != g.k:
        return False
    # k-1 edges and connected rules out loops; check the chain condition
    for a in range(1, g.k + 1):
        for b in range(a + 1, g.k + 1):
            if not is_potentially_complete(g, tree_path(g, a, b)):
                return False
    return True


def _label_options(r: int, d: int) -> list[tuple[int, int]]:
    """All (xi, eta_forward) labels in deterministic order."""
    options = [(-1, 0)]
    for xi in range(r + 1):
        for eta in range(1, d):
            options.append((xi, eta))
    return options


def enumerate_complete_proper(
    r: int, k: int, d: int, cap: int = ENUMERATION_CAP
) -> list[IterGraph]:
    """All complete proper labelings on k vertices at level r.

    Backtracks over edges in lexicographic pair order, pruning as soon as a
    fully-labeled triangle breaks the triangle rules, so the cap guards the
    raw label space rather than visited nodes.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k <= 1:
        return [IterGraph(k=k, r=r, d=d)]
    pairs = [(a, b) for a in range(1, k + 1) for b in range(a + 1, k + 1)]
    options = _label_options(r, d)
    if len(options) ** len(pairs) > cap:
        raise BudgetError(
            f"label space {len(options)}**{len(pairs)} exceeds enumeration cap {cap}"
        )
    index = {pair: i for i, pair in enumerate(pairs)}
    # triangles checkable once pair i is labeled: both other edges come earlier
    ready: list[list[tuple[int, int, int]]] = [[] for _ in pairs]
    for a, b, c in permutations(range(1, k + 1), 3):
        keys = [index[(min(a, b), max(a, b))], index[(min(b, c), max(b, c))],
                index[(min(a, c), max(a, c))]]
        ready[max(keys)].append((a, b, c))

    out: list[IterGraph] = []
    labels: dict[tuple[int, int], tuple[int, int]] = {}

    def xi_of(x: int, y: int) -> int:
        return labels[(min(x, y), max(x, y))][0]

    def eta_of(x: int, y: int) -> int:
        xi, eta = labels[(min(x, y), max(x, y))]
        if xi == -1:
            return 0
        return eta if x < y else (d - eta) % d

    def triple_ok(a: int, b: int, c: int) -> bool:
        xi_ab, xi_bc, xi_ac = xi_of(a, b), xi_of(b, c), xi_of(a, c)
        if xi_ab == xi_bc == -1:
            return xi_ac == -1
        if xi_ab < xi_bc:
            return xi_ac == xi_bc and eta_of(a, c) == eta_of(b, c)
        if xi_ab == xi_bc and xi_ab >= 0:
            s = eta_of(a, b) + eta_of(b, c)
            if s != d:
                return xi_ac == xi_ab and eta_of(a, c) == s % d
            return xi_ac < xi_ab
        return True

    def assign(i: int):
        if i == len(pairs):
            out.append(IterGraph(k=k, r=r, d=d, edges=dict(labels)))
            return
        pair = pairs[i]
        for label in options:
            labels[pair] = label
            if all(triple_ok(a, b, c) for a, b, c in ready[i]):
                assign(i + 1)
        del labels[pair]

    assign(0)
    return out


def _tree_shapes(k: int) -> list[list[tuple[int, int]]]:
    """Edge lists of all labeled trees on {1..k}, one per Pruefer sequence."""
    if k == 1:
        return [[]]
    if k == 2:
        return [[(1, 2)]]
    shapes = []
    for seq in product(range(1, k + 1), repeat=k - 2):
        degree = {v: 1 for v in range(1, k + 1)}
        for v in seq:
            degree[v] += 1
        edges = []
        avail = sorted(v for v in range(1, k + 1) if degree[v] == 1)
        for v in seq:
            leaf = avail.pop(0)
            edges.append((min(leaf, v), max(leaf, v)))
            degree[v] -= 1
            if degree[v] == 1:
                bisect.insort(avail, v)
        a, b = avail
        edges.append((min(a, b), max(a, b)))
        shapes.append(sorted(edges))
    return shapes


def enumerate_trees(r: int, k: int, d: int, cap: int = ENUMERATION_CAP) -> list[IterGraph]:
    """All labeled spanning trees passing the chain condition."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k <= 1:
        return [IterGraph(k=k, r=r, d=d)]
    shapes = _tree_shapes(k)
    options = _label_options(r, d)
    if len(shapes) * len(options) ** (k - 1) > cap:
        raise BudgetError(f"tree label space exceeds enumeration cap {cap}")
    out = []
    for shape in shapes:
        for combo in product(options, repeat=len(shape)):
            g = IterGraph(k=k, r=r, d=d)
            for (a, b), (xi, eta) in zip(shape, combo):
                g = g.with_edge(a, b, xi, eta)
            if is_tree(g):
                out.append(g)
    return out


def count_partition_graphs(partition: Partition, r: int, d: int) -> int:
    """Strict complete proper graphs inducing the given block partition:
    (d-1)!/(d-t)! times the product of block-level counts one level down."""
    t = partition.t
    if t < 2 or t > d:
        raise ValueError(f"partition has {t} blocks, need 2 <= t <= {d}")
    ways = math.factorial(d - 1) // math.factorial(d - t)
    for block in partition.blocks:
        ways *= u_value(d, r - 1, len(block))
    return ways
