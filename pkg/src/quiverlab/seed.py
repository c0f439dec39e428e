"""Seeds, seed mutation, and exchange-graph enumeration.

A seed is (exchange matrix, ordered cluster of Laurent polynomials in the
initial variables).  The exchange graph is the breadth-first closure of the
initial seed under all mutations, with nodes identified by the unordered set
of canonical variable renderings.
"""

from collections import deque
from dataclasses import dataclass, field

from quiverlab.errors import BadDirection
from quiverlab.laurent import LaurentPoly
from quiverlab.quiver import mutate_matrix, to_exchange_matrix


@dataclass(frozen=True)
class Seed:
    matrix: tuple  # rows as tuples, skew-symmetric n x n
    cluster: tuple  # n LaurentPoly in the initial variables

    @property
    def n(self):
        return len(self.cluster)

    def cluster_key(self):
        """Unordered cluster identity: frozen set of canonical renderings."""
        return frozenset(p.render() for p in self.cluster)

    def labeled_key(self):
        """Ordered identity including the matrix (option flag in the graph)."""
        return (self.matrix, tuple(p.render() for p in self.cluster))


def initial_seed(q):
    """(B(q), (x_1, ..., x_n))."""
    b = to_exchange_matrix(q)
    cluster = tuple(LaurentPoly.variable(i, q.n) for i in range(1, q.n + 1))
    return Seed(tuple(tuple(row) for row in b), cluster)


def mutate_seed(seed, k):
    """Exchange at direction k: x'_k = (prod_in + prod_out) / x_k with
    exponents read off column/row k of the matrix; division is exact."""
    n = seed.n
    if not 1 <= k <= n:
        raise BadDirection(f"direction {k} outside 1..{n}")
    ki = k - 1
    b = seed.matrix
    prod_in = LaurentPoly.constant(1, seed.cluster[0].n)
    prod_out = LaurentPoly.constant(1, seed.cluster[0].n)
    for i in range(n):
        e = b[i][ki]
        if e > 0:  # arrows i -> k
            prod_in = prod_in * seed.cluster[i] ** e
    for j in range(n):
        e = b[ki][j]
        if e > 0:  # arrows k -> j
            prod_out = prod_out * seed.cluster[j] ** e
    new_var = (prod_in + prod_out).div_exact(seed.cluster[ki])
    new_cluster = tuple(
        new_var if i == ki else p for i, p in enumerate(seed.cluster)
    )
    new_matrix = tuple(tuple(row) for row in mutate_matrix([list(r) for r in b], k))
    return Seed(new_matrix, new_cluster)


@dataclass
class ExchangeGraph:
    nodes: list  # cluster keys (frozensets of renderings) in discovery order
    edges: list  # (from_id, direction, to_id)
    variables: list  # sorted canonical renderings of all variables seen
    complete: bool
    seeds: list = field(default_factory=list, repr=False)  # one witness per node

    @property
    def cluster_count(self):
        return len(self.nodes)

    def neighbors(self, node_id):
        out = set()
        for a, _, b in self.edges:
            if a == node_id:
                out.add(b)
            elif b == node_id:
                out.add(a)
        return out

    def to_edge_list_json(self):
        import json

        return json.dumps(
            {
                "nodes": [sorted(key) for key in self.nodes],
                "edges": [[a, k, b] for a, k, b in self.edges],
                "complete": self.complete,
            }
        )

    def to_dot(self):
        lines = ["graph exchange {"]
        for i, key in enumerate(self.nodes):
            label = "\\n".join(sorted(key))
            lines.append(f'  n{i} [label="{label}"];')
        seen = set()
        for a, k, b in self.edges:
            pair = (min(a, b), max(a, b))
            if pair in seen:
                continue
            seen.add(pair)
            lines.append(f'  n{pair[0]} -- n{pair[1]} [label="{k}"];')
        lines.append("}")
        return "\n".join(lines)


def exchange_graph(q, max_nodes=10000, max_depth=64, labeled=False):
    """Breadth-first closure under all mutations.

    Nodes are deduplicated by unordered variable set (or by labeled seed when
    `labeled`).  Returns a partial graph with complete=False once either
    budget bound trims the frontier.
    """
    if max_nodes < 1 or max_depth < 0:
        raise ValueError("budget must be positive")
    start = initial_seed(q)
    key_of = (lambda s: s.labeled_key()) if labeled else (lambda s: s.cluster_key())

    ids = {key_of(start): 0}
    nodes = [start.cluster_key()]
    seeds = [start]
    edges = []
    variables = set(p.render() for p in start.cluster)
    complete = True

    queue = deque([(start, 0, 0)])
    while queue:
        seed, node_id, depth = queue.popleft()
        for k in range(1, q.n + 1):
            neighbor = mutate_seed(seed, k)
            key = key_of(neighbor)
            if key in ids:
                edges.append((node_id, k, ids[key]))
                continue
            if depth + 1 > max_depth or len(nodes) >= max_nodes:
                complete = False
                continue
            new_id = len(nodes)
            ids[key] = new_id
            nodes.append(neighbor.cluster_key())
            seeds.append(neighbor)
            variables.update(p.render() for p in neighbor.cluster)
            edges.append((node_id, k, new_id))
            queue.append((neighbor, new_id, depth + 1))
    return ExchangeGraph(nodes, edges, sorted(variables), complete, seeds)
