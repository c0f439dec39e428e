"""Rigidity, support tilting, silting pairs, and the compatibility graphs.

Silting pairs are the size-n cliques of the extended compatibility graph over
{thin indecomposables} + {shifted projectives}; the graphs are tiny, so a
plain Bron-Kerbosch maximal-clique search does the enumeration.
"""

from dataclasses import dataclass

from quiverlab import _linalg
from quiverlab.errors import MissingCharacter, NotAFace, QuiverMismatch
from quiverlab.repmod import (
    ModuleDesc,
    ext_dim,
    interval_modules,
    shifted_projective,
)


def is_compatible(a, b):
    """Extended compatibility: modules need Ext = 0 both ways, P_i[1] and M
    need Hom(P_i, M) = 0 (no support at i), shifted pairs need i != j."""
    if a.quiver != b.quiver:
        raise QuiverMismatch("modules live over different quivers")
    if a == b:
        return False
    if a.is_shifted and b.is_shifted:
        return a.shift_index != b.shift_index
    if a.is_shifted or b.is_shifted:
        shifted, module = (a, b) if a.is_shifted else (b, a)
        # Hom(P_i, M) = dim M at vertex i.
        return shifted.shift_index not in module.support
    return ext_dim(a, b) == 0 and ext_dim(b, a) == 0


@dataclass
class CompatibilityGraph:
    quiver: object
    vertices: list  # ModuleDesc, canonical order
    edges: set  # frozensets {a, b}

    def are_adjacent(self, a, b):
        return frozenset((a, b)) in self.edges

    def to_json(self):
        import json

        return json.dumps(
            {
                "vertices": [v.literal() for v in self.vertices],
                "edges": sorted(
                    sorted(v.literal() for v in e) for e in self.edges
                ),
            }
        )


def compatibility_graph(q, extended=True):
    """Compatibility graph over the indecomposables, extended by the shifted
    projectives unless extended=False."""
    vertices = list(interval_modules(q))
    if extended:
        vertices += [shifted_projective(q, i) for i in range(1, q.n + 1)]
    vertices.sort(key=ModuleDesc.sort_key)
    edges = set()
    for i, a in enumerate(vertices):
        for b in vertices[i + 1 :]:
            if is_compatible(a, b):
                edges.add(frozenset((a, b)))
    return CompatibilityGraph(q, vertices, edges)


def _bron_kerbosch(adjacent, r, p, x, out):
    if not p and not x:
        out.append(frozenset(r))
        return
    pivot = max(p | x, key=lambda v: len(adjacent[v] & p))
    for v in sorted(p - adjacent[pivot], key=ModuleDesc.sort_key):
        _bron_kerbosch(
            adjacent, r | {v}, p & adjacent[v], x & adjacent[v], out
        )
        p = p - {v}
        x = x | {v}


def maximal_cliques(graph):
    adjacent = {v: set() for v in graph.vertices}
    for e in graph.edges:
        a, b = tuple(e)
        adjacent[a].add(b)
        adjacent[b].add(a)
    out = []
    _bron_kerbosch(adjacent, set(), set(graph.vertices), set(), out)
    return out


@dataclass(frozen=True)
class SiltingPair:
    """(support tilting summand set, shifted projective index set); n total."""

    modules: frozenset  # ModuleDesc with support
    shifted: frozenset  # vertex indices i of P_i[1]

    @property
    def size(self):
        return len(self.modules) + len(self.shifted)

    def members(self, q):
        return sorted(self.modules, key=ModuleDesc.sort_key) + [
            shifted_projective(q, i) for i in sorted(self.shifted)
        ]

    def g_matrix(self, q):
        """Columns = g-vectors of the members, in canonical member order."""
        vectors = [m.g_vec() for m in self.members(q)]
        return [[vec[r] for vec in vectors] for r in range(q.n)]

    def literal(self):
        mods = ",".join(m.literal() for m in sorted(self.modules, key=ModuleDesc.sort_key))
        shifts = ",".join(str(i) for i in sorted(self.shifted))
        return f"T=[{mods}];P=[{shifts}]"

    def sort_key(self):
        return (
            tuple(m.sort_key() for m in sorted(self.modules, key=ModuleDesc.sort_key)),
            tuple(sorted(self.shifted)),
        )


def _pair_from_clique(q, clique):
    modules = frozenset(v for v in clique if not v.is_shifted)
    shifted = frozenset(v.shift_index for v in clique if v.is_shifted)
    pair = SiltingPair(modules, shifted)
    _validate_pair(q, pair)
    return pair


def _validate_pair(q, pair):
    if pair.size != q.n:
        raise AssertionError(f"silting pair of size {pair.size} != {q.n}")
    support = set()
    for m in pair.modules:
        support |= m.support
    if len(support) != len(pair.modules):
        raise AssertionError("support size differs from module count")
    if support & pair.shifted:
        raise AssertionError("shifted projective inside the support")
    g = pair.g_matrix(q)
    if _linalg.det(g) == 0:
        raise AssertionError("g-vectors of a silting pair are dependent")


def silting_pairs(q):
    """All silting pairs, via size-n cliques of the extended graph."""
    graph = compatibility_graph(q, extended=True)
    pairs = []
    for clique in maximal_cliques(graph):
        if len(clique) == q.n:
            pairs.append(_pair_from_clique(q, clique))
    return sorted(pairs, key=SiltingPair.sort_key)


def tilting_modules(q):
    """Silting pairs with empty shifted part."""
    return [p for p in silting_pairs(q) if not p.shifted]


def complete_almost(q, pair, removed):
    """Both completions of pair minus one member: the removed element and the
    unique other one ("exactly one way to replace")."""
    members = pair.members(q)
    if removed not in members:
        raise NotAFace(f"{removed.literal()} is not a member of the pair")
    rest = [m for m in members if m != removed]
    for i, a in enumerate(rest):
        for b in rest[i + 1 :]:
            if not is_compatible(a, b):
                raise NotAFace("remaining members are not pairwise compatible")
    graph = compatibility_graph(q, extended=True)
    completions = [
        v
        for v in graph.vertices
        if v not in rest and all(is_compatible(v, m) for m in rest)
    ]
    if len(completions) != 2 or removed not in completions:
        raise AssertionError(
            f"expected exactly two completions, found {len(completions)}"
        )
    other = next(v for v in completions if v != removed)
    return removed, other


def silting_to_cluster(q, pair, table):
    """The cluster of a silting pair: characters of the module part plus the
    initial variables of the shifted part, as a set."""
    from quiverlab.laurent import LaurentPoly

    out = set()
    for m in sorted(pair.modules, key=ModuleDesc.sort_key):
        if m not in table:
            raise MissingCharacter(m.literal())
        out.add(table[m])
    for i in sorted(pair.shifted):
        out.add(LaurentPoly.variable(i, q.n))
    return out


def parse_pair_literal(q, text):
    """Parse 'T=[M[1,1],M[3,3]];P=[2]'."""
    from quiverlab.errors import ParseError
    from quiverlab.repmod import parse_module_literal

    text = text.strip().replace(" ", "")
    if not text.startswith("T=[") or ";P=[" not in text or not text.endswith("]"):
        raise ParseError(f"bad pair literal {text!r}", 0)
    t_part, p_part = text[2:].split(";P=", 1)
    t_body = t_part[1:-1]
    p_body = p_part[1:-1]

    def split_literals(body):
        out, depth, current = [], 0, []
        for ch in body:
            if ch == "," and depth == 0:
                out.append("".join(current))
                current = []
                continue
            depth += ch in "[("
            depth -= ch in "])"
            current.append(ch)
        if current:
            out.append("".join(current))
        return out

    modules = frozenset(
        parse_module_literal(q, lit) for lit in split_literals(t_body) if lit
    )
    shifted = frozenset(int(s) for s in p_body.split(",") if s)
    pair = SiltingPair(modules, shifted)
    _validate_pair(q, pair)
    return pair
