"""Module calculus at desk scale.

Cartan matrices and g-vectors work for any acyclic quiver.  The full module
calculus (indecomposables, submodule lattices, Hom/Ext, AR quiver) is for
type-A quivers of any orientation, where every indecomposable is thin and is
determined by its support: a connected stretch of the underlying path.
"""

from dataclasses import dataclass
from fractions import Fraction

from quiverlab import _linalg
from quiverlab.errors import (
    BadLabel,
    CyclicQuiver,
    HomCycle,
    InfiniteLattice,
    NotExtOrthogonal,
    NotTypeA,
    ParseError,
    QuiverMismatch,
)
from quiverlab.quiver import is_acyclic

# -- quiver shape ------------------------------------------------------------


def path_order(q):
    """Vertex labels along the underlying A_n path, or NotTypeA.

    Requires: single arrow per adjacent pair, no multi-edges, connected path
    graph.  The returned order starts at the endpoint with the smaller label.
    """
    if q.n == 1:
        if q.arrows:
            raise NotTypeA("A_1 has no arrows")
        return [1]
    counts = q.arrow_counts()
    if any(m > 1 for m in counts.values()):
        raise NotTypeA("multiple arrows between two vertices")
    neighbors = {v: set() for v in range(1, q.n + 1)}
    for s, t in counts:
        if t in neighbors[s]:
            raise NotTypeA("parallel edges in the underlying graph")
        neighbors[s].add(t)
        neighbors[t].add(s)
    if len(counts) != q.n - 1:
        raise NotTypeA(f"a path on {q.n} vertices has {q.n - 1} edges")
    ends = [v for v, ns in neighbors.items() if len(ns) == 1]
    if len(ends) != 2 or any(len(ns) > 2 for ns in neighbors.values()):
        raise NotTypeA("underlying graph is not a path")
    order = [min(ends)]
    prev = None
    while len(order) < q.n:
        nxt = [v for v in neighbors[order[-1]] if v != prev]
        if len(nxt) != 1:
            raise NotTypeA("underlying graph is not a path")
        prev = order[-1]
        order.append(nxt[0])
    return order


def is_type_a(q):
    try:
        path_order(q)
        return True
    except NotTypeA:
        return False


def _connected_supports(q):
    """All supports of indecomposables: contiguous runs along the path."""
    order = path_order(q)
    out = []
    for i in range(len(order)):
        for j in range(i, len(order)):
            out.append(frozenset(order[i : j + 1]))
    return out


# -- Cartan matrix and g-vectors ---------------------------------------------


def cartan_matrix(q):
    """n x n matrix whose column i is the dimension vector of P_i
    (paths out of i, counted per target vertex)."""
    if not is_acyclic(q):
        raise CyclicQuiver("Cartan matrix needs an acyclic quiver")
    n = q.n
    counts = q.arrow_counts()
    # paths[i][j] = number of paths i -> j; I + A + A^2 + ... (A nilpotent).
    paths = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    frontier = [[counts.get((i + 1, j + 1), 0) for j in range(n)] for i in range(n)]
    while any(any(row) for row in frontier):
        for i in range(n):
            for j in range(n):
                paths[i][j] += frontier[i][j]
        frontier = [
            [
                sum(
                    frontier[i][t] * counts.get((t + 1, j + 1), 0)
                    for t in range(n)
                )
                for j in range(n)
            ]
            for i in range(n)
        ]
    # Column i = dim P_i, so entry (j, i) counts paths i -> j.
    return [[paths[i][j] for i in range(n)] for j in range(n)]


def g_vector(q, dim, side="standard"):
    """g = C^-1 . dim; the opposite side uses C^T (Cartan of Q^op), which is
    how g(D(-)) is computed without materializing the duality functor."""
    c = cartan_matrix(q)
    if side == "opposite":
        c = _linalg.transpose(c)
    elif side != "standard":
        raise ValueError(f"unknown side {side!r}")
    return tuple(_linalg.solve_int(c, list(dim)))


def coxeter_dim(q, dim):
    """dim tau(M) = Phi . dim M for non-projective indecomposable M, with
    Phi = -C^T C^-1."""
    c = cartan_matrix(q)
    ct = _linalg.transpose(c)
    cinv = _linalg.inverse(c)
    phi = _linalg.mat_mul(ct, cinv)
    out = _linalg.mat_vec(phi, [Fraction(d) for d in dim])
    return tuple(int(-v) for v in out)


# -- module descriptors -------------------------------------------------------


@dataclass(frozen=True)
class ModuleDesc:
    """A thin indecomposable (by its support) or a shifted projective P_i[1]."""

    quiver: object
    support: frozenset = None  # None for shifted projectives
    shift_index: int = None  # i of P_i[1], else None

    def __post_init__(self):
        if (self.support is None) == (self.shift_index is None):
            raise ValueError("exactly one of support / shift_index must be set")

    @property
    def is_shifted(self):
        return self.shift_index is not None

    def dim_vector(self):
        if self.is_shifted:
            raise ValueError("shifted projectives carry no dimension vector")
        return tuple(1 if v in self.support else 0 for v in range(1, self.quiver.n + 1))

    def g_vec(self):
        """g-vector; -e_i for a shifted projective."""
        if self.is_shifted:
            return tuple(
                -1 if v == self.shift_index else 0
                for v in range(1, self.quiver.n + 1)
            )
        return g_vector(self.quiver, self.dim_vector())

    def literal(self):
        if self.is_shifted:
            return f"P[{self.shift_index}][1]"
        lo, hi = min(self.support), max(self.support)
        if len(self.support) == hi - lo + 1:
            return f"M[{lo},{hi}]"
        return "M(" + ",".join(str(d) for d in self.dim_vector()) + ")"

    def __repr__(self):
        return self.literal()

    def sort_key(self):
        if self.is_shifted:
            return (1, self.shift_index, ())
        return (0, min(self.support), tuple(sorted(self.support)))


def _check_same_quiver(a, b):
    if a.quiver != b.quiver:
        raise QuiverMismatch("modules live over different quivers")


def module_from_support(q, support):
    support = frozenset(support)
    order = path_order(q)
    positions = sorted(order.index(v) for v in support)
    if not positions:
        raise BadLabel("empty support")
    if positions != list(range(positions[0], positions[-1] + 1)):
        raise NotTypeA(f"support {sorted(support)} is not connected in the path")
    return ModuleDesc(q, support=support)


def interval_module(q, a, b):
    """M_{ab}: support {a, ..., b}; requires that label range to be a
    connected stretch of the path (always true for label-ordered paths)."""
    if not 1 <= a <= b <= q.n:
        raise BadLabel(f"need 1 <= a <= b <= {q.n}, got [{a},{b}]")
    return module_from_support(q, range(a, b + 1))


def simple_module(q, i):
    return module_from_support(q, {i})


def projective_module(q, i):
    """P_i: support = vertices reachable from i."""
    if not 1 <= i <= q.n:
        raise BadLabel(f"vertex {i} outside 1..{q.n}")
    counts = q.arrow_counts()
    reach = {i}
    frontier = [i]
    while frontier:
        v = frontier.pop()
        for (s, t) in counts:
            if s == v and t not in reach:
                reach.add(t)
                frontier.append(t)
    return module_from_support(q, reach)


def injective_module(q, i):
    """I_i: support = vertices that reach i."""
    if not 1 <= i <= q.n:
        raise BadLabel(f"vertex {i} outside 1..{q.n}")
    counts = q.arrow_counts()
    reach = {i}
    frontier = [i]
    while frontier:
        v = frontier.pop()
        for (s, t) in counts:
            if t == v and s not in reach:
                reach.add(s)
                frontier.append(s)
    return module_from_support(q, reach)


def shifted_projective(q, i):
    if not 1 <= i <= q.n:
        raise BadLabel(f"vertex {i} outside 1..{q.n}")
    return ModuleDesc(q, shift_index=i)


def module_from_dim(q, dim):
    support = {i + 1 for i, d in enumerate(dim) if d == 1}
    if any(d not in (0, 1) for d in dim):
        raise NotTypeA(f"dimension vector {dim} is not thin")
    return module_from_support(q, support)


def interval_modules(q):
    """All n(n+1)/2 thin indecomposables, sorted by literal."""
    descs = [ModuleDesc(q, support=s) for s in _connected_supports(q)]
    return sorted(descs, key=ModuleDesc.sort_key)


def parse_module_literal(q, text):
    """Accept M[a,b], M(d1,...,dn), P[i], I[i], S[i], P[i][1]."""
    text = text.strip().replace(" ", "")
    try:
        if text.startswith("M[") and text.endswith("]"):
            a, b = text[2:-1].split(",")
            return interval_module(q, int(a), int(b))
        if text.startswith("M(") and text.endswith(")"):
            dim = [int(x) for x in text[2:-1].split(",")]
            if len(dim) != q.n:
                raise ParseError(f"expected {q.n} entries", 0)
            return module_from_dim(q, dim)
        if text.endswith("[1]") and text.startswith("P["):
            return shifted_projective(q, int(text[2:-4]))
        if text.startswith("P[") and text.endswith("]"):
            return projective_module(q, int(text[2:-1]))
        if text.startswith("I[") and text.endswith("]"):
            return injective_module(q, int(text[2:-1]))
        if text.startswith("S[") and text.endswith("]"):
            return simple_module(q, int(text[2:-1]))
    except ValueError as exc:
        raise ParseError(f"bad module literal {text!r}: {exc}", 0) from exc
    raise ParseError(f"bad module literal {text!r}", 0)


# -- submodule lattices -------------------------------------------------------


def _closed_subsets(q, support):
    """Subsets of `support` closed under in-support arrows (submodules of the
    thin module with that support)."""
    support = sorted(support)
    inside = [
        (s, t)
        for (s, t) in q.arrow_counts()
        if s in set(support) and t in set(support)
    ]
    out = []
    for mask in range(1 << len(support)):
        subset = {support[i] for i in range(len(support)) if mask >> i & 1}
        if all(t in subset for (s, t) in inside if s in subset):
            out.append(frozenset(subset))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def submodules(m):
    """Submodules of a thin module as (dim vector, support witness) pairs."""
    if m.is_shifted:
        raise ValueError("shifted projectives have no submodule lattice")
    n = m.quiver.n
    out = []
    for subset in _closed_subsets(m.quiver, m.support):
        dim = tuple(1 if v in subset else 0 for v in range(1, n + 1))
        out.append((dim, subset))
    return out


def submodule_dims(m):
    return [dim for dim, _ in submodules(m)]


def _hom_support(q, supp_m, supp_n):
    """dim Hom between thin modules given by (possibly disconnected) supports.

    Commuting-square constraints on the vertexwise scalars, solved by rank
    computation over the rationals.
    """
    common = sorted(supp_m & supp_n)
    if not common:
        return 0, frozenset()
    index = {v: i for i, v in enumerate(common)}
    rows = []
    for (s, t) in q.arrow_counts():
        in_m = s in supp_m and t in supp_m
        in_n = s in supp_n and t in supp_n
        if in_m and in_n:
            row = [0] * len(common)
            row[index[s]] = 1
            row[index[t]] -= 1
            rows.append(row)
        elif in_m and t in supp_n:  # arrow leaves supp N upstream: kill target
            row = [0] * len(common)
            row[index[t]] = 1
            rows.append(row)
        elif in_n and s in supp_m:  # arrow exits supp M downstream: kill source
            row = [0] * len(common)
            row[index[s]] = 1
            rows.append(row)
    dim = len(common) - _linalg.rank(rows)
    # Nonzero window: vertices not forced to zero (meaningful when dim == 1).
    killed = set()
    changed = True
    zero_rows = {tuple(r) for r in rows}
    # Propagate kills through equality constraints.
    direct_kill = set()
    for (s, t) in q.arrow_counts():
        in_m = s in supp_m and t in supp_m
        in_n = s in supp_n and t in supp_n
        if in_m and not in_n and t in supp_n:
            direct_kill.add(t)
        if in_n and not in_m and s in supp_m:
            direct_kill.add(s)
    equal_pairs = [
        (s, t)
        for (s, t) in q.arrow_counts()
        if s in supp_m and t in supp_m and s in supp_n and t in supp_n
    ]
    killed = set(direct_kill)
    while changed:
        changed = False
        for s, t in equal_pairs:
            if (s in killed) != (t in killed):
                killed.update((s, t))
                changed = True
    window = frozenset(v for v in common if v not in killed)
    return dim, window


def hom_dim(m, n):
    """dim Hom(m, n) for thin type-A modules on the same quiver."""
    _check_same_quiver(m, n)
    if m.is_shifted or n.is_shifted:
        raise ValueError("hom_dim is defined for modules, not shifted projectives")
    dim, _ = _hom_support(m.quiver, m.support, n.support)
    return dim


def hom_window(m, n):
    """Support of the canonical nonzero morphism (when hom_dim == 1)."""
    _check_same_quiver(m, n)
    _, window = _hom_support(m.quiver, m.support, n.support)
    return window


def euler_form(q, d, e):
    """Hereditary Euler form <d, e> = sum d_i e_i - sum_{arrows i->j} d_i e_j;
    equals hom - ext."""
    total = sum(di * ei for di, ei in zip(d, e))
    for (s, t), mult in q.arrow_counts().items():
        total -= mult * d[s - 1] * e[t - 1]
    return total


def ext_dim(m, n):
    """dim Ext^1(m, n) = hom_dim(m, n) - <dim m, dim n>."""
    _check_same_quiver(m, n)
    value = hom_dim(m, n) - euler_form(m.quiver, m.dim_vector(), n.dim_vector())
    if value < 0:
        raise AssertionError("negative Ext dimension: implementation bug")
    return value


# -- direct sums --------------------------------------------------------------


def _quotient_supports(q, support, sub_support):
    """Support components of (thin module)/(submodule): the complement."""
    return frozenset(support) - frozenset(sub_support)


def sum_submodule_dims(summands):
    """Dim-vector multiset of the submodule lattice of a direct sum of thin
    indecomposables; raises InfiniteLattice when the lattice is infinite.

    Finiteness criterion: for every ordered pair of summands (A, B), every
    submodule Y of B and every quotient A/X must satisfy Hom(Y, A/X) = 0;
    then submodules of the sum are exactly products of submodules.
    """
    if not summands:
        return [tuple()]
    q = summands[0].quiver
    for m in summands:
        if m.quiver != q:
            raise QuiverMismatch("summands live over different quivers")
        if m.is_shifted:
            raise ValueError("direct sums of modules only")
    subs = [submodules(m) for m in summands]
    for i, a in enumerate(summands):
        for j, b in enumerate(summands):
            if i == j:
                continue
            for _, x_supp in subs[i]:
                quot = _quotient_supports(q, a.support, x_supp)
                if not quot:
                    continue
                for _, y_supp in subs[j]:
                    if not y_supp:
                        continue
                    dim, _ = _hom_support(q, y_supp, quot)
                    if dim:
                        raise InfiniteLattice(
                            f"Hom({sorted(y_supp)}, {sorted(a.support)}/"
                            f"{sorted(x_supp)}) != 0"
                        )
    n = q.n
    dims = [(0,) * n]
    for lattice in subs:
        dims = [
            tuple(x + y for x, y in zip(total, dim))
            for total in dims
            for dim, _ in lattice
        ]
        if len(dims) > 1 << 20:
            raise InfiniteLattice("lattice too large")  # defensive
    return dims


# -- AR quiver ----------------------------------------------------------------


@dataclass(frozen=True)
class ARNode:
    desc: ModuleDesc
    formal_dim: tuple  # -dim P_i for shifted projectives
    slice_index: int


@dataclass
class ARQuiver:
    quiver: object
    nodes: list  # ARNode
    arrows: list  # (from_index, to_index)
    tau: dict  # node index -> index of its AR translate

    def node_index(self, desc):
        for i, node in enumerate(self.nodes):
            if node.desc == desc:
                return i
        raise KeyError(desc)

    def meshes(self):
        """(start, middles, end) index triples: start = tau(end)."""
        out = []
        for end, start in self.tau.items():
            middles = sorted(src for src, dst in self.arrows if dst == end)
            out.append((start, tuple(middles), end))
        return out


def irreducible_arrows(q):
    """Arrows of the module AR quiver: nonzero homs that admit no nonzero
    factorization through a third indecomposable (hom spaces here are at most
    one-dimensional, so a single surviving composite kills irreducibility)."""
    descs = interval_modules(q)
    hom = {}
    window = {}
    for a in descs:
        for b in descs:
            if a == b:
                continue
            d, w = _hom_support(q, a.support, b.support)
            if d:
                hom[(a, b)] = d
                window[(a, b)] = w
    arrows = []
    for (a, b), d in hom.items():
        reducible = False
        for z in descs:
            if z in (a, b):
                continue
            if (a, z) in hom and (z, b) in hom:
                if window[(a, z)] & window[(z, b)]:
                    reducible = True
                    break
        if not reducible:
            arrows.append((a, b))
    return arrows


def ar_quiver(q):
    """The AR quiver of a type-A quiver with the shifted projectives appended
    after the injectives (tau(P_i[1]) = I_i)."""
    descs = interval_modules(q)
    projectives = {projective_module(q, i): i for i in range(1, q.n + 1)}
    module_arrows = irreducible_arrows(q)

    dims = {m: m.dim_vector() for m in descs}
    by_dim = {dim: m for m, dim in dims.items()}
    tau_desc = {}
    for m in descs:
        if m in projectives:
            continue
        tdim = coxeter_dim(q, dims[m])
        tau_desc[m] = by_dim[tdim]

    shifted = [shifted_projective(q, i) for i in range(1, q.n + 1)]
    arrows = list(module_arrows)
    counts = q.arrow_counts()
    for (s, t) in counts:
        # Injective-to-shifted and shifted-to-shifted arrows mirror Q.
        arrows.append((injective_module(q, s), shifted_projective(q, t)))
        arrows.append((shifted_projective(q, t), shifted_projective(q, s)))
    for p in shifted:
        tau_desc[p] = injective_module(q, p.shift_index)

    # Slice index: longest path from any projective through the arrow DAG.
    all_descs = descs + shifted
    indeg = {d: 0 for d in all_descs}
    for a, b in arrows:
        indeg[b] += 1
    layer = {d: 0 for d in all_descs}
    pending = dict(indeg)
    queue = sorted(
        (d for d in all_descs if indeg[d] == 0), key=ModuleDesc.sort_key
    )
    while queue:
        d = queue.pop(0)
        for a, b in arrows:
            if a == d:
                layer[b] = max(layer[b], layer[d] + 1)
                pending[b] -= 1
                if pending[b] == 0:
                    queue.append(b)
        queue.sort(key=ModuleDesc.sort_key)

    def formal_dim(d):
        if d.is_shifted:
            pdim = projective_module(q, d.shift_index).dim_vector()
            return tuple(-x for x in pdim)
        return d.dim_vector()

    node_list = [ARNode(d, formal_dim(d), layer[d]) for d in all_descs]
    index = {node.desc: i for i, node in enumerate(node_list)}
    arrow_idx = sorted((index[a], index[b]) for a, b in arrows)
    tau_idx = {index[m]: index[t] for m, t in tau_desc.items()}
    return ARQuiver(q, node_list, arrow_idx, tau_idx)


# -- exceptional order --------------------------------------------------------


def exceptional_order(mods):
    """Order ext-orthogonal modules so all nonzero Homs point forward
    (Hom(T_j, T_i) = 0 for i < j); ties keep input order."""
    mods = list(mods)
    for i, a in enumerate(mods):
        for j, b in enumerate(mods):
            if i != j and ext_dim(a, b):
                raise NotExtOrthogonal(f"Ext({a.literal()},{b.literal()}) != 0")
    # Edge a -> b when Hom(a, b) != 0: a must come first.
    edges = {
        (i, j)
        for i, a in enumerate(mods)
        for j, b in enumerate(mods)
        if i != j and hom_dim(a, b)
    }
    indeg = {i: 0 for i in range(len(mods))}
    for _, j in edges:
        indeg[j] += 1
    ready = [i for i in range(len(mods)) if indeg[i] == 0]
    result = []
    while ready:
        i = ready.pop(0)  # input order priority: lowest original index first
        result.append(mods[i])
        for a, b in sorted(edges):
            if a == i:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
        ready.sort()
    if len(result) != len(mods):
        raise HomCycle("Hom cycle among ext-orthogonal modules")
    return result
