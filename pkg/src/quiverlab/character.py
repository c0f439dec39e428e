"""Cluster characters: submodule-sum formula, frieze knitting, projective and
injective recursions, multiplicativity, and thin quiver-Grassmannian counts.

Two independent algorithms compute the same characters: the submodule sum
(via g-vectors of both sides of each submodule) and the frieze knitting (via
the almost-split relation chi(A) chi(C) = chi(B) + 1); their agreement is a
property test.
"""

from quiverlab.errors import MissingCharacter, NotTypeA, RecursionUngrounded
from quiverlab.laurent import LaurentPoly
from quiverlab.quiver import is_acyclic
from quiverlab.repmod import (
    ModuleDesc,
    cartan_matrix,
    g_vector,
    path_order,
    shifted_projective,
    submodules,
    sum_submodule_dims,
)


def _x_power(n, exp):
    return LaurentPoly.monomial(tuple(exp), 1) if any(exp) else LaurentPoly.constant(1, n)


def _neg(vec):
    return tuple(-v for v in vec)


def char_submodule(m):
    """chi(m) = sum over submodules V of x^{-g(V)} x^{-g_op(dim m - dim V)}.

    Requires a finite submodule lattice; intervals always qualify.  A list of
    summands is summed over the product lattice and raises InfiniteLattice
    when that lattice is infinite (use char_direct_sum there instead).
    """
    if isinstance(m, (list, tuple)):
        if not m:
            raise ValueError("empty summand list")
        q = m[0].quiver
        mdim = [0] * q.n
        for part in m:
            for i, d in enumerate(part.dim_vector()):
                mdim[i] += d
        sub_dims = sum_submodule_dims(list(m))  # raises InfiniteLattice
        total = LaurentPoly.zero(q.n)
        for sub_dim in sub_dims:
            quot_dim = tuple(a - b for a, b in zip(mdim, sub_dim))
            exp = tuple(
                -a - b
                for a, b in zip(
                    g_vector(q, sub_dim), g_vector(q, quot_dim, side="opposite")
                )
            )
            total = total + _x_power(q.n, exp)
        return total
    if m.is_shifted:
        return LaurentPoly.variable(m.shift_index, m.quiver.n)
    q = m.quiver
    n = q.n
    mdim = m.dim_vector()
    total = LaurentPoly.zero(n)
    for sub_dim, _ in submodules(m):
        quot_dim = tuple(a - b for a, b in zip(mdim, sub_dim))
        g_sub = g_vector(q, sub_dim)
        g_quot_dual = g_vector(q, quot_dim, side="opposite")
        exp = tuple(-a - b for a, b in zip(g_sub, g_quot_dual))
        total = total + _x_power(n, exp)
    return total


def char_direct_sum(summands, table=None):
    """chi of a direct sum = product of summand characters (chi(0) = 1)."""
    if not summands:
        if table:
            any_desc = next(iter(table))
            return LaurentPoly.constant(1, any_desc.quiver.n)
        raise ValueError("empty sum needs a table to know the variable count")
    n = summands[0].quiver.n
    total = LaurentPoly.constant(1, n)
    for m in summands:
        if table is not None and m in table:
            total = total * table[m]
        else:
            total = total * char_submodule(m)
    return total


def char_projective(q, i):
    """chi(P_i) = chi(rad P_i) x^{-g(D S_i)} + x_i^{-1}; rad P_i is the sum
    of P_j over arrows i -> j, so the recursion grounds at sink vertices."""
    if not is_acyclic(q):
        raise RecursionUngrounded("projective recursion needs an acyclic quiver")
    return _char_projective(q, i, {})


def _char_projective(q, i, cache):
    if i in cache:
        return cache[i]
    n = q.n
    rad = LaurentPoly.constant(1, n)
    for (s, t), mult in sorted(q.arrow_counts().items()):
        if s == i:
            rad = rad * _char_projective(q, t, cache) ** mult
    e_i = tuple(1 if v == i else 0 for v in range(1, n + 1))
    shift = _x_power(n, _neg(g_vector(q, e_i, side="opposite")))
    x_inv = _x_power(n, _neg(e_i))
    result = rad * shift + x_inv
    cache[i] = result
    return result


def char_injective(q, i):
    """chi(I_i) = chi(I_i / S_i) x^{-g(S_i)} + x_i^{-1}; I_i/S_i is the sum
    of I_j over arrows j -> i."""
    if not is_acyclic(q):
        raise RecursionUngrounded("injective recursion needs an acyclic quiver")
    return _char_injective(q, i, {})


def _char_injective(q, i, cache):
    if i in cache:
        return cache[i]
    n = q.n
    quot = LaurentPoly.constant(1, n)
    for (s, t), mult in sorted(q.arrow_counts().items()):
        if t == i:
            quot = quot * _char_injective(q, s, cache) ** mult
    e_i = tuple(1 if v == i else 0 for v in range(1, n + 1))
    shift = _x_power(n, _neg(g_vector(q, e_i)))
    x_inv = _x_power(n, _neg(e_i))
    result = quot * shift + x_inv
    cache[i] = result
    return result


def char_simple(q, i):
    """chi(S_i) = x^{-g(D S_i)} + x^{-g(S_i)}: exactly the exchange formula
    at vertex i of the initial seed, valid for any acyclic quiver."""
    n = q.n
    e_i = tuple(1 if v == i else 0 for v in range(1, n + 1))
    return _x_power(n, _neg(g_vector(q, e_i, side="opposite"))) + _x_power(
        n, _neg(g_vector(q, e_i))
    )


def gr_euler(m, e):
    """Number of submodules of thin m with dimension vector e (the Euler
    characteristic of the quiver Grassmannian Gr(m, e) for thin modules)."""
    return sum(1 for dim, _ in submodules(m) if dim == tuple(e))


# -- frieze knitting ----------------------------------------------------------


class CharacterTable(dict):
    """ModuleDesc -> LaurentPoly; includes shifted projectives (value x_i)."""

    def lookup(self, desc):
        try:
            return self[desc]
        except KeyError:
            raise MissingCharacter(desc.literal()) from None

    def to_json_map(self):
        return {
            desc.literal(): poly.render("display")
            for desc, poly in sorted(self.items(), key=lambda kv: kv[0].sort_key())
        }


def char_frieze(q):
    """Character table for all indecomposables and shifted projectives of a
    type-A quiver, produced by knitting.

    The starting slice is shaped like the opposite quiver and carries the
    initial variables with formal dimension vectors -dim I_i; each knit at a
    source c replaces the slice node by the next one in its tau-orbit via
    chi_new = (prod of middles + 1) / chi_old, tracking formal dimensions
    additively.  Knitting stops once every orbit has wrapped to its shifted
    projective (negative formal dimension).
    """
    order = path_order(q)  # validates type A
    n = q.n
    cartan = cartan_matrix(q)
    proj_dims = {
        tuple(-cartan[r][i - 1] for r in range(n)): i for i in range(1, n + 1)
    }

    from quiverlab.repmod import injective_module

    # Slice shape: arrows of Q^op between vertex classes.
    shape = {(t, s) for (s, t) in q.arrow_counts()}
    values = {}
    dims = {}
    for i in range(1, n + 1):
        values[i] = LaurentPoly.variable(i, n)
        dims[i] = tuple(-d for d in injective_module(q, i).dim_vector())

    table = CharacterTable()
    for i in range(1, n + 1):
        table[shifted_projective(q, i)] = LaurentPoly.variable(i, n)

    finished = {i: False for i in range(1, n + 1)}
    expected = n * (n + 1) // 2
    produced = 0
    guard = 0
    while not all(finished.values()):
        guard += 1
        if guard > 4 * (expected + n):
            raise AssertionError("knitting did not terminate")
        sources = [
            c
            for c in range(1, n + 1)
            if not finished[c] and all(arr[1] != c for arr in shape)
        ]
        if not sources:
            raise AssertionError("knitting stalled: no eligible source")
        c = min(sources)
        middles = [t for (s, t) in shape if s == c]
        prod = LaurentPoly.constant(1, n)
        new_dim = tuple(-d for d in dims[c])
        for mid in middles:
            prod = prod * values[mid]
            new_dim = tuple(a + b for a, b in zip(new_dim, dims[mid]))
        new_value = (prod + 1).div_exact(values[c])
        values[c] = new_value
        dims[c] = new_dim
        shape = {(t, s) if c in (s, t) else (s, t) for (s, t) in shape}
        if all(d <= 0 for d in new_dim) and any(new_dim):
            # Wrapped to a shifted projective; its value must be an initial x_i.
            idx = proj_dims.get(new_dim)
            if idx is None or new_value != LaurentPoly.variable(idx, n):
                raise AssertionError("knitting wrapped to an unexpected node")
            finished[c] = True
        else:
            support = frozenset(
                v for v in range(1, n + 1) if new_dim[v - 1] == 1
            )
            if sorted(new_dim) != sorted(
                [1] * len(support) + [0] * (n - len(support))
            ):
                raise AssertionError(f"non-thin knitted dimension {new_dim}")
            table[ModuleDesc(q, support=support)] = new_value
            produced += 1
    if produced != expected:
        raise AssertionError(
            f"knitted {produced} modules, expected {expected}"
        )
    return table


def full_character_table(q):
    """char_frieze for type A; falls back to recursions elsewhere (unused by
    the core flows, which are all type A)."""
    try:
        path_order(q)
    except NotTypeA:
        raise
    return char_frieze(q)


def char_of_literal(q, literal, table=None):
    """Character of a module literal; sums like 'M[1,1]+M[3,3]' multiply.

    On non-type-A acyclic quivers only the index literals P[i], I[i], S[i]
    make sense (modules need not be thin there); they route through the
    recursions instead of module descriptors.
    """
    from quiverlab.repmod import is_type_a, parse_module_literal

    parts = [p.strip().replace(" ", "") for p in literal.split("+") if p.strip()]
    if not is_type_a(q):
        total = LaurentPoly.constant(1, q.n)
        for part in parts:
            if part.startswith("P[") and part.endswith("][1]"):
                total = total * LaurentPoly.variable(int(part[2:-4]), q.n)
            elif part.startswith("P[") and part.endswith("]"):
                total = total * char_projective(q, int(part[2:-1]))
            elif part.startswith("I[") and part.endswith("]"):
                total = total * char_injective(q, int(part[2:-1]))
            elif part.startswith("S[") and part.endswith("]"):
                total = total * char_simple(q, int(part[2:-1]))
            else:
                raise NotTypeA(
                    f"literal {part!r} needs a type-A quiver; use P/I/S indices"
                )
        return total
    descs = [parse_module_literal(q, p) for p in parts]
    if len(descs) == 1:
        d = descs[0]
        if table is not None and d in table:
            return table[d]
        return char_submodule(d)
    return char_direct_sum(descs, table)
