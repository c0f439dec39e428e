import itertools

import pytest

from quiverlab import character as C
from quiverlab import repmod as R
from quiverlab import silting as S
from quiverlab._linalg import det
from quiverlab.errors import NotAFace
from quiverlab.laurent import LaurentPoly as L
from quiverlab.quiver import fan_quiver, from_arrows, linear_quiver
from quiverlab.seed import exchange_graph


def all_orientations(n):
    if n == 1:
        return [linear_quiver(1)]
    out = []
    for bits in itertools.product([0, 1], repeat=n - 1):
        arrows = [
            (i + 1, i + 2) if bit else (i + 2, i + 1)
            for i, bit in enumerate(bits)
        ]
        out.append(from_arrows(n, arrows))
    return out


# -- compatibility rules --------------------------------------------------------

def test_simples_extension_not_compatible():
    lin = linear_quiver(3)
    assert not S.is_compatible(R.simple_module(lin, 1), R.simple_module(lin, 2))


def test_shifted_module_compatibility():
    lin = linear_quiver(3)
    assert S.is_compatible(R.shifted_projective(lin, 2), R.simple_module(lin, 1))
    assert not S.is_compatible(
        R.shifted_projective(lin, 1), R.projective_module(lin, 2)
    )


def test_shifted_shifted_compatibility():
    lin = linear_quiver(3)
    assert S.is_compatible(
        R.shifted_projective(lin, 1), R.shifted_projective(lin, 2)
    )
    assert not S.is_compatible(
        R.shifted_projective(lin, 1), R.shifted_projective(lin, 1)
    )


# -- graphs -----------------------------------------------------------------------

def test_module_graph_linear_a3_tilting_triangles():
    graph = S.compatibility_graph(linear_quiver(3), extended=False)
    triangles = 0
    verts = graph.vertices
    for i, a in enumerate(verts):
        for j in range(i + 1, len(verts)):
            for k in range(j + 1, len(verts)):
                b, c = verts[j], verts[k]
                if (
                    graph.are_adjacent(a, b)
                    and graph.are_adjacent(a, c)
                    and graph.are_adjacent(b, c)
                ):
                    triangles += 1
    assert triangles == 5


def test_a1_extended_graph_no_edges():
    graph = S.compatibility_graph(linear_quiver(1))
    assert len(graph.vertices) == 2
    assert not graph.edges


def test_extended_a3_has_14_triangles():
    graph = S.compatibility_graph(linear_quiver(3))
    cliques = [c for c in S.maximal_cliques(graph) if len(c) == 3]
    assert len(cliques) == 14


# -- silting pairs -----------------------------------------------------------------

def test_silting_counts_catalan():
    assert len(S.silting_pairs(linear_quiver(1))) == 2
    assert len(S.silting_pairs(linear_quiver(2))) == 5
    assert len(S.silting_pairs(linear_quiver(3))) == 14
    assert len(S.silting_pairs(fan_quiver(3))) == 14
    assert len(S.silting_pairs(linear_quiver(4))) == 42


def test_all_maximal_cliques_have_size_n():
    for q in (linear_quiver(3), fan_quiver(3), linear_quiver(4)):
        graph = S.compatibility_graph(q)
        assert all(len(c) == q.n for c in S.maximal_cliques(graph))


def test_pure_shifted_pair_present():
    for q in (linear_quiver(3), fan_quiver(3)):
        pairs = S.silting_pairs(q)
        assert any(
            not p.modules and p.shifted == frozenset(range(1, q.n + 1))
            for p in pairs
        )


def test_simples_and_shifted_pair_present():
    lin = linear_quiver(3)
    target = S.SiltingPair(
        frozenset({R.simple_module(lin, 1), R.simple_module(lin, 3)}),
        frozenset({2}),
    )
    assert target in S.silting_pairs(lin)


def test_support_tilting_pairs_present():
    lin = linear_quiver(3)
    pairs = S.silting_pairs(lin)
    # (P_1 + P_2, P_3) and (S_1, P_2 + P_3) from the worked examples.
    p1, p2 = R.projective_module(lin, 1), R.projective_module(lin, 2)
    assert S.SiltingPair(frozenset({p1, p2}), frozenset({3})) in pairs
    s1 = R.simple_module(lin, 1)
    assert S.SiltingPair(frozenset({s1}), frozenset({2, 3})) in pairs


def test_tilting_modules():
    assert len(S.tilting_modules(linear_quiver(3))) == 5
    assert len(S.tilting_modules(linear_quiver(2))) == 2
    assert len(S.tilting_modules(linear_quiver(1))) == 1
    a2 = linear_quiver(2)
    literals = {p.literal() for p in S.tilting_modules(a2)}
    assert literals == {"T=[M[1,1],M[1,2]];P=[]", "T=[M[1,2],M[2,2]];P=[]"}


# -- exchange of summands --------------------------------------------------------------

def test_complete_almost_exchange_example():
    lin = linear_quiver(3)
    pair = S.SiltingPair(
        frozenset({R.simple_module(lin, 1), R.simple_module(lin, 3)}),
        frozenset({2}),
    )
    removed, other = S.complete_almost(lin, pair, R.shifted_projective(lin, 2))
    assert removed == R.shifted_projective(lin, 2)
    assert other == R.projective_module(lin, 3)


def test_complete_almost_roundtrip():
    lin = linear_quiver(3)
    for pair in S.silting_pairs(lin):
        for member in pair.members(lin):
            removed, other = S.complete_almost(lin, pair, member)
            assert removed == member
            assert other != member


def test_complete_almost_a2():
    a2 = linear_quiver(2)
    pair = S.SiltingPair(
        frozenset({R.simple_module(a2, 1), R.interval_module(a2, 1, 2)}),
        frozenset(),
    )
    _, other = S.complete_almost(a2, pair, R.simple_module(a2, 1))
    assert other == R.simple_module(a2, 2)


def test_complete_almost_not_a_member():
    lin = linear_quiver(3)
    pair = S.silting_pairs(lin)[0]
    with pytest.raises(NotAFace):
        S.complete_almost(lin, pair, R.interval_module(lin, 1, 3))


# -- cluster map -------------------------------------------------------------------------

def test_silting_to_cluster_initial():
    lin = linear_quiver(3)
    table = C.char_frieze(lin)
    pair = S.SiltingPair(frozenset(), frozenset({1, 2, 3}))
    cluster = S.silting_to_cluster(lin, pair, table)
    assert cluster == {L.variable(i, 3) for i in (1, 2, 3)}


def test_silting_to_cluster_mixed_pair():
    lin = linear_quiver(3)
    table = C.char_frieze(lin)
    pair = S.SiltingPair(
        frozenset({R.simple_module(lin, 1), R.simple_module(lin, 3)}),
        frozenset({2}),
    )
    cluster = S.silting_to_cluster(lin, pair, table)
    assert cluster == {
        table[R.simple_module(lin, 1)],
        table[R.simple_module(lin, 3)],
        L.variable(2, 3),
    }


def test_bijection_with_exchange_graph():
    for q in all_orientations(3) + [linear_quiver(2), linear_quiver(4)]:
        table = C.char_frieze(q)
        graph = exchange_graph(q)
        images = set()
        for pair in S.silting_pairs(q):
            cluster = S.silting_to_cluster(q, pair, table)
            images.add(frozenset(v.render() for v in cluster))
        assert len(images) == len(S.silting_pairs(q))  # injective
        assert images == set(graph.nodes)  # onto the exchange graph


# -- linear algebra invariants --------------------------------------------------------------

def test_g_matrix_independence():
    for q in all_orientations(3) + [linear_quiver(4)]:
        for pair in S.silting_pairs(q):
            assert det(pair.g_matrix(q)) != 0


def test_g_vector_sign_coherence():
    for q in all_orientations(3) + [linear_quiver(4)]:
        for pair in S.silting_pairs(q):
            vectors = [m.g_vec() for m in pair.members(q)]
            for row in range(q.n):
                entries = [v[row] for v in vectors]
                assert not (
                    any(e > 0 for e in entries) and any(e < 0 for e in entries)
                )


def test_sign_coherence_worked_example():
    lin = linear_quiver(3)
    pair = S.SiltingPair(
        frozenset(
            {
                R.injective_module(lin, 2),
                R.simple_module(lin, 2),
                R.projective_module(lin, 3),
            }
        ),
        frozenset(),
    )
    columns = {m.g_vec() for m in pair.members(lin)}
    assert columns == {(-1, 0, 1), (-1, 1, 0), (0, 0, 1)}


def test_rigid_bound():
    for q in all_orientations(3):
        graph = S.compatibility_graph(q)
        assert max(len(c) for c in S.maximal_cliques(graph)) <= q.n


def test_pair_literal_roundtrip():
    lin = linear_quiver(3)
    for pair in S.silting_pairs(lin):
        assert S.parse_pair_literal(lin, pair.literal()) == pair
