import random

import pytest

from quiverlab import mgs as M
from quiverlab.errors import BadDirection, NZViolation, SignIncoherent
from quiverlab.quiver import (
    fan_quiver,
    from_arrows,
    linear_quiver,
    to_exchange_matrix,
)


def a2_forward():
    return from_arrows(2, [(1, 2)])


# -- framed matrices --------------------------------------------------------------

def test_framed_initial():
    f = M.framed([[0, 1], [-1, 0]])
    assert f.top == ((0, 1), (-1, 0))
    assert f.cmat == ((1, 0), (0, 1))
    assert M.c_vectors(f) == [(1, 0), (0, 1)]


def test_framed_zero_matrix():
    f = M.framed([[0, 0], [0, 0]])
    assert f.cmat == ((1, 0), (0, 1))


def test_initial_c_vectors_are_units():
    for q in (a2_forward(), linear_quiver(4)):
        f = M.framed(to_exchange_matrix(q))
        assert M.c_vectors(f) == [
            tuple(1 if i == j else 0 for i in range(q.n)) for j in range(q.n)
        ]


def test_c_vectors_after_mu1():
    f = M.mutate_framed(M.framed(to_exchange_matrix(a2_forward())), 1)
    assert M.c_vectors(f) == [(-1, 0), (1, 1)]
    assert M.green_vertices(f) == {2}
    assert M.red_vertices(f) == {1}


def test_all_red_terminal():
    b = to_exchange_matrix(a2_forward())
    state = M.framed(b)
    for k in (1, 2, 1):
        state = M.mutate_framed(state, k)
    assert M.red_vertices(state) == {1, 2}
    assert not M.green_vertices(state)


def test_green_initial_all():
    f = M.framed(to_exchange_matrix(linear_quiver(3)))
    assert M.green_vertices(f) == {1, 2, 3}


def test_mutate_framed_involutive():
    f = M.framed(to_exchange_matrix(linear_quiver(3)))
    g = M.mutate_framed(M.mutate_framed(f, 2), 2)
    assert g == f


def test_mutate_framed_bad_direction():
    with pytest.raises(BadDirection):
        M.mutate_framed(M.framed([[0]]), 2)


def test_sign_incoherent_rejected():
    with pytest.raises(SignIncoherent):
        M.FramedMatrix(((0, 1), (-1, 0)), ((1, 0), (-1, 1))).column_signs()


# -- the A2 chain bit-for-bit --------------------------------------------------------

def test_a2_chain_matches_worked_example():
    b = to_exchange_matrix(a2_forward())
    trace = M.replay(b, [1, 2, 1])
    assert [t.stacked() for t in trace] == [
        [[0, 1], [-1, 0], [1, 0], [0, 1]],
        [[0, -1], [1, 0], [-1, 1], [0, 1]],
        [[0, 1], [-1, 0], [0, -1], [1, -1]],
        [[0, -1], [1, 0], [0, -1], [-1, 0]],
    ]


def test_a2_second_sequence_matrices():
    b = to_exchange_matrix(a2_forward())
    trace = M.replay(b, [2, 1])
    assert [t.stacked() for t in trace] == [
        [[0, 1], [-1, 0], [1, 0], [0, 1]],
        [[0, -1], [1, 0], [1, 0], [0, -1]],
        [[0, 1], [-1, 0], [-1, 0], [0, -1]],
    ]


# -- search -----------------------------------------------------------------------------

def test_find_mgs_a2():
    result = M.find_mgs(to_exchange_matrix(a2_forward()))
    assert result.sequences == [[1, 2, 1], [2, 1]]
    assert result.complete


def test_find_mgs_n1():
    result = M.find_mgs([[0]])
    assert result.sequences == [[1]]
    assert result.complete


def test_find_mgs_budget():
    result = M.find_mgs(to_exchange_matrix(linear_quiver(3)), max_depth=2)
    assert not result.complete


def test_engines_agree():
    for q in (a2_forward(), linear_quiver(3), fan_quiver(3)):
        matrix_counts = M.find_mgs(to_exchange_matrix(q))
        quiver_counts = M.find_mgs_quiver_engine(q)
        assert matrix_counts.sequences == quiver_counts.sequences
        assert matrix_counts.complete and quiver_counts.complete


def test_engines_agree_state_by_state():
    q = a2_forward()
    fq = M.FramedQuiver.initial(q)
    fm = M.framed(to_exchange_matrix(q))
    assert fq.to_framed_matrix() == fm
    for k in (1, 2, 1):
        fq = fq.mutate(k)
        fm = M.mutate_framed(fm, k)
        assert fq.to_framed_matrix() == fm


def test_framed_quiver_after_mu1_matches_figure():
    # Frozen-vertex picture: 1' is vertex 3, 2' is vertex 4.
    fq = M.FramedQuiver.initial(a2_forward()).mutate(1)
    assert fq.arrows == ((1, 3), (2, 1), (3, 2), (4, 2))


def test_sequences_are_maximal_and_green():
    b = to_exchange_matrix(linear_quiver(3))
    result = M.find_mgs(b)
    assert result.complete
    for sequence in result.sequences:
        assert M.is_green_sequence(b, sequence)
        # Every proper prefix still has a green vertex.
        state = M.framed(b)
        for k in sequence[:-1]:
            state = M.mutate_framed(state, k)
            assert M.green_vertices(state)


def test_a3_count_fixed_by_both_engines():
    # Exhaustive counts, frozen after the two independent engines agreed.
    assert len(M.find_mgs(to_exchange_matrix(linear_quiver(3))).sequences) == 9
    assert len(M.find_mgs_quiver_engine(linear_quiver(3)).sequences) == 9
    assert len(M.find_mgs(to_exchange_matrix(fan_quiver(3))).sequences) == 10


def test_enumeration_finite_up_to_a4():
    # Dynkin quivers enumerate completely with the default budget.
    for n in range(1, 5):
        result = M.find_mgs(to_exchange_matrix(linear_quiver(n)))
        assert result.complete
    a4 = M.find_mgs(to_exchange_matrix(linear_quiver(4)))
    assert len(a4.sequences) == 98  # frozen after both engines agreed
    assert M.find_mgs_quiver_engine(linear_quiver(4)).sequences == a4.sequences


# -- sign coherence ------------------------------------------------------------------

def test_sign_coherence_random_walks():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.choice([2, 3, 4])
        arrows = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if rng.random() < 0.5:
                    pair = (i, j) if rng.random() < 0.5 else (j, i)
                    arrows.append(pair)
        state = M.framed(to_exchange_matrix(from_arrows(n, arrows)))
        for _ in range(10):
            state = M.mutate_framed(state, rng.randrange(1, n + 1))
            state.column_signs()  # raises SignIncoherent on violation


# -- NZ duality ----------------------------------------------------------------------

def test_nz_initial_state():
    q = linear_quiver(3)
    report = M.check_nz(q, M.framed(to_exchange_matrix(q)))
    assert report.g_matrix == [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]
    assert not report.pair.modules
    assert report.pair.shifted == frozenset({1, 2, 3})


def test_nz_a2_after_mu1():
    q = a2_forward()
    f = M.mutate_framed(M.framed(to_exchange_matrix(q)), 1)
    report = M.check_nz(q, f)
    dims = {(tuple(c), lit) for c, _, lit in report.cvector_dims}
    assert dims == {((-1, 0), "M[1,1]"), ((1, 1), "M[1,2]")}


def test_nz_along_every_a2_a3_sequence():
    for q in (a2_forward(), linear_quiver(3), fan_quiver(3)):
        b = to_exchange_matrix(q)
        result = M.find_mgs(b)
        assert result.complete
        for sequence in result.sequences:
            for state in M.replay(b, sequence):
                M.check_nz(q, state)  # raises NZViolation on failure


def test_nz_facets_lie_on_cvector_walls():
    # NZ part 2: the g-vectors of the members other than j lie on the wall of
    # the module whose dimension vector is +/- c_j.
    from quiverlab import stability as ST

    q = linear_quiver(3)
    walls_by_dim = {w.normal: w for w in ST.walls(q)}
    b = to_exchange_matrix(q)
    for sequence in M.find_mgs(b).sequences:
        for state in M.replay(b, sequence):
            report = M.check_nz(q, state)
            n = q.n
            for j, (c, _, _) in enumerate(report.cvector_dims):
                wall = walls_by_dim[tuple(abs(v) for v in c)]
                for i in range(n):
                    if i == j:
                        continue
                    g_col = tuple(report.g_matrix[r][i] for r in range(n))
                    assert wall.contains(g_col)


def test_nz_violation_on_cooked_state():
    q = linear_quiver(2)
    fake = M.FramedMatrix(((0, 1), (-1, 0)), ((2, 0), (0, 1)))
    with pytest.raises(NZViolation):
        M.check_nz(q, fake)
