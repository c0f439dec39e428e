import itertools

import pytest

from quiverlab import character as C
from quiverlab import repmod as R
from quiverlab.errors import InfiniteLattice
from quiverlab.laurent import LaurentPoly as L
from quiverlab.quiver import fan_quiver, from_arrows, linear_quiver
from quiverlab.seed import initial_seed, mutate_seed


def kronecker():
    return from_arrows(2, [(2, 1), (2, 1)])


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


# -- submodule formula -----------------------------------------------------------

def test_char_s1_fan():
    chi = C.char_submodule(R.simple_module(fan_quiver(3), 1))
    assert chi == L.parse("(x2*x3 + 1)/x1", 3)


def test_char_p3_fan():
    chi = C.char_submodule(R.projective_module(fan_quiver(3), 3))
    assert chi == L.parse("x2/x1 + 1/(x1*x3) + 1/x3", 3)


def test_char_shifted_is_initial_variable():
    q = linear_quiver(3)
    assert C.char_submodule(R.shifted_projective(q, 2)) == L.variable(2, 3)


def test_char_submodule_sum_infinite():
    a2 = linear_quiver(2)
    s2 = R.simple_module(a2, 2)
    with pytest.raises(InfiniteLattice):
        C.char_submodule([s2, s2])


def test_char_submodule_disjoint_sum_matches_product():
    a3 = linear_quiver(3)
    s1, s3 = R.simple_module(a3, 1), R.simple_module(a3, 3)
    assert C.char_submodule([s1, s3]) == C.char_submodule(s1) * C.char_submodule(s3)


# -- recursions --------------------------------------------------------------------

def test_char_projective_linear():
    lin = linear_quiver(3)
    assert C.char_projective(lin, 2) == L.parse("(x2*x3 + x3 + x1)/(x1*x2)", 3)
    # Denominator theorem forces x1*x2*x3 here.
    assert C.char_projective(lin, 3) == L.parse(
        "(x2*x3 + x3 + x1 + x1*x2)/(x1*x2*x3)", 3
    )


def test_char_projective_simple_grounds_at_submodule_formula():
    for q in all_orientations(3):
        for i in range(1, 4):
            p = R.projective_module(q, i)
            if len(p.support) == 1:
                assert C.char_projective(q, i) == C.char_submodule(p)


def test_char_injective_kronecker():
    kr = kronecker()
    assert C.char_injective(kr, 2) == L.parse("(x1^2 + 1)/x2", 2)
    assert C.char_injective(kr, 1) == L.parse(
        "(x1^4 + 2*x1^2 + x2^2 + 1)/(x1*x2^2)", 2
    )


def test_recursions_match_submodule_formula_type_a():
    for q in all_orientations(4):
        for i in range(1, 5):
            assert C.char_projective(q, i) == C.char_submodule(
                R.projective_module(q, i)
            )
            assert C.char_injective(q, i) == C.char_submodule(
                R.injective_module(q, i)
            )


# -- multiplicativity ----------------------------------------------------------------

def test_char_direct_sum_kronecker_grassmannian():
    # chi(S_2 + S_2) on A2 at all-ones: 1 + 2 + 1 submodule strata.
    a2 = linear_quiver(2)
    s2 = R.simple_module(a2, 2)
    chi = C.char_direct_sum([s2, s2])
    assert chi.eval_at((1, 1)) == 4
    # The middle stratum coefficient is the Euler characteristic 2.
    assert chi == C.char_submodule(s2) * C.char_submodule(s2)


def test_char_direct_sum_single():
    a2 = linear_quiver(2)
    p2 = R.interval_module(a2, 1, 2)
    assert C.char_direct_sum([p2]) == C.char_submodule(p2)


def test_char_direct_sum_table_entries():
    a2 = linear_quiver(2)
    table = C.char_frieze(a2)
    p1, p2 = R.projective_module(a2, 1), R.projective_module(a2, 2)
    assert C.char_direct_sum([p1, p2], table) == table[p1] * table[p2]


# -- quiver Grassmannian counts --------------------------------------------------------

def test_gr_euler_endpoints():
    m = R.projective_module(linear_quiver(3), 3)
    assert C.gr_euler(m, (0, 0, 0)) == 1
    assert C.gr_euler(m, (1, 1, 1)) == 1
    assert C.gr_euler(m, (1, 1, 0)) == 1
    assert C.gr_euler(m, (0, 1, 0)) == 0


def test_gr_euler_sums_to_evaluation_at_ones():
    for q in all_orientations(3):
        for m in R.interval_modules(q):
            total = sum(
                C.gr_euler(m, e)
                for e in itertools.product([0, 1], repeat=3)
            )
            assert total == C.char_submodule(m).eval_at((1, 1, 1))


# -- frieze knitting ---------------------------------------------------------------

def test_frieze_a1():
    table = C.char_frieze(linear_quiver(1))
    q = linear_quiver(1)
    assert table[R.simple_module(q, 1)] == L.parse("2/x1", 1)
    assert table[R.shifted_projective(q, 1)] == L.variable(1, 1)


def test_frieze_a2_values():
    a2 = linear_quiver(2)
    table = C.char_frieze(a2)
    assert table[R.simple_module(a2, 1)] == L.parse("(x2+1)/x1", 2)
    assert table[R.interval_module(a2, 1, 2)] == L.parse("(x2+1+x1)/(x1*x2)", 2)
    assert table[R.simple_module(a2, 2)] == L.parse("(1+x1)/x2", 2)


def test_frieze_linear_a3_at_ones():
    lin = linear_quiver(3)
    table = C.char_frieze(lin)
    counts = {
        desc.literal(): int(poly.eval_at((1, 1, 1)))
        for desc, poly in table.items()
        if not desc.is_shifted
    }
    assert counts == {
        "M[1,1]": 2,
        "M[1,2]": 3,
        "M[1,3]": 4,
        "M[2,2]": 2,
        "M[2,3]": 3,
        "M[3,3]": 2,
    }


def test_frieze_agrees_with_submodule_formula_small():
    for n in range(1, 5):
        for q in all_orientations(n):
            table = C.char_frieze(q)
            for m in R.interval_modules(q):
                assert table[m] == C.char_submodule(m), (q, m)


def test_denominator_theorem():
    # Every non-initial entry is f / x^{dim M} with positive coefficients.
    for q in all_orientations(4):
        table = C.char_frieze(q)
        for desc, poly in table.items():
            if desc.is_shifted:
                continue
            mins = poly.min_exponents()
            assert tuple(-m for m in mins) == desc.dim_vector()
            assert all(c > 0 for c in poly.coefficients())


def test_almost_split_relation():
    # chi(A) chi(C) = chi(B) + 1 over every mesh of the knitted AR quiver.
    for q in all_orientations(4):
        table = C.char_frieze(q)
        ar = R.ar_quiver(q)

        def value(node):
            return table[node.desc]

        for start, middles, end in ar.meshes():
            product = L.constant(1, q.n)
            for m in middles:
                product = product * value(ar.nodes[m])
            lhs = value(ar.nodes[start]) * value(ar.nodes[end])
            assert lhs == product + 1


def test_unimodular_frieze_mesh_determinant():
    # At all-ones each mesh satisfies chi(A) chi(C) - chi(B1) chi(B2) = 1.
    lin = linear_quiver(3)
    table = C.char_frieze(lin)
    ar = R.ar_quiver(lin)
    ones = (1, 1, 1)
    for start, middles, end in ar.meshes():
        a = table[ar.nodes[start].desc].eval_at(ones)
        c = table[ar.nodes[end].desc].eval_at(ones)
        b = 1
        for m in middles:
            b *= table[ar.nodes[m].desc].eval_at(ones)
        assert a * c - b == 1


def test_mutation_agreement_simples():
    # char_submodule(S_k) equals the Def-2.4 mutation at k of the initial seed.
    for q in all_orientations(4) + [fan_quiver(3)]:
        s = initial_seed(q)
        for k in range(1, q.n + 1):
            mutated = mutate_seed(s, k)
            assert mutated.cluster[k - 1] == C.char_submodule(
                R.simple_module(q, k)
            )


def test_evaluation_at_ones_counts_submodules():
    for q in all_orientations(4):
        for m in R.interval_modules(q):
            count = len(R.submodule_dims(m))
            assert C.char_submodule(m).eval_at((1,) * q.n) == count


def test_table_json_map():
    table = C.char_frieze(linear_quiver(2))
    mapping = table.to_json_map()
    assert mapping["M[1,1]"] == "(x2 + 1)/x1"
    assert mapping["P[1][1]"] == "x1"
