import itertools

import pytest

from quiverlab import barcode as B
from quiverlab import repmod as R
from quiverlab.quiver import linear_quiver


def test_decomposition_342():
    code = B.stable_barcode((3, 4, 2))
    assert code.intervals == ((1, 2, 1), (1, 3, 2), (2, 2, 1))
    assert code.literal() == "M[1,2] + 2*M[1,3] + M[2,2]"


def test_zero_vector():
    code = B.stable_barcode((0, 0, 0))
    assert code.intervals == ()
    assert code.literal() == "0"


def test_a2_example():
    code = B.stable_barcode((1, 2))
    assert code.bars_expanded() == [(1, 2), (2, 2)]


def test_multiplicity_accounting():
    for v in [(3, 4, 2), (1, 0, 2, 1), (2, 2, 2)]:
        code = B.stable_barcode(v)
        for i, target in enumerate(v):
            covering = sum(
                mult for a, b, mult in code.intervals if a <= i + 1 <= b
            )
            assert covering == target


def test_interval_ext_cases():
    assert B.interval_ext_nonzero(2, 3, 1, 2)  # a < c <= b < d
    assert B.interval_ext_nonzero(3, 3, 1, 2)  # b + 1 = c
    assert not B.interval_ext_nonzero(1, 1, 2, 3)
    with pytest.raises(ValueError):
        B.interval_ext_nonzero(2, 1, 1, 1)


def test_barcode_is_rigid():
    for n in range(1, 7):
        for v in itertools.product(range(6), repeat=n):
            if sum(v) == 0 or sum(v) > 9:
                continue
            bars = B.stable_barcode(v).bars_expanded()
            assert B.is_rigid_multiset(bars), v


def test_uniqueness_exhaustive_small():
    # Exactly one rigid interval multiset per dimension vector.
    for n in range(1, 5):
        for v in itertools.product(range(4), repeat=n):
            if not any(v):
                continue
            rigid = [
                sorted(bars)
                for bars in B.all_interval_multisets(v)
                if B.is_rigid_multiset(bars)
            ]
            assert len(rigid) == 1, v
            assert rigid[0] == sorted(B.stable_barcode(v).bars_expanded())


def test_ext_rule_agrees_with_repmod():
    for n in range(1, 7):
        q = linear_quiver(n)
        intervals = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
        for c, d in intervals:
            for a, b in intervals:
                lemma = B.interval_ext_nonzero(c, d, a, b)
                value = R.ext_dim(
                    R.interval_module(q, c, d), R.interval_module(q, a, b)
                )
                assert (value > 0) == lemma


def test_svg_render():
    svg = B.barcode_svg((3, 4, 2))
    assert svg.startswith("<svg")
    assert svg.count('stroke-width="3"') == 4  # one bar per expanded interval
