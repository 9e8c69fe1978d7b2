import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mfmckit.linalg import (
    det,
    dot,
    fraction_vector_to_normal,
    primitive,
    rank,
    smith_invariant_factors,
    solve_square,
)

from oracles import frac_det, frac_rank, frac_solve, snf_by_minors

small_int = st.integers(min_value=-6, max_value=6)


def square(n, seed):
    rng = random.Random(seed)
    return [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]


def test_dot():
    assert dot((1, 2, 3), (4, 5, 6)) == 32
    assert dot((), ()) == 0


def test_primitive_reduces_gcd():
    assert primitive((2, 4, -6)) == (1, 2, -3)
    assert primitive((0, 0, 5)) == (0, 0, 1)
    assert primitive((-3,)) == (-1,)  # direction kept, length normalized
    with pytest.raises(ValueError):
        primitive((0, 0))


def test_solve_square_matches_rational_elimination():
    for seed in range(60):
        n = seed % 4 + 1
        rows = square(n, seed)
        rhs = [random.Random(seed + 1000).randint(-5, 5) for _ in range(n)]
        assert solve_square(rows, rhs) == frac_solve(rows, rhs)


def test_solve_square_singular():
    assert solve_square([[1, 2], [2, 4]], [1, 1]) is None


def test_solve_square_exact_fractions():
    sol = solve_square([[2, 0], [0, 4]], [1, 1])
    assert sol == (Fraction(1, 2), Fraction(1, 4))


def test_rank_against_rational_elimination():
    for seed in range(80):
        rng = random.Random(seed)
        rows = [[rng.randint(-3, 3) for _ in range(rng.randint(1, 5))]]
        w = len(rows[0])
        for _ in range(rng.randint(0, 4)):
            rows.append([rng.randint(-3, 3) for _ in range(w)])
        assert rank(rows) == frac_rank(rows)


def test_det_against_rational_elimination():
    for seed in range(80):
        n = seed % 5 + 1
        rows = square(n, seed)
        assert det(rows) == int(frac_det(rows))


def test_det_known_values():
    assert det([[2]]) == 2
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[0, 1], [1, 0]]) == -1


def test_smith_single_lifted_column():
    # one generator x1 lifted: column (1, 1)
    assert smith_invariant_factors([[1], [1]]) == (1,)


def test_smith_degenerate_column():
    # column (2, 1): entries are coprime
    assert smith_invariant_factors([[2], [1]]) == (1,)


def test_smith_diag_and_torsion():
    assert smith_invariant_factors([[2, 0], [0, 3]]) == (1, 6)
    assert smith_invariant_factors([[2, 0], [0, 2]]) == (2, 2)
    assert smith_invariant_factors([[0, 0], [0, 0]]) == ()


def test_smith_against_minor_gcds():
    for seed in range(120):
        rng = random.Random(seed)
        m, w = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-4, 4) for _ in range(w)] for _ in range(m)]
        assert tuple(sorted(smith_invariant_factors(rows))) == snf_by_minors(rows)


def test_smith_divisibility_chain():
    for seed in range(60):
        rng = random.Random(seed + 500)
        rows = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(4)]
        facs = smith_invariant_factors(rows)
        assert all(b % a == 0 for a, b in zip(facs, facs[1:]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small_int, min_size=3, max_size=3), min_size=1, max_size=4),
       st.randoms(use_true_random=False))
def test_smith_permutation_invariant(rows, rng):
    base = tuple(sorted(smith_invariant_factors(rows)))
    shuffled = list(rows)
    rng.shuffle(shuffled)
    cols = list(range(3))
    rng.shuffle(cols)
    permuted = [[r[c] for c in cols] for r in shuffled]
    assert tuple(sorted(smith_invariant_factors(permuted))) == base


def test_fraction_vector_to_normal():
    nums, b = fraction_vector_to_normal((Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))
    assert (nums, b) == ((1, 1, 1), 2)
    nums, b = fraction_vector_to_normal((Fraction(1), Fraction(0)))
    assert (nums, b) == ((1, 0), 1)
    nums, b = fraction_vector_to_normal((Fraction(2, 3), Fraction(1, 2)))
    assert (nums, b) == ((4, 3), 6)
