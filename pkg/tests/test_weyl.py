import random

import pytest

from oddsymp.weights import (
    Partition,
    SignedPermutation,
    coset_reps_WP,
    dot_action,
    kostant_cohomology,
    partitions,
    rho,
    symbolic_dot_action,
    trivial_summand_degrees,
)
from oddsymp.weights.weyl import (
    all_weights_dominant,
    brute_force_coset_lengths,
    is_wp_condition,
    lengths_by_bfs,
)


def test_rho():
    assert rho(3) == (3, 2, 1)
    with pytest.raises(ValueError):
        rho(0)


def test_group_size_and_inverse():
    for n in range(1, 4):
        elems = SignedPermutation.all(n)
        assert len(set(elems)) == 2**n * [1, 1, 2, 6][n]
        e = SignedPermutation.identity(n)
        for w in elems:
            assert w * w.inverse() == e


def test_rejects_non_permutations():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))
    with pytest.raises(ValueError):
        SignedPermutation((1, 3))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_length_formula_matches_word_length(n):
    for w, length in lengths_by_bfs(n).items():
        assert w.length() == length


def test_longest_element():
    for n in range(1, 5):
        w0 = SignedPermutation(tuple(-i for i in range(1, n + 1)))
        assert w0.length() == n * n


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coset_representatives(n):
    reps = coset_reps_WP(n)
    assert len(reps) == 2 * n
    # Poincare polynomial of the quotient is 1 + t + ... + t^(2n-1)
    assert [r.length for r in reps] == list(range(2 * n))
    assert [r.length for r in reps] == brute_force_coset_lengths(n)
    assert all(is_wp_condition(r.c) for r in reps)
    assert len({r.w.images[0] for r in reps}) == 2 * n


def test_dot_action_is_an_action():
    rng = random.Random(3)
    for n in (2, 3, 4):
        elems = SignedPermutation.all(n)
        for _ in range(100):
            u, v = rng.choice(elems), rng.choice(elems)
            lam = tuple(rng.randint(-3, 5) for _ in range(n))
            assert dot_action(u * v, lam) == dot_action(u, dot_action(v, lam))


def test_rank_two_table_by_hand():
    # lam = 0: w^-1 . 0 = w^-1(rho) - rho = c - rho
    rows = kostant_cohomology((0, 0), 2)
    assert [r.c for r in rows] == [(2, 1), (1, 2), (-1, 2), (-2, 1)]
    assert [r.length for r in rows] == [0, 1, 2, 3]
    assert [r.levi_weight for r in rows] == [(0,), (1,), (1,), (0,)]
    assert trivial_summand_degrees((0, 0), 2) == [0, 3]


def test_symbolic_rank_five_example():
    c = (-3, 5, 4, 2, 1)
    w = SignedPermutation.sending(rho(5), c).inverse()
    assert w.inverse().act(rho(5)) == c
    expr = symbolic_dot_action(w.inverse())
    assert expr == ("-8-λ3", "1+λ1", "1+λ2", "λ4", "λ5")
    # evaluate the expressions against the numeric dot action
    lam = (7, 5, 4, 2, 1)
    names = {f"L{i + 1}": x for i, x in enumerate(lam)}
    values = tuple(eval(e.replace("λ", "L"), {}, names) for e in expr)
    assert values == dot_action(w.inverse(), lam)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_levi_weights_dominant(n):
    for size in range(0, 6):
        for lam in partitions(size, max_length=n):
            rows = kostant_cohomology(lam, n)
            assert all_weights_dominant(rows)
            assert len(rows) == 2 * n


def test_trivial_summands_only_for_short_partitions():
    for n in range(1, 5):
        assert trivial_summand_degrees(Partition(()), n) == [0, 2 * n - 1]
        assert trivial_summand_degrees(Partition((3,)), n) == [0, 2 * n - 1]
        if n >= 2:
            assert trivial_summand_degrees(Partition((1, 1)), n) == []


def test_non_dominant_input_rejected():
    with pytest.raises(ValueError):
        kostant_cohomology((0, 1), 2)
    with pytest.raises(ValueError):
        kostant_cohomology((1,), 2)


def test_row_serialisation():
    row = kostant_cohomology("1", 2)[1]
    assert row.as_dict()["degree"] == 1
