from collections import Counter
from itertools import product
from math import factorial

import pytest

from oddsymp.weights import (
    NotACharacter,
    Partition,
    decompose,
    defining_character,
    exterior_multiplicity,
    exterior_power_character,
    invariant_dimension_tensor,
    multiply,
    partitions,
    sp_character,
    sp_shift,
    weyl_dim_sp,
)
from oddsymp.weights.characters import (
    character_dimension,
    double_factorial,
    power,
)
from oddsymp.weights.partitions import partitions_up_to


def king_tableaux_character(lam, n):
    """Sp_2n character from King's symplectic tableaux.

    Letters 1 < 1' < 2 < 2' < ... (encoded 0, 1, 2, 3, ...), rows weakly
    increasing, columns strictly increasing, and row i using no letter
    smaller than i. Letter k contributes +e_k, letter k' contributes -e_k.
    """
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    ch = Counter()
    for filling in product(range(2 * n), repeat=len(cells)):
        t = dict(zip(cells, filling))
        ok = True
        for (i, j), x in t.items():
            if x < 2 * i:
                ok = False
            elif j > 0 and t[(i, j - 1)] > x:
                ok = False
            elif i > 0 and t[(i - 1, j)] >= x:
                ok = False
            if not ok:
                break
        if not ok:
            continue
        w = [0] * n
        for x in filling:
            w[x // 2] += -1 if x % 2 else 1
        ch[tuple(w)] += 1
    return ch


@pytest.mark.parametrize(
    "lam,n",
    [((), 1), ((1,), 1), ((2,), 1), ((3,), 1), ((1,), 2), ((2,), 2), ((1, 1), 2),
     ((2, 1), 2), ((2, 2), 2), ((1,), 3), ((1, 1), 3), ((2, 1), 3), ((1, 1, 1), 3)],
)
def test_character_matches_symplectic_tableaux(lam, n):
    got = {w: m for w, m in sp_character(Partition(lam), n).items() if m}
    assert got == dict(king_tableaux_character(lam, n))


def test_weyl_dimension_examples():
    assert weyl_dim_sp("1", 2) == 4
    assert weyl_dim_sp("1,1", 2) == 5
    assert weyl_dim_sp("2", 2) == 10
    assert weyl_dim_sp("1,1,1", 2) == 0
    assert weyl_dim_sp("", 0) == 1


def test_weyl_dimension_matches_character():
    for n in (1, 2, 3):
        for lam in partitions_up_to(4, max_length=n):
            assert weyl_dim_sp(lam, n) == character_dimension(sp_character(lam, n))


def test_tensor_square_of_defining():
    for n in (2, 3):
        v = defining_character(n)
        dec = decompose(multiply(v, v), n)
        assert dec == Counter({Partition((2,)): 1, Partition((1, 1)): 1, Partition(()): 1})


def test_products_preserve_dimension():
    for n in (2, 3):
        a, b = sp_character("2,1", n), sp_character("1", n)
        prod_ch = multiply(a, b)
        dec = decompose(prod_ch, n)
        assert sum(k * weyl_dim_sp(lam, n) for lam, k in dec.items()) == character_dimension(prod_ch)


def test_decompose_rejects_virtual_characters():
    ch = dict(sp_character("1", 2))
    ch[(0, 0)] = -1
    with pytest.raises(NotACharacter):
        decompose(ch, 2)


def test_invariants_count_perfect_matchings():
    # Brauer: in the stable range the invariants of V^(2s) are matchings
    for n in (1, 2, 3):
        for s in range(1, n + 1):
            assert invariant_dimension_tensor(n, s) == double_factorial(2 * s - 1)
    assert invariant_dimension_tensor(1, 2) == 2  # outside the stable range


def test_exterior_character_dimension():
    for g in (1, 2, 3):
        for r in (1, 2):
            ch = exterior_power_character(g, r)
            full = sum(m * _orbit_size(w) for w, m in ch.items())
            assert full == 2 ** (2 * g * r)


def _orbit_size(w):
    signs = 2 ** sum(1 for x in w if x)
    c = Counter(abs(x) for x in w)
    out = factorial(len(w))
    for k in c.values():
        out //= factorial(k)
    return signs * out


def test_exterior_multiplicities_r1():
    # wedge V = sum over k of wedge^k V; trivial summands sit in even degrees
    for g in (1, 2, 3, 4):
        assert exterior_multiplicity("", g, 1) == g + 1
        assert exterior_multiplicity("1", g, 1) == g
    with pytest.raises(ValueError):
        exterior_multiplicity("1,1", 1, 1)


def test_power_matches_repeated_multiply():
    v = defining_character(2)
    assert power(v, 3, 2) == multiply(multiply(v, v), v)


def branching_failures(max_size=4, max_n=3):
    bad = []
    for n in range(1, max_n + 1):
        for lam in partitions_up_to(max_size):
            left = weyl_dim_sp(lam, n + 1)
            right = sum(k * weyl_dim_sp(mu, n) for mu, k in sp_shift(lam).items())
            if left != right:
                bad.append((lam, n))
    return bad


def test_branching_dimension_identity_where_defined():
    bad = branching_failures()
    # V_lam(n + 1) = 0 once l(lam) > n + 1. Two horizontal strips shorten a
    # partition by at most two rows, so the right-hand side is nonzero
    # exactly when l(lam) <= n + 2: the identity fails precisely at n + 2.
    expected = [
        (lam, n) for n in range(1, 4) for lam in partitions_up_to(4) if lam.length == n + 2
    ]
    assert sorted(bad, key=str) == sorted(expected, key=str)
    assert {(str(lam), n) for lam, n in bad} == {("1,1,1", 1), ("2,1,1", 1), ("1,1,1,1", 2)}
