import itertools
import random
from fractions import Fraction

import pytest

from oddsymp.complexes import ComplexSpec, Family, FiniteComplex, build_complex
from oddsymp.homology import (
    Coefficients,
    NotClosedError,
    bareiss_rank,
    chain_complex,
    cone,
    homology,
    matrix_invariants,
)

TETRA = list(itertools.combinations(range(4), 3))
RP2 = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
    (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
]
# seven-vertex torus
TORUS = [tuple(sorted(((i, (i + 1) % 7, (i + 3) % 7)))) for i in range(7)] + [
    tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))) for i in range(7)
]


def fraction_rank(m):
    m = [[Fraction(x) for x in row] for row in m]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def of(facets):
    return homology(chain_complex(FiniteComplex.from_facets(facets)))


def test_sphere():
    rep = of(TETRA)
    assert rep.betti_q == (0, 0, 0, 1)
    assert rep.connectivity == 1


def test_sphere_unreduced():
    rep = homology(chain_complex(FiniteComplex.from_facets(TETRA)), reduced=False)
    assert rep.betti_q == (1, 0, 1)


def test_projective_plane():
    rep = of(RP2)
    assert rep.betti_q == (0, 0, 0, 0)
    assert rep.betti_f2 == (0, 0, 1, 1)
    assert rep.torsion_in(1) == (2,)
    assert rep.torsion == ((), (), (2,), ())
    assert rep.connectivity == 0


def test_torus():
    fc = FiniteComplex.from_facets(TORUS)
    assert fc.f_vector() == (7, 21, 14)
    rep = homology(chain_complex(fc))
    assert rep.betti_q == (0, 0, 2, 1)
    assert all(t == () for t in rep.torsion)


def test_two_points():
    rep = of([(0,), (1,)])
    assert rep.betti_q == (0, 1)
    assert rep.connectivity == -1


def test_empty_complex():
    rep = homology(chain_complex(FiniteComplex.from_facets([])))
    assert rep.betti_q == (1,)
    assert rep.connectivity == -2


def test_cone_is_acyclic():
    for facets in (TETRA, RP2, TORUS):
        rep = homology(chain_complex(cone(FiniteComplex.from_facets(facets))))
        assert not any(rep.betti_q)
        assert not any(rep.betti_f2)
        assert rep.connectivity is None


def test_missing_face_detected():
    fc = FiniteComplex("broken", 0, 0, ((0,), (1,)), ((0,), (0, 1)))
    with pytest.raises(NotClosedError):
        chain_complex(fc)


def random_complex(rng, nverts, nfacets, dim):
    facets = [tuple(sorted(rng.sample(range(nverts), rng.randint(1, dim + 1)))) for _ in range(nfacets)]
    return FiniteComplex.from_facets(facets)


def test_random_complexes_against_dense_ranks():
    rng = random.Random(12)
    for _ in range(40):
        fc = random_complex(rng, 7, rng.randint(1, 8), 3)
        cc = chain_complex(fc)
        rep = homology(cc)
        # oracle: unreduced betti numbers from dense rational ranks
        ranks = [0]
        for d in range(1, len(cc.counts)):
            m = [[0] * cc.counts[d] for _ in range(cc.counts[d - 1])]
            for j, col in enumerate(cc.boundaries[d]):
                for r, v in col:
                    m[r][j] += v
            ranks.append(fraction_rank(m))
        ranks.append(0)
        unreduced = [cc.counts[d] - ranks[d] - ranks[d + 1] for d in range(len(cc.counts))]
        expected = [0] + unreduced
        expected[1] -= 1
        assert list(rep.betti_q) == expected
        assert all(f >= q for f, q in zip(rep.betti_f2, rep.betti_q))
        assert rep.euler_ok
        assert cc.euler_characteristic() == sum((-1) ** d * b for d, b in enumerate(unreduced))


def test_bareiss_rank():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[2, 1, 0], [1, 2, 1], [0, 1, 2]]) == 3
    rng = random.Random(7)
    for _ in range(50):
        m = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(4)]
        assert bareiss_rank(m) == fraction_rank(m)


def test_matrix_invariants_over_each_ring():
    cols = [((0, 2),), ((1, 3),)]  # diag(2, 3), Smith form diag(1, 6)
    assert matrix_invariants(cols, 2, Coefficients.Z).divisors == (6,)
    assert matrix_invariants(cols, 2, Coefficients.Q).rank == 2
    assert matrix_invariants(cols, 2, Coefficients.F2).rank == 1


def test_x_complexes_are_consistent():
    for n in (3, 4):
        cc = chain_complex(build_complex(ComplexSpec(Family.X, n, 2)))
        cc.check_square_zero()
        rep = homology(cc)
        assert rep.euler_ok
        assert all(f >= q for f, q in zip(rep.betti_f2, rep.betti_q))


def test_destabilisation_complex_chain_complex():
    for n in (2, 3):
        cc = chain_complex(build_complex(ComplexSpec(Family.W_Q, n, 1)))
        cc.check_square_zero()
        assert homology(cc).euler_ok


def test_report_serialisation():
    rep = of(RP2)
    d = rep.as_dict()
    assert d["degrees"] == [-1, 0, 1, 2]
    assert d["torsion_Z"] == [[], [], [2], []]
    assert "Z/2" in rep.table()
    assert rep.to_json() == of(RP2).to_json()
