import numpy as np
import pytest

from oddsymp.burau import BraidWord, burau_matrix
from oddsymp.complexes import act, orbit_conditions, standard_tuple
from oddsymp.lattice import Level, classify_element
from oddsymp.orbits import (
    WordSampler,
    apply_word,
    infer_family,
    necessity_experiment,
    random_t_element,
    reachability_search,
)


def test_sampler_is_deterministic_per_trial():
    s = WordSampler(5, 8.0, seed=11)
    words = list(s.words(20))
    assert words == list(WordSampler(5, 8.0, seed=11).words(20))
    # trial k does not depend on how many trials came before
    assert s.word(13) == words[13]
    assert list(WordSampler(5, 8.0, seed=12).words(20)) != words


def test_sampler_mean_length():
    s = WordSampler(4, 6.0, seed=1)
    lengths = [len(w.letters) for w in s.words(4000)]
    assert abs(np.mean(lengths) - 6.0) < 0.4
    assert all(1 <= i < 4 for w in s.words(50) for i, _ in w.letters)


def test_sampler_validation():
    with pytest.raises(ValueError):
        WordSampler(1)
    with pytest.raises(ValueError):
        WordSampler(3, -1.0)


def test_apply_word_matches_matrix_product():
    s = WordSampler(5, 10.0, seed=3)
    std = standard_tuple("X", 5, 2)
    for w in s.words(100):
        assert apply_word(w, std) == act(burau_matrix(w), std)


def test_random_t_elements_lie_in_t():
    rng = np.random.default_rng(0)
    levels = [classify_element(random_t_element(4, rng)) for _ in range(50)]
    assert Level.NOT_IN_T not in levels
    assert Level.T in levels


@pytest.mark.parametrize("n,p", [(3, 0), (4, 1), (5, 2), (6, 3)])
def test_necessity_x(n, p):
    assert necessity_experiment(n, p, 300, seed=5).passed


@pytest.mark.parametrize("n,p", [(3, 0), (5, 1), (6, 1)])
def test_necessity_ix(n, p):
    assert necessity_experiment(n, p, 300, seed=5, family="IX").passed


def test_necessity_rejects_out_of_range():
    with pytest.raises(ValueError):
        necessity_experiment(3, 2, 10)
    with pytest.raises(ValueError):
        necessity_experiment(4, 1, 10, family="IX")
    with pytest.raises(ValueError):
        necessity_experiment(4, 0, -1)


def test_necessity_report_is_reproducible():
    a = necessity_experiment(5, 1, 50, seed=9).to_json()
    assert a == necessity_experiment(5, 1, 50, seed=9).to_json()


def test_plant_and_recover():
    rng = np.random.default_rng(77)
    for _ in range(20):
        n = int(rng.integers(3, 6))
        p = int(rng.integers(0, n - 1))
        length = int(rng.integers(0, 4))
        word = BraidWord(n, tuple((int(rng.integers(1, n)), int(rng.choice((-1, 1)))) for _ in range(length)))
        target = act(burau_matrix(word), standard_tuple("X", n, p))
        res = reachability_search(target, n, 4)
        assert res.found
        assert res.depth <= length
        assert act(burau_matrix(res.witness), standard_tuple("X", n, p)) == target


def test_search_depth_zero():
    std = standard_tuple("X", 4, 1)
    res = reachability_search(std, 4, 0)
    assert res.found and res.depth == 0


def test_search_gives_up_within_depth():
    target = apply_word(BraidWord.parse(4, "1,2,3,1,2,3"), standard_tuple("X", 4, 0))
    res = reachability_search(target, 4, 1)
    assert not res.found and res.witness is None


def test_search_rejects_non_orbit_targets():
    bad = ((1, 1, -1, 0),)  # three odd entries
    assert not orbit_conditions("X", 4, bad).holds
    with pytest.raises(ValueError):
        reachability_search(bad, 4, 3)
    with pytest.raises(ValueError):
        infer_family([(1, 0, 0), (1, -1, 0)])
    assert infer_family([(1, -1, 0, 0, 0)]).value == "IX"
