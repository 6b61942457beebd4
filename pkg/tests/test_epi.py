import warnings

import pytest

import oracles
from fintop.enumeration import enumerate_topologies
from fintop.epi import (
    check_dense_implies_epi,
    is_counterexample,
    is_epi_bruteforce,
    is_epi_dense,
    non_epi_witness,
)
from fintop.errors import BoundTooSmallWarning, InvalidParameter, NotHausdorffCodomain, NotHausdorffDomain
from fintop.generators import discrete, point, sierpinski
from fintop.maps import Cospan, compose, constant, enumerate_continuous_maps, identity, make_map

HAUS = [discrete(k) for k in range(4)]
HAUS_MAPS = [f for a in HAUS for b in HAUS for f in enumerate_continuous_maps(a, b)]
UP_TO_3 = [s for n in range(4) for s in enumerate_topologies(n)]


def inclusion(k, n):
    return make_map(discrete(k), discrete(n), list(range(k)))


class TestDense:
    def test_identity(self, D2):
        v = is_epi_dense(identity(D2))
        assert v.is_epi and v.method == "dense-test" and v.counterexample is None

    def test_point_inclusion(self):
        assert not is_epi_dense(inclusion(1, 2)).is_epi

    def test_surjection(self, D3, D2):
        assert is_epi_dense(make_map(D3, D2, [0, 1, 1])).is_epi

    def test_requires_hausdorff(self, S, D2):
        with pytest.raises(NotHausdorffCodomain):
            is_epi_dense(make_map(point(), S, [1]))
        with pytest.raises(NotHausdorffDomain):
            is_epi_dense(constant(S, D2, 0))


class TestBruteForce:
    def test_point_inclusion(self):
        f = inclusion(1, 2)
        v = is_epi_bruteforce(f, "haus", 4)
        assert not v.is_epi
        g, h = v.counterexample.g, v.counterexample.h
        assert g.cod == h.cod == discrete(2)
        assert g(0) == h(0) and g(1) != h(1)
        assert is_counterexample(f, v.counterexample)

    @pytest.mark.parametrize("category", ["haus", "top"])
    def test_identity(self, category, D2):
        assert is_epi_bruteforce(identity(D2), category, 4).is_epi

    def test_top_identity_non_hausdorff(self, S):
        assert is_epi_bruteforce(identity(S), "top", 3).is_epi

    def test_top_needs_hausdorff_for_dense(self, S):
        # image {1} is dense in S, yet f is not epi in Top
        f = make_map(point(), S, [1])
        v = is_epi_bruteforce(f, "top", 2)
        assert not v.is_epi
        assert is_counterexample(f, v.counterexample, require_hausdorff=False)
        stated = Cospan(identity(S), constant(S, S, 1))
        assert is_counterexample(f, stated, require_hausdorff=False)

    def test_bound_warning(self):
        with pytest.warns(BoundTooSmallWarning):
            is_epi_bruteforce(inclusion(1, 2), "haus", 3)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            is_epi_bruteforce(inclusion(1, 2), "haus", 4)

    def test_bad_bound(self, D2):
        with pytest.raises(InvalidParameter):
            is_epi_bruteforce(identity(D2), "haus", 0)

    def test_bad_category(self, D2):
        with pytest.raises(InvalidParameter):
            is_epi_bruteforce(identity(D2), "set", 2)

    def test_counterexample_is_first(self):
        # first pair (g, h) in lexicographic order among discrete(1), discrete(2), ...
        f = inclusion(1, 2)
        v = is_epi_bruteforce(f, "haus", 4)
        assert v.counterexample.g.assignment == (0, 0)
        assert v.counterexample.h.assignment == (0, 1)

    def test_top_matches_oracle(self):
        targets = [oracles.opens_of(t) for k in (1, 2, 3) for t in enumerate_topologies(k)]
        for a in UP_TO_3:
            for b in UP_TO_3:
                for f in enumerate_continuous_maps(a, b):
                    expected = oracles.is_epi_top_brute(f.assignment, oracles.opens_of(b), targets)
                    assert is_epi_bruteforce(f, "top", 3).is_epi == expected


class TestEquivalence:
    def test_dense_iff_bruteforce(self):
        for f in HAUS_MAPS:
            bound = max(1, 2 * f.cod.n)
            assert is_epi_dense(f).is_epi == is_epi_bruteforce(f, "haus", bound).is_epi

    def test_epi_iff_surjective_in_finite_haus(self):
        for f in HAUS_MAPS:
            assert is_epi_dense(f).is_epi == f.is_surjective()

    def test_dense_implies_epi(self):
        for f in HAUS_MAPS:
            assert check_dense_implies_epi(f, 6)


class TestWitness:
    def test_point_into_two(self):
        f = inclusion(1, 2)
        pair = non_epi_witness(f)
        assert pair.g.assignment == (0, 1)
        assert pair.h.assignment == (0, 0)
        assert pair.g(1) != pair.h(1)

    def test_dense_gives_none(self, D3, D2):
        assert non_epi_witness(make_map(D3, D2, [0, 1, 0])) is None
        assert non_epi_witness(identity(D2)) is None

    def test_point_into_three(self):
        f = inclusion(1, 3)
        pair = non_epi_witness(f)
        assert pair.g.assignment == (0, 1, 2)
        assert pair.h.assignment == (0, 0, 0)
        assert compose(pair.g, f) == compose(pair.h, f)
        assert pair.g(1) != pair.h(1)

    def test_empty_domain(self, D2):
        f = make_map(discrete(0), D2, [])
        pair = non_epi_witness(f)
        assert is_counterexample(f, pair)

    def test_empty_into_empty_is_dense(self):
        assert non_epi_witness(identity(discrete(0))) is None

    def test_sound_and_complete(self):
        for f in HAUS_MAPS:
            pair = non_epi_witness(f)
            assert (pair is None) == is_epi_dense(f).is_epi
            if pair is not None:
                assert is_counterexample(f, pair)

    def test_rejects_non_hausdorff(self):
        with pytest.raises(NotHausdorffCodomain):
            non_epi_witness(make_map(point(), sierpinski(), [0]))
