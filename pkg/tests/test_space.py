import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from fintop.enumeration import enumerate_topologies
from fintop.errors import (
    IndexOutOfRange,
    MissingEmpty,
    MissingFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    SamePoint,
)
from fintop.generators import discrete, disjoint_union, indiscrete, pseudo_circle, sierpinski
from fintop.space import (
    FiniteSpace,
    SeparationAxioms,
    closure,
    connected_components,
    interior,
    is_dense,
    is_hausdorff,
    mask_of,
    members,
    separation_axioms,
    separation_witness,
    specialization_preorder,
    validate_topology,
)

ALL4 = [s for n in range(5) for s in enumerate_topologies(n)]
spaces4 = st.sampled_from(ALL4)


def m(*points):
    return mask_of(points)


class TestValidate:
    def test_sierpinski(self):
        s = validate_topology(2, [[], [1], [0, 1]])
        assert s == sierpinski()
        assert s.opens == (0, 2, 3)

    def test_missing_full(self):
        with pytest.raises(MissingFull):
            validate_topology(2, [[], [0], [1]])

    def test_missing_empty(self):
        with pytest.raises(MissingEmpty):
            validate_topology(2, [[1], [0, 1]])

    def test_union_violation_names_pair(self):
        with pytest.raises(NotClosedUnderUnion) as exc:
            validate_topology(3, [[], [0], [1], [0, 1, 2]])
        assert exc.value.pair == (m(0), m(1))

    def test_intersection_violation(self):
        with pytest.raises(NotClosedUnderIntersection) as exc:
            validate_topology(3, [[], [0, 1], [1, 2], [0, 1, 2]])
        assert exc.value.pair == (m(0, 1), m(1, 2))

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            validate_topology(2, [[], [2], [0, 1]])

    def test_order_and_duplicates_free(self):
        a = validate_topology(2, [[0, 1], [1], [], [1], [1, 0]])
        assert a == sierpinski()

    def test_empty_space(self):
        e = validate_topology(0, [[]])
        assert e.opens == (0,)
        assert is_hausdorff(e)

    @given(spaces4)
    def test_idempotent(self, s):
        assert validate_topology(s.n, s.opens) == s
        assert validate_topology(s.n, [members(o) for o in reversed(s.opens)]) == s

    def test_constructor_rejects_unsorted(self):
        with pytest.raises(ValueError):
            FiniteSpace(2, (0, 3, 2))


class TestClosure:
    def test_sierpinski(self, S):
        assert closure(S, m(1)) == m(0, 1)
        assert closure(S, m(0)) == m(0)

    @pytest.mark.parametrize("space", [sierpinski(), discrete(3), indiscrete(2), pseudo_circle()])
    def test_empty(self, space):
        assert closure(space, 0) == 0

    def test_discrete(self, D3):
        assert closure(D3, m(0, 2)) == m(0, 2)

    def test_out_of_range(self, S):
        with pytest.raises(IndexOutOfRange):
            closure(S, m(2))

    def test_agrees_with_oracle(self):
        for s in ALL4:
            n, fam = oracles.opens_of(s)
            for a in range(1 << s.n):
                expected = oracles.closure(n, fam, frozenset(members(a)))
                assert closure(s, a) == mask_of(expected)

    def test_agrees_with_preorder_route(self):
        # x in cl(A) iff x <= a for some a in A
        for s in ALL4:
            order = specialization_preorder(s)
            for a in range(1 << s.n):
                down = 0
                for y in members(a):
                    down |= order.down[y]
                assert closure(s, a) == down

    @given(spaces4, st.data())
    def test_kuratowski(self, s, data):
        a = data.draw(st.integers(0, s.full))
        b = data.draw(st.integers(0, s.full))
        ca = closure(s, a)
        assert a & ~ca == 0
        assert closure(s, ca) == ca
        assert closure(s, a | b) == ca | closure(s, b)


class TestInterior:
    def test_sierpinski(self, S):
        assert interior(S, m(0)) == 0

    def test_full(self):
        for s in ALL4:
            assert interior(s, s.full) == s.full

    @given(st.integers(0, 4), st.data())
    def test_discrete_identity(self, n, data):
        a = data.draw(st.integers(0, (1 << n) - 1))
        assert interior(discrete(n), a) == a

    def test_duality(self):
        for s in ALL4:
            for a in range(1 << s.n):
                assert interior(s, a) == s.full ^ closure(s, s.full ^ a)


class TestDense:
    def test_sierpinski(self, S):
        assert is_dense(S, m(1))
        assert not is_dense(S, m(0))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_empty_not_dense(self, n):
        assert not is_dense(discrete(n), 0)


class TestHausdorff:
    def test_examples(self, S, D2):
        assert is_hausdorff(D2)
        assert not is_hausdorff(S)
        assert is_hausdorff(discrete(0))

    def test_iff_discrete_and_oracle(self):
        # finite-space fact: T2 means discrete
        for s in ALL4:
            n, fam = oracles.opens_of(s)
            assert is_hausdorff(s) == oracles.is_hausdorff(n, fam)
            assert is_hausdorff(s) == (len(s.opens) == 2 ** s.n)


class TestSeparationWitness:
    def test_discrete(self, D2, D3):
        assert separation_witness(D2, 0, 1) == (m(0), m(1))
        assert separation_witness(D3, 2, 0) == (m(2), m(0))

    def test_sierpinski_none(self, S):
        assert separation_witness(S, 0, 1) is None

    def test_same_point(self, D2):
        with pytest.raises(SamePoint):
            separation_witness(D2, 1, 1)

    def test_out_of_range(self, D2):
        with pytest.raises(IndexOutOfRange):
            separation_witness(D2, 0, 5)

    @given(spaces4, st.data())
    def test_witness_valid(self, s, data):
        if s.n < 2:
            return
        x = data.draw(st.integers(0, s.n - 1))
        y = data.draw(st.integers(0, s.n - 1).filter(lambda v: v != x))
        w = separation_witness(s, x, y)
        if w is not None:
            assert s.is_open(w.o1) and s.is_open(w.o2)
            assert w.o1 >> x & 1 and w.o2 >> y & 1 and not w.o1 & w.o2


class TestSeparationAxioms:
    def test_examples(self, S, I2):
        assert separation_axioms(S) == SeparationAxioms(True, False, False)
        assert separation_axioms(I2) == SeparationAxioms(False, False, False)
        assert separation_axioms(discrete(4)) == SeparationAxioms(True, True, True)

    def test_monotone_everywhere(self):
        for s in ALL4:
            t0, t1, t2 = separation_axioms(s)
            assert (not t2 or t1) and (not t1 or t0)


class TestPreorder:
    def test_sierpinski(self, S):
        order = specialization_preorder(S)
        assert sorted(order.pairs()) == [(0, 0), (0, 1), (1, 1)]

    def test_discrete_is_equality(self, D3):
        assert sorted(specialization_preorder(D3).pairs()) == [(0, 0), (1, 1), (2, 2)]

    def test_indiscrete_total(self, I2):
        assert len(list(specialization_preorder(I2).pairs())) == 4


class TestComponents:
    def test_examples(self, S, D3):
        assert connected_components(S).as_lists() == [[0, 1]]
        assert connected_components(D3).as_lists() == [[0], [1], [2]]
        ss = disjoint_union(sierpinski(), sierpinski())
        assert connected_components(ss).as_lists() == [[0, 1], [2, 3]]

    def test_pseudo_circle_connected(self):
        assert connected_components(pseudo_circle()).as_lists() == [[0, 1, 2, 3]]

    def test_matches_clopen_and_component_oracles(self):
        # finite-space fact: components = quasi-components
        for s in ALL4:
            n, fam = oracles.opens_of(s)
            got = connected_components(s).as_lists()
            assert got == oracles.clopen_classes(n, fam)
            assert got == oracles.components(n, fam)
