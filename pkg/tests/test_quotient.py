# ==========================================
# tests/test_quotient.py
# ==========================================
import pytest
from hypothesis import given, settings, strategies as st

from core.errors import NotAnEquivalence
from core.quotient import (
    class_of, is_function_relation, partition, quotient_map, same_class_relation, verify_equivalence,
)

squares = lambda x, y: x * x == y * y
pairs = lambda u, v: u[0] + v[1] == v[0] + u[1]


class TestVerifyEquivalence:
    def test_squares_on_symmetric_carrier(self):
        assert verify_equivalence([-2, -1, 0, 1, 2], squares)

    def test_universal_relation(self):
        assert verify_equivalence([1, 2], lambda x, y: True)

    def test_order_is_not_symmetric(self):
        assert not verify_equivalence([0, 1, 2], lambda x, y: x <= y)

    def test_failing_predicate_counts_as_unrelated(self):
        def broken(x, y):
            if x == 1:
                raise RuntimeError("boom")
            return x == y

        assert not verify_equivalence([0, 1], broken)


class TestPartition:
    def test_squares(self):
        p = partition([-2, -1, 0, 1, 2], squares)
        assert p.as_lists() == [[-2, 2], [-1, 1], [0]]

    def test_singleton(self):
        assert partition([7], lambda x, y: x == y).as_lists() == [[7]]

    def test_integer_pairs(self):
        carrier = [(0, 0), (1, 2), (2, 3), (5, 1)]
        p = partition(carrier, pairs)
        assert p.as_lists() == [[(0, 0)], [(1, 2), (2, 3)], [(5, 1)]]

    def test_not_an_equivalence(self):
        with pytest.raises(NotAnEquivalence):
            partition([0, 1, 2], lambda x, y: x <= y)

    def test_index_of(self):
        p = partition(list(range(6)), lambda x, y: (x - y) % 3 == 0)
        assert p.index_of(4) == 1
        with pytest.raises(KeyError):
            p.index_of(10)

    @settings(max_examples=200)
    @given(st.lists(st.integers(-30, 30), max_size=25, unique=True), st.integers(1, 7))
    def test_classes_cover_carrier_disjointly(self, carrier, k):
        p = partition(carrier, lambda x, y: (x - y) % k == 0)
        flat = [x for cls in p for x in cls]
        assert sorted(flat) == sorted(carrier)
        assert len(flat) == len(set(flat))
        assert all(cls for cls in p)

    @settings(max_examples=200)
    @given(st.lists(st.integers(-30, 30), max_size=25, unique=True), st.integers(1, 7))
    def test_repartition_is_idempotent(self, carrier, k):
        p = partition(carrier, lambda x, y: (x - y) % k == 0)
        again = partition(carrier, same_class_relation(p))
        assert again.as_lists() == p.as_lists()


class TestHelpers:
    def test_class_of(self):
        assert class_of(1, [-2, -1, 0, 1, 2], squares) == [-1, 1]

    def test_class_of_outside_carrier(self):
        assert class_of(3, [0, 1, 2], squares) == []

    def test_quotient_map(self):
        projection = quotient_map([-1, 0, 1], squares)
        assert projection == {-1: 0, 1: 0, 0: 1}

    def test_squares_fail_function_test(self):
        # 1 ~ 1 y 1 ~ −1
        assert squares(1, 1) and squares(1, -1)
        assert not is_function_relation([-1, 0, 1], squares)

    def test_equality_is_a_function(self):
        assert is_function_relation([0, 1, 2], lambda x, y: x == y)
