"""Unit tests for finite rings and presets."""
import pytest
from hypothesis import given, settings, strategies as st

from prerad_lab.errors import RingAxiomError, SizeBoundError, SpecParseError
from prerad_lab.ring import make_ring

TRIANGULAR = make_ring("triangular:2:2")


class TestPresets:
    """Test suite for ring presets."""

    def test_zn_basic_invariants(self, zn4):
        """Test order, characteristic and commutativity of Z/4."""
        assert zn4.order == 4
        assert zn4.characteristic == 4
        assert zn4.is_commutative

    def test_presets_are_cached(self):
        """Test that equal specs give the same ring object."""
        assert make_ring("zn:4") is make_ring("zn:4")
        assert make_ring("product(zn:2, zn:3)") is make_ring("product(zn:2,zn:3)")

    def test_product_ring(self):
        """Test that Z/2 x Z/3 has order 6 and is semisimple."""
        ring = make_ring("product(zn:2,zn:3)")
        assert ring.order == 6
        assert ring.characteristic == 6
        assert ring.is_semisimple

    def test_matrix_ring_is_noncommutative_and_semisimple(self):
        """Test the 2x2 matrix ring over F2."""
        ring = make_ring("matrix:2:2")
        assert ring.order == 16
        assert not ring.is_commutative
        assert ring.is_semisimple

    def test_triangular_ring_radical(self):
        """Test that the upper triangular ring over F2 has a radical of size 2."""
        assert TRIANGULAR.order == 8
        assert len(TRIANGULAR.jacobson_radical) == 2
        assert not TRIANGULAR.is_semisimple

    @pytest.mark.parametrize("spec", ["zn:0", "zn:1", "zn:x", "matrix:2:4", "matrix:3:2", "quaternions"])
    def test_invalid_specs(self, spec):
        """Test that malformed or unsupported presets are rejected."""
        with pytest.raises(SpecParseError):
            make_ring(spec)

    def test_zn_zero_message(self):
        """Test the message for a modulus below 2."""
        with pytest.raises(SpecParseError, match="n >= 2 required"):
            make_ring("zn:0")

    def test_size_bound(self):
        """Test that rings above the supported order are refused."""
        with pytest.raises(SizeBoundError):
            make_ring("zn:65")


class TestExplicitTables:
    """Test suite for rings given by explicit tables."""

    def test_valid_tables(self):
        """Test that the tables of Z/2 build a ring."""
        ring = make_ring({"add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 1]], "one": 1, "zero": 0})
        assert ring.order == 2
        assert ring.is_semisimple

    def test_missing_unity_is_reported(self):
        """Test that a zero multiplication has no unity."""
        with pytest.raises(RingAxiomError) as excinfo:
            make_ring({"add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]], "one": 1, "zero": 0})
        assert any("unity" in v for v in excinfo.value.violations)

    def test_malformed_tables(self):
        """Test that missing keys are a parse error."""
        with pytest.raises(SpecParseError):
            make_ring({"add": [[0]]})


class TestIdeals:
    """Test suite for ideals, idempotents and the Jacobson radical."""

    def test_zn4_ideals(self, zn4):
        """Test the ideal chain 0 < (2) < Z/4."""
        assert zn4.two_sided_ideals == (frozenset({0}), frozenset({0, 2}), frozenset(range(4)))
        assert zn4.jacobson_radical == frozenset({0, 2})
        assert zn4.idempotents == (0, 1)

    def test_zn6_ideals(self, zn6):
        """Test that Z/6 has four ideals and is semisimple."""
        assert len(zn6.two_sided_ideals) == 4
        assert zn6.is_semisimple
        assert set(zn6.idempotents) == {0, 1, 3, 4}

    def test_ideal_closure(self, zn6):
        """Test the ideal generated by 2 in Z/6."""
        assert zn6.ideal_closure([2]) == frozenset({0, 2, 4})


class TestAxioms:
    """Property-based checks of the ring laws on a non-commutative preset."""

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7))
    def test_distributive_and_associative(self, a, b, c):
        """Test distributivity and associativity on random triples."""
        r = TRIANGULAR
        assert r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
        assert r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c))
        assert r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))

    def test_preset_tables_have_no_violations(self):
        """Test that every preset passes the full axiom check."""
        for spec in ("zn:8", "product(zn:2,zn:3)", "triangular:2:2", "matrix:2:2"):
            assert make_ring(spec).axiom_violations() == []
