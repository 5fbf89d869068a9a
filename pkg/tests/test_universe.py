"""Unit tests for module specs and bounded universes."""
import pytest

from prerad_lab.errors import SpecParseError, UniverseError
from prerad_lab.module import direct_sum, quotient, regular_module
from prerad_lab.ring import make_ring
from prerad_lab.universe import (
    build_universe,
    format_submodule,
    parse_module,
    parse_submodule,
)


class TestModuleSpecs:
    """Test suite for module and submodule spec parsing."""

    def test_cyclic_and_powers(self, zn4):
        """Test Zd terms, sums and powers."""
        assert parse_module(zn4, "Z2").order == 2
        assert parse_module(zn4, "Z2^3").order == 8
        assert parse_module(zn4, "Z2 + Z4").cyclic_orders == (2, 4)
        assert parse_module(zn4, "R").label == "R"
        assert parse_module(zn4, "0").is_zero

    def test_simple_and_projective_terms(self):
        """Test S<i> and P<i> over the triangular ring."""
        ring = make_ring("triangular:2:2")
        assert parse_module(ring, "S0").order == 2
        assert parse_module(ring, "P1").order == 4

    @pytest.mark.parametrize("spec", ["Z3", "Q", "Z2+", "S7", "Z2^0"])
    def test_invalid_module_specs(self, zn4, spec):
        """Test that malformed or impossible specs are rejected."""
        with pytest.raises(SpecParseError):
            parse_module(zn4, spec)

    def test_submodule_specs(self, zn4):
        """Test generator lists, zero and the whole module."""
        module = parse_module(zn4, "Z2+Z4")
        assert parse_submodule(module, "0").is_zero
        assert parse_submodule(module, "*").is_whole
        assert parse_submodule(module, "1,0;0,2").size == 4
        assert parse_submodule(module, "0,1").size == 4

    def test_submodule_coordinate_count(self, zn4):
        """Test that generators need one coordinate per cyclic factor."""
        with pytest.raises(SpecParseError, match="coordinates"):
            parse_submodule(parse_module(zn4, "Z2+Z4"), "1")

    def test_format_is_inverse_of_parse(self, z4):
        """Test that formatted generators parse back to the same submodule."""
        sub = parse_submodule(z4, "2")
        assert format_submodule(sub) == "2"
        assert parse_submodule(z4, format_submodule(sub)) == sub


class TestBuildUniverse:
    """Test suite for universe construction."""

    def test_zn2_universe(self, u_zn2):
        """Test that the Z/2 universe is 0, Z2 and Z2+Z2."""
        assert [m.order for m in u_zn2.iso_classes] == [1, 2, 4]
        assert u_zn2.names == ("0", "Z2", "Z2+Z2")

    def test_zn4_universe(self, u_zn4):
        """Test that the Z/4 universe has the six groups of exponent dividing 4 up to order 16."""
        assert len(u_zn4) == 6
        assert sorted(m.order for m in u_zn4.iso_classes) == [1, 2, 4, 4, 8, 16]

    def test_parameters(self, u_zn4):
        """Test the parameter record used in reports."""
        assert u_zn4.parameters == {
            "ring": "zn:4",
            "max_order": 16,
            "sum_arity": 2,
            "classes": 6,
            "quotients": True,
            "submodules": True,
        }

    def test_closed_under_quotients(self, u_zn4):
        """Test that every quotient of every member is located."""
        for i in u_zn4.indices:
            for sub in u_zn4.submodules(i):
                u_zn4.locate(quotient(u_zn4[i], sub)[0])

    def test_zero_and_regular(self, u_zn4, zn4):
        """Test the zero and regular indices."""
        assert u_zn4[u_zn4.zero_index].is_zero
        assert u_zn4.name(u_zn4.regular_index) == "Z4"
        assert u_zn4.index_of(regular_module(zn4)) == u_zn4.regular_index

    def test_missing_module(self, u_zn2, zn2):
        """Test that a module outside the bound is not located."""
        big = direct_sum(*([regular_module(zn2)] * 3))
        with pytest.raises(UniverseError):
            u_zn2.locate(big)

    def test_bound_below_ring_order(self, zn4):
        """Test that max_order must cover the regular module."""
        with pytest.raises(UniverseError, match="smaller than"):
            build_universe(zn4, max_order=2)

    def test_seeds_need_regular_module(self, zn4):
        """Test that the regular module is a required seed."""
        with pytest.raises(UniverseError, match="regular"):
            build_universe(zn4, seeds=["Z2"])

    def test_class_cap(self, zn4):
        """Test that the class cap is enforced."""
        with pytest.raises(UniverseError, match="cap"):
            build_universe(zn4, max_classes=3)

    def test_quotient_relation(self, u_zn4):
        """Test quotient classes of Z4."""
        i = u_zn4.regular_index
        names = {u_zn4.name(j) for j in u_zn4.quotient_classes(i)}
        assert names == {"0", "Z2", "Z4"}
        assert {u_zn4.name(j) for j in u_zn4.proper_quotients(i)} == {"0", "Z2"}
