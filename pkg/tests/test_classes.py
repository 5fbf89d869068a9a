"""Unit tests for module classes, pseudocomplements and conatural classes."""
import pytest

from prerad_lab.classes import (
    boolean_lattice_violations,
    conatural_classes,
    is_conatural,
    make_class,
    perp,
    pseudocomplement_violations,
    quotient_closed_classes,
    quotient_closure,
    satisfies_cn,
    to_dot,
    whole_class,
    zero_class,
)
from prerad_lab.errors import EnumerationCapError, NotQuotientClosedError


def _by_names(universe, *names):
    return make_class(universe, [universe.names.index(n) for n in names])


class TestModuleClass:
    """Test suite for class operations."""

    def test_str(self, u_zn2):
        """Test the printed form."""
        assert str(zero_class(u_zn2)) == "{0}"
        assert str(whole_class(u_zn2)) == "{0, Z2, Z2+Z2}"

    def test_quotient_closure(self, u_zn4):
        """Test that closing {Z4} adds Z2 and 0."""
        closed = quotient_closure(_by_names(u_zn4, "Z4"))
        assert set(closed.names()) == {"0", "Z2", "Z4"}
        assert closed.is_quotient_closed
        assert not _by_names(u_zn4, "0", "Z4").is_quotient_closed

    def test_trivial_and_whole(self, u_zn4):
        """Test the bounds of the class lattice."""
        assert zero_class(u_zn4).is_trivial
        assert whole_class(u_zn4).is_whole
        assert zero_class(u_zn4) < whole_class(u_zn4)


class TestPseudocomplement:
    """Test suite for perp and condition CN."""

    def test_perp_of_bounds(self, u_zn4):
        """Test that the bounds are each other's pseudocomplement."""
        assert perp(whole_class(u_zn4)) == zero_class(u_zn4)
        assert perp(zero_class(u_zn4)) == whole_class(u_zn4)

    def test_semisimple_class_over_zn4(self, u_zn4):
        """Test that the semisimple modules over Z/4 do not form a conatural class."""
        semisimple = _by_names(u_zn4, "0", "Z2", "Z2+Z2")
        assert perp(semisimple) == zero_class(u_zn4)
        assert not is_conatural(semisimple)
        assert not satisfies_cn(semisimple)

    def test_perp_requires_quotient_closure(self, u_zn4):
        """Test that perp rejects classes not closed under quotients."""
        with pytest.raises(NotQuotientClosedError):
            perp(_by_names(u_zn4, "0", "Z4"))

    def test_pseudocomplement_is_largest(self, u_zn6):
        """Test the pseudocomplement property against every quotient-closed class."""
        closed = quotient_closed_classes(u_zn6)
        for cls in closed:
            assert pseudocomplement_violations(cls, closed) == []


class TestConaturalClasses:
    """Test suite for the conatural lattice."""

    @pytest.mark.parametrize("universe,count", [("u_zn2", 2), ("u_zn4", 2), ("u_zn6", 4)])
    def test_counts(self, universe, count, request):
        """Test the number of conatural classes per universe."""
        assert len(conatural_classes(request.getfixturevalue(universe))) == count

    def test_zn6_splits_by_prime(self, u_zn6):
        """Test that over Z/6 the classes separate the 2-part from the 3-part."""
        found = {frozenset(c.names()) for c in conatural_classes(u_zn6)}
        assert frozenset({"0"}) in found
        assert frozenset({"0", "Z2", "Z2+Z2"}) in found
        assert frozenset({"0", "Z3", "Z3+Z3"}) in found
        assert frozenset(u_zn6.names) in found

    def test_conatural_iff_cn(self, u_zn6):
        """Test that the double-perp test and CN pick the same classes."""
        for cls in quotient_closed_classes(u_zn6):
            assert is_conatural(cls) == satisfies_cn(cls)

    def test_boolean(self, u_zn6):
        """Test that the conatural classes form a Boolean lattice."""
        assert boolean_lattice_violations(conatural_classes(u_zn6)) == []

    def test_down_set_cap(self, u_zn4):
        """Test that the down-set cap raises."""
        with pytest.raises(EnumerationCapError):
            quotient_closed_classes(u_zn4, max_down_sets=1)

    def test_dot(self, u_zn4):
        """Test the Hasse diagram of a two-element lattice."""
        dot = to_dot(conatural_classes(u_zn4))
        assert dot.startswith("digraph conat {")
        assert "rankdir=BT;" in dot
        assert "c0 -> c1;" in dot
        assert dot.count("->") == 1
