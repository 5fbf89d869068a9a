"""Unit tests for finite modules, submodules and morphisms."""
import pytest
from hypothesis import given, settings, strategies as st

from prerad_lab.errors import ModuleActionError, NotASubmoduleError, RingMismatchError
from prerad_lab.module import (
    FiniteModule,
    are_isomorphic,
    direct_sum,
    enumerate_submodules,
    hom_set,
    indecomposable_projectives,
    is_semisimple,
    is_simple,
    projective_cover,
    quotient,
    radical,
    regular_module,
    simple_modules,
    socle,
    span,
    submodule_from_elements,
    superfluous,
)
from prerad_lab.ring import make_ring
from prerad_lab.snf import smith_normal_form
from prerad_lab.universe import parse_module

ZN4 = make_ring("zn:4")
MIXED = parse_module(ZN4, "Z2+Z4")
ENDS = hom_set(MIXED, MIXED)


class TestSmithNormalForm:
    """Test suite for the integer Smith normal form."""

    def test_diagonal_divisibility(self):
        """Test that diag(2, 3) normalizes to diag(1, 6)."""
        form = smith_normal_form([[2, 0], [0, 3]], 2)
        assert form.diagonal == (1, 6)

    def test_transform_is_invertible(self):
        """Test that the column transform and its inverse multiply to the identity."""
        form = smith_normal_form([[4, 6], [2, 2]], 2)
        v, w = form.transform, form.inverse
        product = [[sum(v[i][k] * w[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        assert product == [[1, 0], [0, 1]]


class TestFiniteModule:
    """Test suite for module construction."""

    def test_action_length_is_checked(self, zn2):
        """Test that one action matrix per ring element is required."""
        with pytest.raises(ModuleActionError):
            FiniteModule(zn2, (2,), (((1,),),))

    def test_cyclic_orders_must_exceed_one(self, zn2):
        """Test that trivial cyclic factors are refused."""
        with pytest.raises(ModuleActionError):
            FiniteModule(zn2, (1,), (((0,),), ((0,),)))

    def test_regular_module(self, zn6):
        """Test that the regular module of Z/6 is cyclic of order 6."""
        module = regular_module(zn6)
        assert module.order == 6
        assert module.label == "R"

    def test_direct_sum_of_coprime_cyclics_is_regular(self, zn6):
        """Test that Z2 + Z3 over Z/6 is isomorphic to R."""
        module = direct_sum(parse_module(zn6, "Z2"), parse_module(zn6, "Z3"))
        iso, witness = are_isomorphic(module, regular_module(zn6))
        assert iso
        assert witness.is_injective and witness.is_surjective

    def test_direct_sum_over_different_rings(self, zn2, zn4):
        """Test that summands must share the ring."""
        with pytest.raises(RingMismatchError):
            direct_sum(regular_module(zn2), regular_module(zn4))


class TestSubmodules:
    """Test suite for submodule lattices."""

    def test_z4_chain(self, z4):
        """Test that Z4 has the chain 0 < 2Z4 < Z4."""
        assert [s.size for s in enumerate_submodules(z4)] == [1, 2, 4]

    def test_klein_four_lattice(self, zn2):
        """Test that Z2 + Z2 over Z/2 has five submodules."""
        assert len(enumerate_submodules(parse_module(zn2, "Z2^2"))) == 5

    def test_radical_and_socle_of_z4(self, z4):
        """Test that rad and soc of Z4 are both 2Z4."""
        middle = enumerate_submodules(z4)[1]
        assert radical(z4) == middle
        assert socle(z4) == middle
        assert superfluous(middle)

    def test_simple_and_semisimple(self, zn4, z4):
        """Test simplicity and semisimplicity predicates."""
        assert is_simple(parse_module(zn4, "Z2"))
        assert not is_simple(z4)
        assert not is_semisimple(z4)
        assert is_semisimple(parse_module(zn4, "Z2^2"))

    def test_summand_is_not_superfluous(self, zn2):
        """Test that a direct summand of Z2 + Z2 is not superfluous."""
        module = parse_module(zn2, "Z2^2")
        assert not superfluous(span(module, [(1, 0)]))

    def test_subset_not_closed(self, z4):
        """Test that {0, 1} is not a submodule of Z4."""
        with pytest.raises(NotASubmoduleError):
            submodule_from_elements(z4, [(0,), (1,)])

    def test_quotient(self, z4):
        """Test that Z4 / 2Z4 has order 2 and the projection is onto."""
        target, projection = quotient(z4, enumerate_submodules(z4)[1])
        assert target.order == 2
        assert projection.is_surjective
        assert projection.kernel() == enumerate_submodules(z4)[1]


class TestMorphisms:
    """Test suite for hom-sets and composition."""

    def test_hom_z2_z6(self, zn6):
        """Test that Hom(Z2, Z6) over Z/6 has two maps."""
        assert len(hom_set(parse_module(zn6, "Z2"), parse_module(zn6, "Z6"))) == 2

    def test_hom_between_coprime_orders(self, zn6):
        """Test that Hom(Z2, Z3) is zero."""
        homs = hom_set(parse_module(zn6, "Z2"), parse_module(zn6, "Z3"))
        assert len(homs) == 1 and homs[0].is_zero

    def test_endomorphisms_of_z4(self, z4):
        """Test that End(Z4) has four elements."""
        assert len(hom_set(z4, z4)) == 4

    def test_hom_sets_are_duplicate_free(self):
        """Test that the hom-set lists every map once."""
        assert len({f.generator_images for f in ENDS}) == len(ENDS)

    @settings(max_examples=50, deadline=None)
    @given(st.sampled_from(ENDS), st.sampled_from(ENDS))
    def test_composition(self, f, g):
        """Test that f.then(g) agrees with applying f then g."""
        composite = f.then(g)
        assert all(composite(x) == g(f(x)) for x in MIXED.elements)


class TestProjectives:
    """Test suite for simple modules and projective covers."""

    def test_simple_modules(self, zn6):
        """Test the simple modules of Z/6 and of the matrix ring."""
        assert sorted(s.order for s in simple_modules(zn6)) == [2, 3]
        assert [s.order for s in simple_modules(make_ring("matrix:2:2"))] == [4]

    def test_triangular_projectives(self):
        """Test that the triangular ring has principal projectives of orders 2 and 4."""
        ring = make_ring("triangular:2:2")
        assert sorted(p.order for p, _ in indecomposable_projectives(ring)) == [2, 4]

    def test_cover_of_z2_over_z4(self, zn4):
        """Test that the projective cover of Z2 over Z/4 is Z4 with kernel 2Z4."""
        cover, epi = projective_cover(parse_module(zn4, "Z2"))
        assert cover.order == 4
        assert epi.is_surjective
        assert epi.kernel().size == 2
