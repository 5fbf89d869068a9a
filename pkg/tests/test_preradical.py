"""Unit tests for preradical expressions."""
import pytest

from prerad_lab.errors import NotFullyInvariantError, RingMismatchError, SpecParseError
from prerad_lab.module import enumerate_submodules, regular_module
from prerad_lab.preradical import (
    Alpha,
    Bar,
    Colon,
    Compose,
    Hat,
    IdealTRad,
    Join,
    Meet,
    Omega,
    One,
    Rad,
    Reject,
    Soc,
    Trace,
    Zero,
    evaluate,
    from_json,
    ideal_t_radical,
    parse_preradical,
    to_json,
    to_text,
)
from prerad_lab.universe import parse_module, parse_submodule


class TestEvaluation:
    """Test suite for evaluating expressions on modules."""

    def test_reject_of_z6_on_z2(self, zn6):
        """Test that Z2 embeds in Z6, so the rejection of Z6 in Z2 is zero."""
        assert evaluate(Reject(parse_module(zn6, "Z6")), parse_module(zn6, "Z2")).is_zero

    def test_constants(self, z4):
        """Test the zero and identity preradicals."""
        assert evaluate(Zero(), z4).is_zero
        assert evaluate(One(), z4).is_whole

    def test_rad_soc_trace_on_z4(self, zn4, z4):
        """Test rad, soc and the trace of Z2 on Z4."""
        middle = enumerate_submodules(z4)[1]
        assert evaluate(Rad(), z4) == middle
        assert evaluate(Soc(), z4) == middle
        assert evaluate(Trace(parse_module(zn4, "Z2")), z4) == middle

    def test_ideal_t_radical(self, zn4, z4):
        """Test that (2) acts as multiplication by 2."""
        sigma = ideal_t_radical(zn4, [2])
        assert sigma.ideal == frozenset({0, 2})
        assert evaluate(sigma, z4).size == 2
        assert evaluate(sigma, parse_module(zn4, "Z2^2")).is_zero

    def test_alpha_and_omega(self, zn4, z4):
        """Test alpha and omega on the fully invariant 2Z4."""
        middle = parse_submodule(z4, "2")
        assert evaluate(Alpha(middle), z4) == middle
        assert evaluate(Omega(middle), parse_module(zn4, "Z2")).is_whole

    def test_alpha_needs_full_invariance(self, zn2):
        """Test that a summand of Z2 + Z2 is refused by alpha and omega."""
        sub = parse_submodule(parse_module(zn2, "Z2^2"), "1,0")
        with pytest.raises(NotFullyInvariantError):
            Alpha(sub)
        with pytest.raises(NotFullyInvariantError):
            Omega(sub)

    def test_meet_join_empty(self, z4):
        """Test that the empty meet is One and the empty join is Zero."""
        assert evaluate(Meet(()), z4).is_whole
        assert evaluate(Join(()), z4).is_zero

    def test_compose_and_colon(self, z4):
        """Test rad . rad = 0 and (soc : soc) = 1 on Z4."""
        assert evaluate(Compose(Rad(), Rad()), z4).is_zero
        assert evaluate(Colon(Soc(), Soc()), z4).is_whole

    def test_hat_and_bar(self, z4):
        """Test the idempotent core of rad and the radical closure of soc."""
        assert evaluate(Hat(Rad()), z4).is_zero
        assert evaluate(Bar(Soc()), z4).is_whole

    def test_ring_mismatch(self, zn2, z4):
        """Test that leaves over another ring are refused."""
        with pytest.raises(RingMismatchError):
            evaluate(Trace(regular_module(zn2)), z4)

    def test_zero_module(self, zn4):
        """Test that every expression vanishes on the zero module."""
        assert evaluate(One(), parse_module(zn4, "0")).is_zero


class TestTextForm:
    """Test suite for the text and JSON forms of expressions."""

    def test_parse_nullary(self, zn4):
        """Test constants by name."""
        assert parse_preradical(zn4, "rad") == Rad()
        assert parse_preradical(zn4, "zero") == Zero()

    def test_parse_nested(self, zn4):
        """Test a nested expression and its printed form."""
        sigma = parse_preradical(zn4, "meet(trace(Z2), ideal(2))")
        assert isinstance(sigma, Meet)
        assert isinstance(sigma.args[1], IdealTRad)
        assert to_text(sigma) == "meet(trace(Z2),ideal(0,2))"

    def test_parse_leaf_with_generators(self, zn4, z4):
        """Test alpha with a generator list."""
        sigma = parse_preradical(zn4, "alpha(Z4:2)")
        assert evaluate(sigma, z4).size == 2

    @pytest.mark.parametrize("text", ["rad(", "unknown(rad)", "hat(rad,soc)", "ideal(9)", "ideal(x)"])
    def test_parse_errors(self, zn4, text):
        """Test malformed expressions."""
        with pytest.raises(SpecParseError):
            parse_preradical(zn4, text)

    def test_json_form(self, zn4, z4):
        """Test the constructor-tagged JSON form."""
        sigma = Colon(Trace(parse_module(zn4, "Z2")), Hat(Rad()))
        data = to_json(sigma)
        assert data["op"] == "colon"
        assert data["args"][0] == {"op": "trace", "module": "Z2"}
        assert evaluate(from_json(zn4, data), z4) == evaluate(sigma, z4)

    def test_json_unknown_constructor(self, zn4):
        """Test that unknown constructors are rejected."""
        with pytest.raises(SpecParseError):
            from_json(zn4, {"op": "nope"})
