"""Generic (opaque-symbol) and random-instance operator expansion identities."""

from __future__ import annotations

from mouldcalc.algebra import RationalFunction, x_var
from mouldcalc.generic import OpaqueMould, SymbolRegistry
from mouldcalc.moulds import canonical_word
from mouldcalc.verify import (
    _lazy_sang,
    _lazy_slang,
    generic_expansion_checks,
    random_expansion_checks,
)


def _assert_all_pass(checks):
    failures = [c for c in checks if c["status"] != "pass"]
    assert not failures, failures


def test_generic_expansions_all_pass():
    checks = generic_expansion_checks()
    assert len(checks) >= 30
    _assert_all_pass(checks)


def test_random_instance_expansions_all_pass():
    _assert_all_pass(random_expansion_checks(seed=99, rounds=2))


def test_opaque_symbols_are_per_word():
    reg = SymbolRegistry()
    A = OpaqueMould(reg, "A", 2)
    x1 = x_var(1)
    a = A.eval_word((x1,))
    b = A.eval_word((-x1,))
    assert a != b
    assert A.eval_word((x1,)) == a  # stable across calls
    assert A.eval_word(()) == RationalFunction.zero()
    S = OpaqueMould(reg, "S", 2, unit_value=1)
    assert S.eval_word(()) == RationalFunction.one()


def test_generic_slices_sum_to_singulator():
    # depth-2 identity slang_1 + slang_2 = sang for a fully generic input
    reg = SymbolRegistry()
    A = OpaqueMould(reg, "A", 2)
    w = canonical_word(2)
    total = _lazy_slang(1, A).eval_word(w) + _lazy_slang(2, A).eval_word(w)
    assert total == _lazy_sang(A).eval_word(w)


def test_wrong_display_is_caught():
    # sanity: the machinery can actually fail -- a deliberately wrong
    # right-hand side produces a nonzero residual
    reg = SymbolRegistry()
    M = OpaqueMould(reg, "M", 2)
    N = OpaqueMould(reg, "N", 2)
    from mouldcalc.flexions import lazy_arit

    x1, x2 = x_var(1), x_var(2)
    lhs = lazy_arit(N)(M).eval_word(canonical_word(2))
    wrong_rhs = M.eval_word((x1 + x2,)) * (
        N.eval_word((x1,)) + N.eval_word((x2,))
    )
    assert lhs != wrong_rhs
