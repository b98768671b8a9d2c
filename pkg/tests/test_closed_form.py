import pytest

from gwsym import (GF, RR, binom_gen, chi_sym_closed, chi_sym_closed_pm, chi_sym_closed_second,
                   gen, is_equal, pm, rank_formula, render, signature)
from gwsym.gw import GWElement


def test_binom_gen_negative_top():
    assert binom_gen(-2, 3) == -4
    assert binom_gen(-2, 0) == 1
    assert binom_gen(4, 5) == 0
    assert binom_gen(6, 2) == 15


def test_examples():
    assert render(chi_sym_closed_second(3, 2)) == "2<1> + 4<-1>"
    assert is_equal(chi_sym_closed(3, 2), pm(2, 4))
    assert chi_sym_closed(2, 3) == GWElement.zero()
    assert chi_sym_closed(0, 0) == gen(1)


def test_projective_line_powers():
    # Sym^n P^1 = P^n, whose class is sum of <(-1)^i>
    for n in range(7):
        expected = pm(n // 2 + 1, (n + 1) // 2)
        assert is_equal(chi_sym_closed(0, n), expected)


@pytest.mark.parametrize("g", range(8))
@pytest.mark.parametrize("n", range(11))
def test_two_forms_agree(g, n):
    assert is_equal(chi_sym_closed(g, n), chi_sym_closed_second(g, n))
    plus, minus = chi_sym_closed_pm(g, n)
    assert plus + minus == rank_formula(g, n)


def test_other_fields():
    assert signature(chi_sym_closed(3, 2, RR)) == -2
    assert chi_sym_closed(3, 2, GF(5)).rank == 6


def test_negative_input():
    with pytest.raises(ValueError):
        chi_sym_closed(-1, 2)
