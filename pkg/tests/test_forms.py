import pytest

from quintic.cyclo import CyclotomicInt
from quintic.errors import InvalidInput, NotFifthPowerFree
from quintic.forms import Form, classify, factor_rational, lambda_ramified
from quintic.residue import conductor


def test_factor_rational_examples():
    assert factor_rational(301) == [(7, 1), (43, 1)]
    assert factor_rational(3035) == [(5, 1), (607, 1)]
    with pytest.raises(NotFifthPowerFree):
        factor_rational(32)
    with pytest.raises(InvalidInput):
        factor_rational(1)


def test_classify_form1():
    c = classify(301)
    assert (c.form, c.q1, c.e1, c.q2) == (Form.FORM1, 7, 1, 43)
    assert c.congruences["q2_mod25"] == 18
    assert c.recompose() == 301


def test_classify_form1_higher_exponent():
    c = classify(7 * 7 * 43)
    assert (c.form, c.q1, c.e1, c.q2) == (Form.FORM1, 7, 2, 43)
    assert c.recompose() == 2107


def test_classify_form2():
    c = classify(35)
    assert (c.form, c.q1) == (Form.FORM2, 7)
    assert c.recompose() == 35


def test_classify_form3():
    c = classify(30)
    assert (c.form, c.q1, c.q2) == (Form.FORM3, 2, 3)
    # the non +-7 factor takes the q2 slot when only one qualifies
    c = classify(10105)  # 5 * 47 * 43, only 47 is away from +-7
    assert (c.form, c.q1, c.q2) == (Form.FORM3, 43, 47)


def test_classify_unsupported():
    assert classify(77).form is Form.UNSUPPORTED  # 11 = 1 (mod 5)
    assert classify(58).form is Form.UNSUPPORTED  # 29 = 4 (mod 5)
    assert classify(7 * 43 * 2).form is Form.UNSUPPORTED  # three factors, no 5
    assert classify(25 * 7).form is Form.UNSUPPORTED  # 5^2
    assert classify(5 * 7 * 43).form is Form.UNSUPPORTED  # both +-7 under form 3
    assert classify(2 * 3).form is Form.UNSUPPORTED  # fails mod-25 for form 1
    assert classify(13).form is Form.UNSUPPORTED  # single prime


def test_classify_deterministic_and_total(rng):
    for _ in range(200):
        n = rng.randrange(2, 10_000)
        try:
            c1, c2 = classify(n), classify(n)
        except NotFifthPowerFree:
            continue
        assert c1 == c2
        if c1.supported:
            assert c1.recompose() == n


def test_lambda_ramified_examples():
    assert lambda_ramified(301) is False  # 301 = 1 (mod 25)
    assert lambda_ramified(35) is True
    assert lambda_ramified(30) is True


def test_lambda_ramified_exhaustive_mod25():
    quartic_roots = {r for r in range(1, 25) if r % 5 and pow(r, 4, 25) == 1}
    assert quartic_roots == {1, 7, 18, 24}
    for r in range(1, 25):
        if r % 5 == 0:
            continue
        assert lambda_ramified(r + 25) is (r not in quartic_roots)


def test_lambda_shortcut_matches_residue_engine(rng):
    # the rational shortcut and the lambda^5 unit-power test must agree
    for _ in range(40):
        n = rng.randrange(2, 5000)
        try:
            factor_rational(n)
        except (NotFifthPowerFree, InvalidInput):
            continue
        assert conductor(CyclotomicInt(n)).lambda_ramified == lambda_ramified(n)


def test_form_constants():
    for n, expect_ram in ((301, False), (2051, False), (35, True), (30, True), (105, True)):
        assert lambda_ramified(n) is expect_ram
