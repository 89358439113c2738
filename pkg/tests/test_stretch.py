from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from kronsat.core import KronTriple, QuasiPolynomial
from kronsat.errors import FitMismatch, InsufficientSamples, OracleOverflow, ShapeDecompositionError
from kronsat.stretch import (
    ExceededCap,
    StretchSamples,
    analyze_triple,
    check_strong_ph2,
    check_strong_sh,
    decompose_shape,
    fit_quasipolynomial,
    is_saturated,
    positive_on,
    positivity_index,
    sample_stretch,
    saturation_index,
)

CEX = KronTriple.parse("6,4,2", "6,6", "7,5")
PH2 = KronTriple.parse("10,6,2", "10,8", "11,7")


def test_sample_stretch_methods_agree():
    s = sample_stretch(CEX, 6)
    assert s.method == "rosas"
    assert s.as_list() == [0, 2, 1, 3, 2, 4]
    small = KronTriple.parse("2,1", "2,1", "2,1")
    assert sample_stretch(small, 4, method="oracle").as_list() == sample_stretch(small, 4, cross_check=True).as_list()


def test_sample_stretch_oracle_limit():
    with pytest.raises(OracleOverflow):
        sample_stretch(KronTriple.parse("2,1,1", "2,1,1", "3,1"), 6)


def test_fit_counter_example():
    f = fit_quasipolynomial(sample_stretch(CEX, 8))
    assert f.branches == ((F(-1, 2), F(1, 2)), (F(1), F(1, 2)))
    assert not check_strong_sh(f)
    assert not check_strong_ph2(f)


def test_fit_needs_samples():
    with pytest.raises(InsufficientSamples):
        fit_quasipolynomial(sample_stretch(CEX, 7))


def test_fit_detects_wrong_model():
    s = StretchSamples(CEX, tuple(enumerate([1, 2, 4, 8, 16, 32, 64, 128], 1)))
    with pytest.raises(FitMismatch, match="degree"):
        fit_quasipolynomial(s)


def test_analyze_ph2_example():
    r = analyze_triple(PH2)
    assert r.quasipolynomial.branches == ((F(-1, 4), F(3, 2), F(7, 4)), (F(1), F(3, 2), F(7, 4)))
    assert r.strong_sh_holds and not r.strong_ph2_holds
    assert r.saturation_index == 0
    assert r.positivity_index == 1
    assert (r.shape.Q, r.shape.L, r.shape.delta_even, r.shape.delta_odd) == (7, 3, 1, F(-1, 4))


def test_indices_of_counter_example():
    r = analyze_triple(CEX)
    assert (r.saturation_index, r.positivity_index) == (1, 1)
    js = r.to_json()
    assert js["strong_sh"] is False and js["positivity_index"] == 1


def test_saturation_domains_differ():
    # odd branch -1 + N is zero at 1 and positive beyond; even branch 3 - N dies at 4
    f = QuasiPolynomial(((-1, 1), (3, -1)))
    assert not is_saturated(f, "all")
    assert not is_saturated(f, "class")
    g = QuasiPolynomial(((1,), (F(5, 2), F(-1, 2))))  # even branch positive only at N = 2, 4
    assert not is_saturated(g, "all")
    assert not is_saturated(g, "class")
    h = QuasiPolynomial(((1,), (-1, 1)))  # even branch vanishes at N = 1 only
    assert not is_saturated(h, "all")
    assert is_saturated(h, "class")
    with pytest.raises(ValueError):
        is_saturated(h, "odd")


def test_exceeded_cap():
    f = QuasiPolynomial(((1, -1),))
    assert saturation_index(f, cap=5) == ExceededCap(5)
    assert positivity_index(f, cap=5) == ExceededCap(5)
    assert ExceededCap(5).to_json() == {"exceeded_cap": 5}


def test_positive_on_uses_root_bound():
    assert positive_on((F(1), F(-10), F(1)), None) is False
    assert positive_on((F(30), F(-10), F(1)), None) is True
    assert positive_on((), None) is False


def test_decompose_shape_errors():
    with pytest.raises(ShapeDecompositionError):
        decompose_shape(QuasiPolynomial(((0, 1), (0, 2))))
    with pytest.raises(ShapeDecompositionError):
        decompose_shape(QuasiPolynomial(((0, 1), (1, 1), (2, 1))))
    s = decompose_shape(QuasiPolynomial(((F(1), F(1, 2)),)))
    assert (s.Q, s.L, s.delta_even, s.delta_odd) == (0, 1, 1, 1)


qp = st.lists(
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=3),
    min_size=1,
    max_size=3,
).map(lambda bs: QuasiPolynomial(tuple(tuple(b) for b in bs)))


@settings(max_examples=200)
@given(qp)
def test_ph2_implies_sh(f):
    if check_strong_ph2(f):
        assert check_strong_sh(f)


@settings(max_examples=100, deadline=None)
@given(qp)
def test_indices_are_minimal(f):
    p = positivity_index(f, cap=20)
    if not isinstance(p, ExceededCap):
        assert check_strong_ph2(f.shift(p))
        assert all(not check_strong_ph2(f.shift(c)) for c in range(p))
    s = saturation_index(f, cap=20)
    if not isinstance(s, ExceededCap):
        assert is_saturated(f.shift(s))


def test_shape_coefficients_nonnegative_and_fit_consistent():
    from kronsat.hunt import SearchBox

    for t in SearchBox(7).triples():
        s = sample_stretch(t, 8)
        f = fit_quasipolynomial(s)
        assert all(f(N) == v for N, v in s.values)
        shape = decompose_shape(f)
        assert shape.Q >= 0 and shape.L >= 0
