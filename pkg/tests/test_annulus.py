import pytest
from hypothesis import given, settings, strategies as st

from rootcurves.annulus import (
    AnnulusCurve,
    Unsupported,
    annulus_geometric_pair,
    annulus_geometric_self,
    build_gamma,
    dimension_vector,
    formula_value,
    int_annulus,
    self_int_annulus,
    theorem_covered,
)
from rootcurves.root_system import Root, enumerate_positive_real, simple_root


@pytest.mark.parametrize(
    "v, kind, start, end, winding",
    [
        ((1, 2, 1), "type1", 1, 1, 1),
        ((3, 2, 2), "schur_left", 3, 2, 2),
        ((2, 2, 1, 2), "type2", 3, 3, 1),
        ((1, 1, 2, 2), "schur_right", 4, 2, 1),
    ],
)
def test_build_gamma(v, kind, start, end, winding):
    g = build_gamma(v)
    assert (g.kind, g.start, g.end, g.winding) == (kind, start, end, winding)


def test_build_gamma_rejects_imaginary():
    with pytest.raises(ValueError):
        build_gamma((2, 2, 2))


def test_curve_validation():
    with pytest.raises(ValueError):
        AnnulusCurve(3, "type1", 4, 1, 0, 1, Root((0, 1, 0)))
    with pytest.raises(ValueError):
        AnnulusCurve(3, "type1", 1, 1, -1, 1, Root((0, 1, 0)))


@pytest.mark.parametrize("v", [(2, 2, 1, 2), (3, 2, 2), (1, 0, 0, 0), (0, 0, 0, 1)])
def test_dimension_vector_examples(v):
    assert dimension_vector(build_gamma(v)) == v


@pytest.mark.parametrize("n", range(3, 7))
def test_dimension_vector_sweep(n):
    for v, _ in enumerate_positive_real(n, 4):
        assert dimension_vector(build_gamma(v)) == v


def test_int_examples():
    assert int_annulus(build_gamma((1, 2, 1)), build_gamma((3, 4, 3))) == 2
    assert int_annulus(build_gamma((1, 1, 0)), build_gamma((2, 2, 1))) == 0
    g = build_gamma((1, 2, 1))
    assert int_annulus(g, g) == 2
    assert self_int_annulus(g) == 1


def test_self_int_examples():
    assert self_int_annulus(build_gamma(simple_root(4, 2))) == 0
    # Schur curves are simple arcs whatever their winding
    assert self_int_annulus(build_gamma((3, 3, 2, 2))) == 0
    assert annulus_geometric_self(build_gamma((3, 3, 2, 2))) == 0


@pytest.mark.parametrize(
    "a, b",
    [
        ((1, 2, 1), (2, 2, 1)),          # mixed classes
        ((0, 1, 1, 0), (1, 1, 2, 1)),    # type 1, different shapes
        ((1, 0, 0), (4, 3, 3)),          # Schur with lambda = n
    ],
)
def test_unsupported_pairs(a, b):
    assert int_annulus(build_gamma(a), build_gamma(b)) is Unsupported
    assert not theorem_covered(a, b)
    assert formula_value(a, b) is None


def test_unsupported_marker():
    assert not Unsupported and str(Unsupported) == "unsupported"


def test_mismatched_n():
    with pytest.raises(ValueError):
        int_annulus(build_gamma((1, 2, 1)), build_gamma((1, 2, 1, 1)))


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 5), st.data())
def test_symmetry_and_doubling(n, data):
    roots = [v for v, _ in enumerate_positive_real(n, 2)]
    v = data.draw(st.sampled_from(roots))
    lam = data.draw(st.integers(0, 3))
    w = tuple(x + lam for x in v)
    ga, gb = build_gamma(v), build_gamma(w)
    assert int_annulus(ga, gb) == int_annulus(gb, ga)
    assert int_annulus(ga, ga) == 2 * self_int_annulus(ga)
    assert annulus_geometric_pair(ga, ga) == 2 * annulus_geometric_self(ga)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_formula_agrees_with_drawing(n):
    for v, _ in enumerate_positive_real(n, 2):
        for lam in range(4):
            w = tuple(x + lam for x in v)
            f = formula_value(v, w)
            if f is not None:
                assert annulus_geometric_pair(build_gamma(v), build_gamma(w)) == f
