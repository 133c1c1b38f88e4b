import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmbruhat.errors import (
    AsymmetricZero,
    DiagonalNotTwo,
    DimensionMismatch,
    InvalidRealization,
    ParseError,
    PositiveOffDiagonal,
)
from kmbruhat.root_datum import (
    build_minimal_realization,
    datum_from_cartan,
    format_datum,
    height,
    load_datum,
    pair,
    parse_cartan,
    parse_datum,
    validate_gcm,
)

from conftest import A1, A2, AFFINE_A1, HYPERBOLIC

MATRICES = [A1, A2, HYPERBOLIC, AFFINE_A1, [[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [[2, -4], [-1, 2]]]


def test_validate_rank_one():
    assert validate_gcm([[2]]).size == 1


def test_validate_hyperbolic():
    gcm = validate_gcm(HYPERBOLIC)
    assert gcm.size == 2 and gcm[(0, 1)] == -3


def test_positive_off_diagonal_names_position():
    with pytest.raises(PositiveOffDiagonal, match=r"\(1,2\)"):
        validate_gcm([[2, 1], [1, 2]])


def test_diagonal_not_two():
    with pytest.raises(DiagonalNotTwo):
        validate_gcm([[3, -1], [-1, 2]])


def test_asymmetric_zero():
    with pytest.raises(AsymmetricZero):
        validate_gcm([[2, 0], [-1, 2]])


def test_non_square_matrix():
    with pytest.raises(DimensionMismatch):
        validate_gcm([[2, -1], [-1]])


def test_hyperbolic_realization_is_two_dimensional(hyp):
    assert hyp.lattice_rank == 2
    assert hyp.simple_roots == ((2, -2), (-3, 2))


def test_affine_realization_has_extra_dimension(aff):
    assert aff.lattice_rank == 3
    assert aff.gcm.corank == 1


def test_rank_one_realization(a1):
    assert a1.lattice_rank == 1
    assert a1.simple_coroots == ((1,),)
    assert a1.simple_roots == ((2,),)
    assert a1.fundamental_weights == ((1,),)


@pytest.mark.parametrize("matrix", MATRICES)
def test_realization_axioms(matrix):
    d = build_minimal_realization(validate_gcm(matrix))
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            assert pair(d.simple_coroots[i], d.simple_roots[j]) == matrix[i][j]
            assert pair(d.simple_coroots[i], d.fundamental_weights[j]) == int(i == j)
    assert d.rho == tuple(map(sum, zip(*d.fundamental_weights)))


def test_pair_zero_and_dimension_check(hyp):
    assert pair((0, 0), hyp.simple_roots[0]) == 0
    with pytest.raises(DimensionMismatch):
        pair((1, 0, 0), (1, 1))


def test_height_examples(hyp, a2):
    assert height(hyp, (1, 0)) == height(hyp, (0, 1)) == 1
    assert height(hyp, (0, 0)) == 0
    assert height(a2, (3, 2)) == height(hyp, (3, 2)) == 5


@given(st.lists(st.integers(-50, 50), min_size=4, max_size=4))
def test_height_is_linear(coords):
    d = datum_from_cartan(HYPERBOLIC)
    lam, mu = tuple(coords[:2]), tuple(coords[2:])
    total = tuple(a + b for a, b in zip(lam, mu))
    assert height(d, total) == height(d, lam) + height(d, mu)


def test_parse_cartan():
    assert parse_cartan("2,-3;-2,2").entries == ((2, -3), (-2, 2))
    with pytest.raises(ParseError):
        parse_cartan("2,x;-2,2")


@pytest.mark.parametrize("matrix", MATRICES)
def test_datum_text_round_trip(matrix):
    d = datum_from_cartan(matrix)
    assert parse_datum(format_datum(d)) == d


def test_datum_file_with_comments_and_defaults(tmp_path):
    path = tmp_path / "hyp.datum"
    path.write_text("# hyperbolic\nrow 2 -3\nrow -2 2  # second row\n")
    assert load_datum(path) == datum_from_cartan(HYPERBOLIC)


def test_explicit_realization_must_be_independent():
    text = "row 2 -2\nrow -2 2\nlattice_rank 2\ncoroot 1 0\ncoroot 0 1\nroot 2 -2\nroot -2 2\nweight 1 0\nweight 0 1\n"
    with pytest.raises(InvalidRealization):
        parse_datum(text)


def test_unknown_keyword():
    with pytest.raises(ParseError, match="line 2"):
        parse_datum("row 2\nbogus 1\n")
