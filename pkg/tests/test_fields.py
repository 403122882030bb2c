"""Exact linear algebra over the rationals and a big prime field."""

from fractions import Fraction

import numpy as np
import pytest

from biproj.errors import BadField
from biproj.fields import GFP, QQ, PrimeField, default_field, field_by_name


FIELDS = [QQ, GFP, PrimeField(101)]


def _matvec(field, A, x):
    out = []
    for r in range(A.shape[0]):
        acc = field.scalar(0)
        for c in range(A.shape[1]):
            acc = acc + field.mul(A[r, c], x[c]) if field.kind == "rationals" \
                else (acc + A[r, c] * x[c]) % field.p
        out.append(acc)
    return out


@pytest.mark.parametrize("field", FIELDS)
def test_rref_rank_known_matrix(field):
    A = field.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    ech = field.rref(A)
    assert field.rank(A) == 2
    assert len(ech.pivots) == 2
    # pivots are unit columns
    for r, c in enumerate(ech.pivots):
        col = ech.rows[:, c]
        assert col[r] == field.scalar(1)
        assert all(col[k] == field.scalar(0) for k in range(len(ech.pivots)) if k != r)


@pytest.mark.parametrize("field", FIELDS)
def test_nullspace_annihilates(field):
    A = field.array([[1, 2, 3, 0], [0, 1, 1, 1]])
    ns = field.nullspace(A)
    assert ns.shape[0] == 2
    for row in ns:
        assert all(v == field.scalar(0) for v in _matvec(field, A, row))


@pytest.mark.parametrize("field", FIELDS)
def test_reduce_rows_clears_span(field):
    A = field.array([[1, 1, 0], [0, 1, 1]])
    ech = field.rref(A)
    W = field.array([[2, 3, 1], [1, 2, 1]])  # both in the row span
    red = field.reduce_rows(W, ech)
    assert not (red != 0).any()


def test_rationals_scalar_parses_fraction_strings():
    assert QQ.scalar("7/3") == Fraction(7, 3)
    assert QQ.scalar(5) == Fraction(5)


def test_rationals_exactness():
    # 1/3 * 3 == 1 exactly; floats would not survive rref pivoting
    A = QQ.array([[Fraction(1, 3), 1], [1, 3]])
    assert QQ.rank(A) == 1


def test_prime_field_fraction_conversion():
    f = PrimeField(7)
    x = f.scalar(Fraction(1, 3))
    assert (x * 3) % 7 == 1
    with pytest.raises(BadField):
        f.scalar(Fraction(1, 7))  # denominator vanishes mod p


def test_prime_field_param_collision():
    f = PrimeField(5)
    with pytest.raises(BadField):
        f.convert_params((0, 1, 5))  # 5 == 0 mod 5


def test_field_by_name():
    assert field_by_name("rationals") is QQ
    assert field_by_name("qq") is QQ
    assert field_by_name("prime") is GFP
    assert field_by_name("prime:101").p == 101
    assert field_by_name("auto") is None
    with pytest.raises(ValueError):
        field_by_name("float64")


def test_default_field_policy():
    assert default_field(30) is QQ
    assert default_field(31) is GFP


@pytest.mark.parametrize("field", FIELDS)
def test_random_rank_agreement(field):
    # ranks over any exact field agree for small generic integer matrices
    rng = np.random.default_rng(3)
    for _ in range(20):
        A = rng.integers(-4, 5, size=(5, 7))
        expected = np.linalg.matrix_rank(A.astype(float))
        assert field.rank(field.array(A.tolist())) == expected
