import random
from fractions import Fraction

import pytest

from omegalie.fields import QQ, ExtensionRequired, PrimeField
from omegalie.linalg import (
    InconsistentSystem,
    Matrix,
    NotSkew,
    SingularMatrix,
    SkewForm,
    skew_congruence_reduce,
    sl2_trace_minus_one_canonical,
    solve_vector,
    standard_j,
)

F101 = PrimeField(101)


def _rand_matrix(field, n, rng, lo=-5, hi=5):
    if isinstance(field, PrimeField):
        return Matrix.from_rows(field, [[rng.randrange(field.p) for _ in range(n)]
                                        for _ in range(n)])
    return Matrix.from_rows(field, [[rng.randint(lo, hi) for _ in range(n)]
                                    for _ in range(n)])


def _rand_invertible(field, n, rng):
    while True:
        m = _rand_matrix(field, n, rng)
        if not m.det().is_zero():
            return m


def test_identity_det():
    assert Matrix.identity(QQ, 3).det() == QQ.one


def test_inverse_roundtrip_f101():
    rng = random.Random(2)
    for _ in range(20):
        m = _rand_invertible(F101, 5, rng)
        assert m * m.inverse() == Matrix.identity(F101, 5)


def test_solve_and_errors():
    a = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    x = solve_vector(a, (QQ.elem(5), QQ.elem(6)))
    assert a.apply(x) == (QQ.elem(5), QQ.elem(6))
    singular = Matrix.from_rows(QQ, [[1, 2], [2, 4]])
    with pytest.raises(InconsistentSystem):
        solve_vector(singular, (QQ.elem(1), QQ.elem(0)))
    with pytest.raises(SingularMatrix):
        solve_vector(singular, (QQ.elem(1), QQ.elem(2)))
    with pytest.raises(SingularMatrix):
        singular.inverse()


def test_rank():
    m = Matrix.from_rows(QQ, [[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert m.rank() == 2


def test_translation_system_determinant():
    # coefficient matrix of the translation system; its determinant is
    # (s1 s4 - s2 s3)(b1 c2 - b2 c1) * d for the generic block element
    rng = random.Random(3)
    for field in (QQ, F101):
        for _ in range(40):
            b = [field.elem(rng.randint(-6, 6)) for _ in range(3)]
            c = [field.elem(rng.randint(-6, 6)) for _ in range(3)]
            s1, s2, s3 = (field.elem(rng.randint(-4, 4)) for _ in range(3))
            if s1.is_zero():
                s1 = field.one
            s4 = (field.one + s2 * s3) / s1
            d = field.elem(rng.randint(1, 6))
            t = Matrix.from_rows(field, [
                [s3 * b[0] + s4 * c[0], -(s1 * b[0] + s2 * c[0]), field.zero],
                [s3 * b[1] + s4 * c[1], -(s1 * b[1] + s2 * c[1]), field.zero],
                [s3 * b[2] + s4 * c[2], -(s1 * b[2] + s2 * c[2]), d],
            ])
            delta = b[0] * c[1] - b[1] * c[0]
            assert t.det() == delta * d


def test_skewform_invariants():
    with pytest.raises(NotSkew):
        SkewForm(Matrix.from_rows(QQ, [[0, 1], [1, 0]]))
    with pytest.raises(NotSkew):
        SkewForm(Matrix.from_rows(QQ, [[1, 0], [0, 0]]))


def test_congruence_2x2_base_case():
    a = QQ.elem(Fraction(7, 2))
    form = SkewForm(Matrix.from_rows(QQ, [[QQ.zero, a], [-a, QQ.zero]]))
    res = skew_congruence_reduce(form)
    assert res.rank == 2
    assert res.q == Matrix.from_rows(QQ, [[QQ.one, QQ.zero],
                                          [QQ.zero, a.inverse()]])
    assert res.q.transpose() * form.matrix * res.q == standard_j(QQ, 2, 2)


def test_congruence_zero_matrix():
    form = SkewForm(Matrix.zeros(QQ, 4, 4))
    res = skew_congruence_reduce(form)
    assert res.rank == 0
    assert res.q == Matrix.identity(QQ, 4)


def _planted_skew(field, n, rank, rng):
    j = standard_j(field, n, rank)
    p = _rand_invertible(field, n, rng)
    return SkewForm(p.transpose() * j * p)


def test_congruence_planted_rank():
    rng = random.Random(5)
    for field in (QQ, F101):
        for _ in range(15):
            n = rng.randrange(2, 7)
            rank = 2 * rng.randrange(0, n // 2 + 1)
            form = _planted_skew(field, n, rank, rng)
            res = skew_congruence_reduce(form)
            assert res.rank == rank == form.matrix.rank()
            assert res.q.transpose() * form.matrix * res.q == standard_j(field, n, rank)
            assert not res.q.det().is_zero()


def test_sl2_jordan_representative_is_fixed():
    half = QQ.elem(Fraction(-1, 2))
    m = Matrix.from_rows(QQ, [[half, QQ.one], [QQ.zero, half]])
    res = sl2_trace_minus_one_canonical(m)
    assert res.kind == "jordan_half"
    assert res.p == Matrix.identity(QQ, 2)


def test_sl2_diagonal_already_canonical():
    b = QQ.elem(3)
    m = Matrix.from_rows(QQ, [[b, QQ.zero], [QQ.zero, -(b + 1)]])
    res = sl2_trace_minus_one_canonical(m)
    assert res.kind == "distinct"
    assert res.b == b
    assert res.p == Matrix.identity(QQ, 2)


def test_sl2_scalar_case():
    half = QQ.elem(Fraction(-1, 2))
    m = Matrix.from_rows(QQ, [[half, QQ.zero], [QQ.zero, half]])
    res = sl2_trace_minus_one_canonical(m)
    assert res.kind == "scalar_half"


def _rand_trace_minus_one(field, rng):
    a = field.elem(rng.randrange(field.p) if isinstance(field, PrimeField)
                   else rng.randint(-6, 6))
    b = field.elem(rng.randrange(field.p) if isinstance(field, PrimeField)
                   else rng.randint(-6, 6))
    c = field.elem(rng.randrange(field.p) if isinstance(field, PrimeField)
                   else rng.randint(-6, 6))
    return Matrix.from_rows(field, [[a, b], [c, -(a + field.one)]])


def test_sl2_randomized_conjugation_identity():
    rng = random.Random(9)
    for _ in range(60):
        m = _rand_trace_minus_one(F101, rng)
        res = sl2_trace_minus_one_canonical(m, allow_extension=True)
        p = res.p
        assert p.det() == p.field.one
        target = m if p.field == F101 else m.embed(p.field)
        assert p.inverse() * target * p == res.canonical_matrix()


def test_sl2_extension_required_flag():
    # det = 1 gives discriminant -3, not a square in Q
    m = Matrix.from_rows(QQ, [[QQ.zero, -QQ.one], [QQ.one, -QQ.one]])
    with pytest.raises(ExtensionRequired):
        sl2_trace_minus_one_canonical(m)
    res = sl2_trace_minus_one_canonical(m, allow_extension=True)
    assert res.kind == "distinct"
    assert res.extension is not None


def test_sl2_jordan_extension_square_root():
    # v = (2, 0), w = e2 gives det [v w] = 2: needs sqrt(2) over Q
    half = QQ.elem(Fraction(-1, 2))
    m = Matrix.from_rows(QQ, [[half, QQ.elem(2)], [QQ.zero, half]])
    with pytest.raises(ExtensionRequired):
        sl2_trace_minus_one_canonical(m)
    res = sl2_trace_minus_one_canonical(m, allow_extension=True)
    assert res.kind == "jordan_half"
    ext = res.p.field
    assert res.p.det() == ext.one
    assert res.p.inverse() * m.embed(ext) * res.p == res.canonical_matrix()


def test_gl2_square_det_conjugation_invariance():
    # conjugating by any g with square determinant does not change the
    # canonical class (kind, and the eigenvalue pair)
    rng = random.Random(21)
    done = 0
    while done < 40:
        m = _rand_trace_minus_one(F101, rng)
        g = _rand_matrix(F101, 2, rng)
        h = g * g  # det(h) = det(g)^2 is a square
        if h.det().is_zero():
            continue
        m2 = h.inverse() * m * h
        r1 = sl2_trace_minus_one_canonical(m, allow_extension=True)
        r2 = sl2_trace_minus_one_canonical(m2, allow_extension=True)
        assert r1.kind == r2.kind
        if r1.kind == "distinct":
            pair1 = {r1.b, -(r1.b + 1)}
            pair2 = {r2.b, -(r2.b + 1)}
            assert pair1 == pair2
        done += 1
