import random
from fractions import Fraction

import pytest

from minfol.errors import DomainError
from minfol.sl2z import (IntMatrix2, QuadraticIrrational, Periodic,
                         Parabolic, Anosov, classify, parabolic_normal_form,
                         periodic_points, GenToken, word_matrix,
                         decompose_st)

CAT = IntMatrix2(2, 1, 1, 1)
S = IntMatrix2(0, -1, 1, 0)
T = IntMatrix2(1, 1, 0, 1)


def shear(n):
    return IntMatrix2(1, n, 0, 1)


def random_word(rng, maxlen=20):
    toks = list(GenToken)
    return [rng.choice(toks) for _ in range(rng.randrange(0, maxlen + 1))]


# ------------------------------------------------------------ trichotomy


def test_classify_periodic_orders():
    assert classify(IntMatrix2.identity()) == Periodic(order=1)
    assert classify(-IntMatrix2.identity()) == Periodic(order=2)
    assert classify(S) == Periodic(order=4)
    # tr(ST) = 1 and tr(-ST) = -1
    assert classify(S * T) == Periodic(order=6)
    assert classify(-(S * T)) == Periodic(order=3)


def test_periodic_order_is_exact():
    rng = random.Random(11)
    seeds = [IntMatrix2.identity(), -IntMatrix2.identity(), S, -S,
             S * T, -(S * T), T * S, -(T * S)]
    for trial in range(200):
        P = word_matrix(random_word(rng, 10))
        A = P * rng.choice(seeds) * P.inverse()
        c = classify(A)
        assert isinstance(c, Periodic)
        assert A ** c.order == IntMatrix2.identity()
        for k in range(1, c.order):
            assert A ** k != IntMatrix2.identity()


def test_classify_parabolic():
    assert classify(T) == Parabolic(n=1, sign=1)
    assert classify(shear(-4)) == Parabolic(n=-4, sign=1)
    assert classify(-shear(3)) == Parabolic(n=3, sign=-1)
    c = classify(IntMatrix2(1, 0, 5, 1))
    assert isinstance(c, Parabolic) and c.sign == 1


def test_classify_anosov_cat_exact():
    c = classify(CAT)
    assert isinstance(c, Anosov)
    lam = c.stretch
    # the stretch satisfies x + 1/x = trace, exactly
    assert lam + lam.reciprocal() == 3
    assert lam > 1
    assert lam == QuadraticIrrational(3, 1, 5, 2)
    assert c.u_plus == QuadraticIrrational(-1, 1, 5, 2)
    assert c.u_minus == QuadraticIrrational(-1, -1, 5, 2)


def test_anosov_slopes_are_eigendirections():
    rng = random.Random(23)
    found = 0
    while found < 60:
        A = word_matrix(random_word(rng))
        if not isinstance(classify(A), Anosov):
            continue
        found += 1
        c = classify(A)
        sign = 1 if A.trace() > 0 else -1
        for u, mu in ((c.u_plus, c.stretch * sign),
                      (c.u_minus, c.stretch.reciprocal() * sign)):
            # A (1, u) = mu (1, u), coordinate by coordinate; for
            # negative traces the eigenvalues are -stretch, -1/stretch
            assert Fraction(A.a) + u * A.b == mu
            assert Fraction(A.c) + u * A.d == mu * u
        assert c.stretch > 1
        assert c.u_plus != c.u_minus


def test_classify_rejects_non_unimodular():
    with pytest.raises(DomainError):
        classify(IntMatrix2(2, 0, 0, 2))
    with pytest.raises(DomainError):
        classify(IntMatrix2(1, 0, 0, -1))


# ------------------------------------------------------- exact quadratics


def test_quadratic_irrational_arithmetic():
    lam = QuadraticIrrational(3, 1, 5, 2)
    assert (lam - Fraction(3, 2)) * (lam - Fraction(3, 2)) == Fraction(5, 4)
    assert lam * lam.conjugate() == 1
    assert (lam * lam.reciprocal()) == 1
    assert float(lam) == pytest.approx((3 + 5 ** 0.5) / 2)
    with pytest.raises(DomainError):
        lam.as_fraction()
    r = QuadraticIrrational(7, 0, 5, 3)
    assert r.is_rational() and r.as_fraction() == Fraction(7, 3)


def test_quadratic_irrational_ordering():
    lam = QuadraticIrrational(3, 1, 5, 2)
    assert 2 < lam < 3
    assert lam <= lam
    assert not (lam < lam)
    assert QuadraticIrrational(0, 1, 2) > Fraction(7, 5)
    assert QuadraticIrrational(0, 1, 2) < Fraction(3, 2)


# ----------------------------------------------------------- decomposing


def test_decompose_roundtrip_fuzz():
    rng = random.Random(4)
    for trial in range(1000):
        word = random_word(rng)
        A = word_matrix(word)
        back = decompose_st(A)
        assert word_matrix(back) == A


def test_decompose_generators_themselves():
    for A in (IntMatrix2.identity(), S, T, T.inverse(),
              -IntMatrix2.identity(), CAT, CAT.inverse()):
        assert word_matrix(decompose_st(A)) == A


# ------------------------------------------------------ parabolic shears


def test_parabolic_normal_form_fixed_examples():
    n, P = parabolic_normal_form(T)
    assert n == 1 and P.inverse() * T * P == shear(1)
    A = IntMatrix2(1, 0, -3, 1)
    n, P = parabolic_normal_form(A)
    assert P.inverse() * A * P == shear(n)


def test_parabolic_normal_form_conjugation_invariant():
    # n is a full conjugacy invariant, so the recovered shear matches
    # the one the matrix was built from
    rng = random.Random(5)
    for trial in range(300):
        n = rng.choice([x for x in range(-6, 7) if x != 0])
        P = word_matrix(random_word(rng, 12))
        A = P * shear(n) * P.inverse()
        m, Q = parabolic_normal_form(A)
        assert m == n
        assert Q.det() == 1
        assert Q.inverse() * A * Q == shear(m)


def test_parabolic_normal_form_rejects_wrong_trace():
    with pytest.raises(DomainError):
        parabolic_normal_form(IntMatrix2.identity())
    with pytest.raises(DomainError):
        parabolic_normal_form(-T)
    with pytest.raises(DomainError):
        parabolic_normal_form(CAT)


# -------------------------------------------------------- periodic points


def brute_force_periodic(A, n):
    """Every point fixed by A^n has denominator dividing
    N = |det(A^n - I)|, so the N x N rational lattice is exhaustive."""
    An = A ** n
    N = abs((An.a - 1) * (An.d - 1) - An.b * An.c)
    pts = set()
    for i in range(N):
        for j in range(N):
            x = (Fraction(i, N), Fraction(j, N))
            y = An.apply(x)
            if (y[0] - x[0]).denominator == 1 and \
               (y[1] - x[1]).denominator == 1:
                pts.add(x)
    return N, sorted(pts)


def test_periodic_points_cat_small_periods():
    count, pts = periodic_points(CAT, 1)
    assert count == 1 and pts == [(Fraction(0), Fraction(0))]
    count, pts = periodic_points(CAT, 2)
    assert count == 5
    assert pts == brute_force_periodic(CAT, 2)[1]


def test_periodic_points_match_brute_force():
    cases = [(CAT, 1), (CAT, 2), (CAT, 3), (CAT, 4),
             (IntMatrix2(3, 2, 1, 1), 1), (IntMatrix2(3, 2, 1, 1), 2),
             (IntMatrix2(2, 3, 1, 2), 1), (IntMatrix2(5, 2, 2, 1), 1)]
    for A, n in cases:
        count, pts = periodic_points(A, n)
        bn, bpts = brute_force_periodic(A, n)
        assert count == bn
        assert pts == bpts


def test_periodic_points_fixed_point_example():
    # (3 2; 1 1) fixes exactly (0, 0) and (0, 1/2)
    count, pts = periodic_points(IntMatrix2(3, 2, 1, 1), 1)
    assert count == 2
    assert pts == [(Fraction(0), Fraction(0)),
                   (Fraction(0), Fraction(1, 2))]


def test_periodic_point_count_is_lefschetz_number():
    for A in (CAT, IntMatrix2(3, 2, 1, 1), IntMatrix2(5, 2, 2, 1)):
        lam = float(classify(A).stretch)
        sign = 1 if A.trace() > 0 else -1
        for n in range(1, 7):
            count, pts = periodic_points(A, n)
            tr_n = (A ** n).trace()
            assert count == abs(2 - tr_n)
            if sign > 0:
                assert count == pytest.approx(lam ** n + lam ** -n - 2)
            assert len(pts) == count


def test_periodic_points_rejects_non_anosov():
    with pytest.raises(DomainError):
        periodic_points(T, 1)
    with pytest.raises(DomainError):
        periodic_points(S, 2)
    with pytest.raises(DomainError):
        periodic_points(CAT, 0)


def test_periodic_points_grow_along_divisors():
    # fixed points of A^m are fixed points of A^n whenever m | n
    for n in (2, 3, 4, 6):
        _, big = periodic_points(CAT, n)
        for m in (d for d in range(1, n) if n % d == 0):
            _, small = periodic_points(CAT, m)
            assert set(small) <= set(big)


# ------------------------------------------------------------- matrices


def test_matrix_parse_and_power():
    A = IntMatrix2.from_string("2 1 1 1")
    assert A == CAT
    assert A ** 0 == IntMatrix2.identity()
    assert A ** -2 == (A.inverse()) ** 2
    assert (A * A.inverse()) == IntMatrix2.identity()
    with pytest.raises(DomainError):
        IntMatrix2.from_string("1 2 3")


def test_word_matrix_composes_right_to_left():
    # leftmost token acts last: word (T, S) is the matrix T * S
    assert word_matrix([GenToken.T, GenToken.S]) == T * S
    assert word_matrix([]) == IntMatrix2.identity()
