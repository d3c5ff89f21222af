"""Integer 2x2 matrices of determinant one, exactly.

The trace sorts these into three dynamical classes: finite order
(|tr| < 2, together with +-identity), a shear up to conjugacy
(|tr| = 2), and hyperbolic toral automorphisms (|tr| > 2).  The
hyperbolic case carries a stretch factor lambda > 1 with
lambda + 1/lambda = |tr| and a pair of irrational eigendirections;
both are kept as exact quadratic irrationals, never floats.

Conventions: matrices act on column vectors; products read left to
right as usual matrix products; S = (0 -1; 1 0) and T = (1 1; 0 1)
generate the group together with -I.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError
from .intlinalg import smith_normal_form


@dataclass(frozen=True)
class IntMatrix2:
    a: int
    b: int
    c: int
    d: int

    @staticmethod
    def identity():
        return IntMatrix2(1, 0, 0, 1)

    @staticmethod
    def from_string(text):
        """Parse "a b c d" (row major; commas allowed)."""
        parts = [s for s in text.replace(",", " ").split() if s]
        if len(parts) != 4:
            raise DomainError("matrix needs four integers, got %r" % text)
        try:
            a, b, c, d = (int(s) for s in parts)
        except ValueError:
            raise DomainError("matrix entries must be integers: %r" % text)
        return IntMatrix2(a, b, c, d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def __mul__(self, other):
        return IntMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self):
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = IntMatrix2.identity()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if self.det() != 1:
            raise DomainError("inverse needs determinant 1")
        return IntMatrix2(self.d, -self.b, -self.c, self.a)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def apply(self, v):
        """Image of a column vector (pair)."""
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __str__(self):
        return "(%d %d; %d %d)" % (self.a, self.b, self.c, self.d)


S_MAT = IntMatrix2(0, -1, 1, 0)
T_MAT = IntMatrix2(1, 1, 0, 1)


def _split_square(n):
    """n = s*s*r with r squarefree; returns (s, r)."""
    s, r, d = 1, 1, 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            r *= d
        d += 1
    return s, r * n


class QuadraticIrrational:
    """Exact number (p + q*sqrt(root))/den with integers p, q, den > 0.

    root is kept squarefree; rationals are the root = 0, q = 0 case.
    Supports enough arithmetic for stretch factors and eigendirection
    slopes: +, -, *, /, reciprocal, exact comparison, conjugation.
    """

    __slots__ = ("p", "q", "root", "den")

    def __init__(self, p, q=0, root=0, den=1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if root < 0:
            raise DomainError("negative discriminant")
        if q == 0 or root == 0:
            q, root = 0, 0
        else:
            s, r = _split_square(root)
            if r == 1:
                p, q, root = p + q * s, 0, 0
            else:
                q, root = q * s, r
        if den < 0:
            p, q, den = -p, -q, -den
        g = gcd(gcd(abs(p), abs(q)), den)
        if g > 1:
            p, q, den = p // g, q // g, den // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("immutable")

    @staticmethod
    def _coerce(x, root):
        if isinstance(x, QuadraticIrrational):
            return x
        f = Fraction(x)
        return QuadraticIrrational(f.numerator, 0, 0, f.denominator)

    def _pair(self, other):
        other = self._coerce(other, self.root)
        if self.root and other.root and self.root != other.root:
            raise DomainError("incompatible radicals %d and %d"
                              % (self.root, other.root))
        return other, self.root or other.root

    def __add__(self, other):
        o, root = self._pair(other)
        return QuadraticIrrational(
            self.p * o.den + o.p * self.den,
            self.q * o.den + o.q * self.den,
            root, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticIrrational(-self.p, -self.q, self.root, self.den)

    def __sub__(self, other):
        o, _ = self._pair(other)
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o, root = self._pair(other)
        return QuadraticIrrational(
            self.p * o.p + self.q * o.q * root,
            self.p * o.q + self.q * o.p,
            root, self.den * o.den)

    __rmul__ = __mul__

    def reciprocal(self):
        norm = self.p * self.p - self.q * self.q * self.root
        if norm == 0:
            raise ZeroDivisionError("reciprocal of zero")
        return QuadraticIrrational(
            self.den * self.p, -self.den * self.q, self.root, norm)

    def __truediv__(self, other):
        o, _ = self._pair(other)
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o, _ = self._pair(other)
        return o * self.reciprocal()

    def conjugate(self):
        return QuadraticIrrational(self.p, -self.q, self.root, self.den)

    def sign(self):
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # mixed signs: compare p^2 against q^2 * root on the positive side
        lhs, rhs = p * p, q * q * self.root
        if p > 0:
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def is_rational(self):
        return self.q == 0

    def as_fraction(self):
        if not self.is_rational():
            raise DomainError("not rational: %s" % self)
        return Fraction(self.p, self.den)

    def __eq__(self, other):
        try:
            o, root = self._pair(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.p * o.den == o.p * self.den
                and self.q * o.den == o.q * self.den)

    def __hash__(self):
        return hash((self.p, self.q, self.root, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return (self.p + self.q * isqrt(self.root * 10**24) / 10**12) / self.den

    def __str__(self):
        if self.q == 0:
            return str(Fraction(self.p, self.den))
        core = "%d%+d*sqrt(%d)" % (self.p, self.q, self.root)
        if self.p == 0:
            core = "%d*sqrt(%d)" % (self.q, self.root)
        return core if self.den == 1 else "(%s)/%d" % (core, self.den)

    def __repr__(self):
        return ("QuadraticIrrational(%d, %d, %d, %d)"
                % (self.p, self.q, self.root, self.den))

    def to_json(self):
        return {"p": self.p, "q": self.q, "root": self.root,
                "den": self.den, "decimal": float(self), "exact": True}


@dataclass(frozen=True)
class Periodic:
    """Finite order; the order divides 12."""
    order: int

    def to_json(self):
        return {"kind": "periodic", "order": self.order}


@dataclass(frozen=True)
class Parabolic:
    """sign * A is conjugate in the group to the shear (1 n; 0 1)."""
    n: int
    sign: int

    def to_json(self):
        return {"kind": "parabolic", "n": self.n, "sign": self.sign}


@dataclass(frozen=True)
class Anosov:
    """Hyperbolic: stretch > 1, expanding/contracting direction slopes."""
    stretch: QuadraticIrrational
    u_plus: QuadraticIrrational
    u_minus: QuadraticIrrational

    def to_json(self):
        return {"kind": "anosov", "stretch": self.stretch.to_json(),
                "u_plus": self.u_plus.to_json(),
                "u_minus": self.u_minus.to_json()}


def _check_sl2z(A):
    if A.det() != 1:
        raise DomainError("determinant is %d, need 1" % A.det())


def classify(A):
    """Trace trichotomy for a determinant-one integer matrix.

    |tr| < 2 (and +-I) give Periodic with order in {1, 2, 3, 4, 6};
    |tr| = 2 otherwise gives Parabolic with its shear parameter;
    |tr| > 2 gives Anosov with exact stretch factor and eigendirection
    slopes.
    """
    _check_sl2z(A)
    t = A.trace()
    if abs(t) < 2:
        return Periodic({-1: 3, 0: 4, 1: 6}[t])
    if abs(t) == 2:
        if A == IntMatrix2.identity():
            return Periodic(1)
        if A == -IntMatrix2.identity():
            return Periodic(2)
        sign = 1 if t == 2 else -1
        n, _ = parabolic_normal_form(A if sign == 1 else -A)
        return Parabolic(n=n, sign=sign)
    disc = t * t - 4
    stretch = QuadraticIrrational(abs(t), 1, disc, 2)
    eps = 1 if t > 0 else -1
    mu_plus = QuadraticIrrational(t, eps, disc, 2)
    mu_minus = QuadraticIrrational(t, -eps, disc, 2)
    # b = 0 with det 1 forces a = d = +-1, so |tr| = 2; hyperbolic
    # matrices always have b != 0 and finite slopes.
    assert A.b != 0
    u_plus = (mu_plus - A.a) / Fraction(A.b)
    u_minus = (mu_minus - A.a) / Fraction(A.b)
    return Anosov(stretch=stretch, u_plus=u_plus, u_minus=u_minus)


def parabolic_normal_form(A):
    """For trace 2, A != I: returns (n, P) with P in the group and
    P^-1 A P = (1 n; 0 1).

    The fixed direction of A is an integer eigenvector; completing it
    to a unimodular basis conjugates A into the shear."""
    _check_sl2z(A)
    if A.trace() != 2 or A == IntMatrix2.identity():
        raise DomainError("normal form needs trace 2 and A != I")
    # primitive integer vector with (A - I) w = 0
    if A.b != 0 or A.a != 1:
        w = (A.b, 1 - A.a)
    else:
        w = (A.d - 1, -A.c)
    g = gcd(abs(w[0]), abs(w[1]))
    w = (w[0] // g, w[1] // g)
    if w[0] < 0 or (w[0] == 0 and w[1] < 0):
        w = (-w[0], -w[1])
    u = _complete_unimodular(w)
    P = IntMatrix2(w[0], u[0], w[1], u[1])
    N = P.inverse() * A * P
    assert (N.a, N.c, N.d) == (1, 0, 1) and N.b != 0
    return N.b, P


def _complete_unimodular(w):
    """u with w[0]*u[1] - w[1]*u[0] = 1 (w primitive)."""
    x, y = w
    # extended gcd on (x, y)
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        qq = old_r // r
        old_r, r = r, old_r - qq * r
        old_s, s = s, old_s - qq * s
        old_t, t = t, old_t - qq * t
    assert old_r in (1, -1)
    # old_s * x + old_t * y = old_r
    if old_r == 1:
        return (-old_t, old_s)
    return (old_t, -old_s)


def periodic_points(A, n):
    """Points of the torus (Q/Z)^2 fixed by A^n, for Anosov A.

    Returns (count, points) with count = |det(A^n - I)| and points a
    sorted list of Fraction pairs in [0, 1).  Solved exactly through
    the Smith normal form of A^n - I.
    """
    _check_sl2z(A)
    if n < 1:
        raise DomainError("period must be at least 1")
    if not isinstance(classify(A), Anosov):
        raise DomainError("periodic point counting needs an Anosov matrix; "
                          "det(A^n - I) vanishes in the other classes")
    An = A ** n
    B = [[An.a - 1, An.b], [An.c, An.d - 1]]
    det = B[0][0] * B[1][1] - B[0][1] * B[1][0]
    count = abs(det)
    assert count > 0
    U, D, V = smith_normal_form(B)
    d1, d2 = D[0][0], D[1][1]
    assert d1 * d2 == count
    points = set()
    for i in range(d1):
        for j in range(d2):
            y = (Fraction(i, d1), Fraction(j, d2))
            x = (V[0][0] * y[0] + V[0][1] * y[1],
                 V[1][0] * y[0] + V[1][1] * y[1])
            points.add((x[0] % 1, x[1] % 1))
    assert len(points) == count
    return count, sorted(points)


class GenToken(Enum):
    """Word letters over the standard generators."""
    S = "S"
    T = "T"
    T_INV = "T^-1"
    NEG_I = "-I"

    @property
    def matrix(self):
        return _TOKEN_MATRIX[self]

    def __str__(self):
        return self.value


_TOKEN_MATRIX = {
    GenToken.S: S_MAT,
    GenToken.T: T_MAT,
    GenToken.T_INV: T_MAT.inverse(),
    GenToken.NEG_I: -IntMatrix2.identity(),
}


def word_matrix(word):
    """Product of the tokens, read left to right."""
    M = IntMatrix2.identity()
    for tok in word:
        M = M * tok.matrix
    return M


def decompose_st(A):
    """Write A as a word in S, T, T^-1 and -I, exactly.

    Euclidean reduction on the first column: shear with a T power
    until the corner entry is a remainder, then one S, repeat.  The
    result multiplies back to A on the nose and is deterministic.
    """
    _check_sl2z(A)
    ops = []  # left multiplications applied to A, in order
    M = A
    while M.c != 0:
        if M.c > 0:
            q = M.a // M.c
        else:
            q = -(M.a // -M.c)
        if q != 0:
            M = (T_MAT ** (-q)) * M
            ops.append(("T", -q))
        M = S_MAT * M
        ops.append(("S", 0))
    # M is now (+-1, b; 0, +-1)
    sign = 1
    word = []
    for kind, k in ops:
        if kind == "T":
            # inverse of T^k is T^-k
            tok = GenToken.T if -k > 0 else GenToken.T_INV
            word.extend([tok] * abs(k))
        else:
            # inverse of S is -I * S; -I is central, collect the sign
            word.append(GenToken.S)
            sign = -sign
    if M.a == 1:
        shift = M.b
    else:
        sign = -sign
        shift = -M.b
    tok = GenToken.T if shift > 0 else GenToken.T_INV
    word.extend([tok] * abs(shift))
    if sign < 0:
        word.insert(0, GenToken.NEG_I)
    assert word_matrix(word) == A
    return word
