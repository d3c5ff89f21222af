"""Simulation of transverse circle and line dynamics.

The circle is R/Z throughout.  Boundary maps of the hyperbolic plane
are det-1 matrices acting on the projective line under the chart
x -> [cos(pi x) : sin(pi x)], so the matrix that rotates the plane by
psi shifts the chart coordinate by psi/pi.  The surgered pseudogroup
is modeled by affine maps of the real line whose linear part is an
integer power of 2; their k-arithmetic is exact, and translation
parts are kept as Fractions so fixed-point equations can be solved in
closed form.

Word sampling is reproducible across platforms: a 64-bit linear
congruential generator with state update

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

picks generator index (state >> 33) mod len(gens) at every step.
Fixed points are accepted within 1e-9; map identities are accepted
within 1e-6 on a 1024-point grid.  Both tolerances are quoted in the
reports they decide.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

FIXED_POINT_TOL = 1e-9
IDENTITY_TOL = 1e-6
GRID = 1024

_LCG_MUL = 6364136223846793005
_LCG_ADD = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


def _lcg_next(state):
    return (_LCG_MUL * state + _LCG_ADD) & _LCG_MASK


@dataclass(frozen=True)
class Rotation:
    angle: float

    def __post_init__(self):
        object.__setattr__(self, "angle", float(self.angle) % 1.0)

    def apply(self, x):
        return (x + self.angle) % 1.0

    def spec(self):
        return "rot:%r" % self.angle


@dataclass(frozen=True)
class Doubling:
    def apply(self, x):
        return (2.0 * x) % 1.0

    def spec(self):
        return "dbl"


@dataclass(frozen=True)
class Mobius:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if det <= 0:
            raise DomainError("matrix must have positive determinant")
        s = math.sqrt(det)
        if abs(det - 1.0) > 1e-12:
            for name in "abcd":
                object.__setattr__(self, name, getattr(self, name) / s)

    def apply(self, x):
        if self.b == 0.0 and self.c == 0.0 and self.a == self.d:
            return x % 1.0  # scalar matrices act as the exact identity
        u0 = math.cos(math.pi * x)
        u1 = math.sin(math.pi * x)
        w0 = self.a * u0 + self.b * u1
        w1 = self.c * u0 + self.d * u1
        return (math.atan2(w1, w0) / math.pi) % 1.0

    def inverse(self):
        return Mobius(self.d, -self.b, -self.c, self.a)

    def matmul(self, other):
        return Mobius(self.a * other.a + self.b * other.c,
                      self.a * other.b + self.b * other.d,
                      self.c * other.a + self.d * other.c,
                      self.c * other.b + self.d * other.d)

    def spec(self):
        return "mob:%r,%r,%r,%r" % (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class AffineLine:
    """x -> 2^k x + b on the real line; k exact, b an exact Fraction."""
    k: int
    b: Fraction

    def __post_init__(self):
        if not isinstance(self.k, int):
            raise DomainError("exponent must be an integer")
        object.__setattr__(self, "b", Fraction(self.b))

    def scale(self):
        return Fraction(2) ** self.k

    def apply(self, x):
        if isinstance(x, (int, Fraction)):
            return self.scale() * x + self.b
        return float(self.scale()) * x + float(self.b)

    def circle_apply(self, x):
        # only integral linear parts descend to R/Z
        if self.k < 0:
            raise DomainError(
                "affine maps with linear part below 1 do not act on R/Z")
        return (float(self.scale()) * x + float(self.b)) % 1.0

    def compose(self, other):
        return AffineLine(self.k + other.k,
                          self.scale() * other.b + self.b)

    def inverse(self):
        return AffineLine(-self.k, -self.b / self.scale())

    def is_identity(self):
        return self.k == 0 and self.b == 0

    def fixed_point(self):
        """Exact fixed point, or None for nontrivial translations."""
        if self.k == 0:
            return None
        return self.b / (1 - self.scale())

    def spec(self):
        return "aff:k=%d,b=%s" % (self.k, self.b)


def parse_generator(text):
    """One generator from its compact spec string.

    Forms: "rot:0.25", "dbl", "aff:k=1,b=0.5", "mob:a,b,c,d".  Affine
    translation parts parse as exact fractions ("1/3" or "0.5" both
    work); the rest are floats.
    """
    text = text.strip()
    if text == "dbl":
        return Doubling()
    if text.startswith("rot:"):
        return Rotation(float(text[4:]))
    if text.startswith("mob:"):
        parts = text[4:].split(",")
        if len(parts) != 4:
            raise DomainError("mob: needs four entries: %r" % text)
        return Mobius(*(float(p) for p in parts))
    if text.startswith("aff:"):
        k = None
        b = None
        for piece in text[4:].split(","):
            key, _, val = piece.partition("=")
            if key.strip() == "k":
                k = int(val)
            elif key.strip() == "b":
                b = Fraction(val.strip())
            else:
                raise DomainError("unknown affine field %r" % key)
        if k is None or b is None:
            raise DomainError("aff: needs both k= and b=: %r" % text)
        return AffineLine(k, b)
    raise DomainError("unrecognized generator spec %r" % text)


def _circle_apply(gen, x):
    if isinstance(gen, AffineLine):
        return gen.circle_apply(x)
    return gen.apply(x)


@dataclass(frozen=True)
class OrbitStats:
    n_steps: int
    max_gap: float
    epsilon: float
    epsilon_dense: bool

    def to_json(self):
        return {
            "n_steps": self.n_steps,
            "max_gap": self.max_gap,
            "epsilon": self.epsilon,
            "epsilon_dense": self.epsilon_dense,
        }


def orbit_density(gens, start, n, epsilon, seed):
    """Gap statistics of a random-word orbit segment on the circle.

    Applies n generators chosen by the seeded congruential protocol to
    the start point and reports the largest circular gap left by the
    visited points.  Deterministic for a fixed (gens, start, n, seed).
    """
    gens = list(gens)
    if not gens:
        raise DomainError("no generators given")
    if n < 1:
        raise DomainError("need at least one step")
    if not 0 < epsilon < 1:
        raise DomainError("epsilon must lie strictly between 0 and 1")
    state = seed & _LCG_MASK
    x = float(start) % 1.0
    points = [x]
    for _ in range(n):
        state = _lcg_next(state)
        g = gens[(state >> 33) % len(gens)]
        x = _circle_apply(g, x)
        points.append(x)
    points.sort()
    max_gap = 1.0 - points[-1] + points[0]
    for prev, cur in zip(points, points[1:]):
        gap = cur - prev
        if gap > max_gap:
            max_gap = gap
    return OrbitStats(n_steps=n, max_gap=max_gap, epsilon=epsilon,
                      epsilon_dense=max_gap < epsilon)


@dataclass(frozen=True)
class PseudogroupWord:
    """Reduced word in the generators, rightmost letter applied first.

    letters are (generator index, +1 or -1) pairs; composite is the
    exact affine composition of the word.
    """
    letters: tuple
    composite: AffineLine

    def __str__(self):
        if not self.letters:
            return "id"
        bits = []
        for idx, power in self.letters:
            bits.append("g%d" % idx if power == 1 else "g%d^-1" % idx)
        return "*".join(bits)

    def to_json(self):
        return {
            "word": str(self),
            "k": self.composite.k,
            "b": str(self.composite.b),
        }


def _word_power(word, m):
    """m-th power of the word composite, m any integer."""
    base = word.composite if m >= 0 else word.composite.inverse()
    out = AffineLine(0, 0)
    for _ in range(abs(m)):
        out = base.compose(out)
    return out


@dataclass(frozen=True)
class StabilizerReport:
    witnesses: tuple
    structure: str          # "trivial" or "cyclic"
    primitive: object       # PseudogroupWord or None
    counterexample: object  # PseudogroupWord or None
    residual: float

    def to_json(self):
        out = {
            "structure": self.structure,
            "witnesses": [w.to_json() for w in self.witnesses],
            "tolerance": FIXED_POINT_TOL,
            "residual": self.residual,
        }
        if self.primitive is not None:
            out["primitive"] = self.primitive.to_json()
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
        return out


def stabilizer_search(gens, x, max_len):
    """All reduced affine words up to max_len fixing x, with evidence
    that the stabilizer they generate is trivial or cyclic.

    x is handled exactly (floats convert to their exact binary
    fraction); a word counts as a witness when |w(x) - x| < 1e-9, and
    the residual of the worst accepted witness is reported.  Witness
    composites with equal linear part must agree outright, since an
    affine map fixing x is determined by its linear part; that check
    is a hard assertion.  Cyclic evidence means every witness is an
    exact integer power of a shortest primitive witness.
    """
    gens = list(gens)
    for g in gens:
        if not isinstance(g, AffineLine):
            raise DomainError("stabilizer search runs in the affine model")
    if max_len < 1:
        raise DomainError("need positive word length")
    x = Fraction(x)

    seen = {}
    witnesses = []
    residual = 0.0

    def consider(word):
        nonlocal residual
        comp = word.composite
        if comp.is_identity():
            return
        key = (comp.k, comp.b)
        if key in seen:
            return
        seen[key] = word
        err = comp.apply(x) - x
        if abs(err) < FIXED_POINT_TOL:
            for w in witnesses:
                if w.composite.k == comp.k:
                    assert w.composite.b == comp.b, \
                        "two distinct affine maps with equal linear part " \
                        "cannot fix the same point"
            witnesses.append(word)
            residual = max(residual, abs(float(err)))

    frontier = [PseudogroupWord((), AffineLine(0, 0))]
    for _ in range(max_len):
        nxt = []
        for word in frontier:
            first = word.letters[0] if word.letters else None
            for idx, g in enumerate(gens):
                for power in (1, -1):
                    if first == (idx, -power):
                        continue  # immediate cancellation
                    letter_map = g if power == 1 else g.inverse()
                    # the new letter acts after the present word, so it
                    # lands on the left
                    new = PseudogroupWord(
                        ((idx, power),) + word.letters,
                        letter_map.compose(word.composite))
                    nxt.append(new)
        for word in nxt:
            consider(word)
        frontier = nxt

    if not witnesses:
        return StabilizerReport((), "trivial", None, None, 0.0)

    def word_key(w):
        return (abs(w.composite.k), 0 if w.composite.k > 0 else 1,
                len(w.letters))

    primitive = min(witnesses, key=word_key)
    counterexample = None
    k0 = primitive.composite.k
    for w in witnesses:
        k = w.composite.k
        if k % k0 != 0 or _word_power(primitive, k // k0) != w.composite:
            counterexample = w
            break
    structure = "cyclic" if counterexample is None else "not-cyclic"
    return StabilizerReport(tuple(witnesses), structure, primitive,
                            counterexample, residual)


def _lift_factory(gen):
    """Canonical lift of one orientation-preserving circle generator."""
    if isinstance(gen, Doubling):
        raise DomainError("the doubling map has no rotation number")
    if isinstance(gen, AffineLine):
        if gen.k != 0:
            raise DomainError(
                "affine maps with linear part not 1 are not circle "
                "homeomorphisms")
        shift = float(gen.b) % 1.0
        return lambda x: x + shift
    if isinstance(gen, Rotation):
        shift = gen.angle
        return lambda x: x + shift
    if isinstance(gen, Mobius):
        f0 = gen.apply(0.0)

        def lift(x):
            n = math.floor(x)
            t = x - n
            y = gen.apply(t)
            if y < f0:
                y += 1.0
            return y + n
        return lift
    raise DomainError("unsupported generator %r" % (gen,))


@dataclass(frozen=True)
class RotationNumberReport:
    value: float
    error: float
    n: int

    def to_json(self):
        return {"value": self.value, "error": self.error, "n": self.n}


def rotation_number(word, n):
    """Birkhoff estimate of the rotation number of a circle word.

    word is one generator or a sequence applied rightmost first; every
    letter must be an orientation-preserving homeomorphism.  Returns
    the average displacement of a canonical lift over n steps, which
    approximates the rotation number within 1/n.
    """
    if n < 100:
        raise DomainError("need at least 100 iterations")
    gens = list(word) if isinstance(word, (list, tuple)) else [word]
    if not gens:
        raise DomainError("empty word")
    lifts = [_lift_factory(g) for g in gens]

    def total(x):
        for lift in reversed(lifts):
            x = lift(x)
        return x

    x = 0.0
    for _ in range(n):
        x = total(x)
    return RotationNumberReport(value=(x / n) % 1.0, error=1.0 / n, n=n)


@dataclass(frozen=True)
class CommutatorCheck:
    max_deviation: float
    ok: bool
    tolerance: float = IDENTITY_TOL

    def to_json(self):
        return {
            "max_deviation": self.max_deviation,
            "ok": self.ok,
            "tolerance": self.tolerance,
        }


def circular_distance(x, y):
    d = abs(x - y) % 1.0
    return min(d, 1.0 - d)


def verify_commutator_product(pairs, target):
    """Compare a product of boundary-map commutators with a rotation.

    pairs is a list of (f, h) Mobius generators; the product
    [f1,h1]*...*[fg,hg] is evaluated against the target rotation on a
    1024-point grid and the largest circular deviation is reported.
    ok means deviation below 1e-6.  The empty product is the identity.
    """
    if isinstance(target, Rotation):
        theta = target.angle
    else:
        theta = float(target) % 1.0
    prod = Mobius(1.0, 0.0, 0.0, 1.0)
    for f, h in pairs:
        if not isinstance(f, Mobius) or not isinstance(h, Mobius):
            raise DomainError("commutator entries must be boundary maps")
        comm = f.matmul(h).matmul(f.inverse()).matmul(h.inverse())
        prod = prod.matmul(comm)
    worst = 0.0
    for j in range(GRID):
        xj = j / GRID
        dev = circular_distance(prod.apply(xj), (xj + theta) % 1.0)
        if dev > worst:
            worst = dev
    return CommutatorCheck(max_deviation=worst, ok=worst < IDENTITY_TOL)
