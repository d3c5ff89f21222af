"""Square-tiled surfaces given by a pair of gluing permutations.

Squares are labeled 0..d-1.  sigma_h(i) is the square to the right of
i, sigma_v(i) the square above i.  All products of permutations are
function composition, rightmost factor applied first.

Going once counterclockwise around the corner vertex of a square
traces the commutator c = sigma_h . sigma_v . sigma_h^-1 . sigma_v^-1;
its cycles are the vertices of the glued surface, and a cycle of
length l is a cone point of angle 2*pi*l.  With d squares, 2d edges
and d faces this gives genus = 1 + (d - V)/2 for V cycles.

The group generated by S and T acts on origamis; the formulas below
are validated by the invariance of genus and stratum and by the
induced action on the homology of the one-square torus, where the
tokens must reproduce their own matrices.
"""

from dataclasses import dataclass
from math import gcd

from .errors import DomainError
from . import permutations as perms
from .cover import _pillowcase_check
from .sl2z import GenToken, IntMatrix2, Anosov, classify, decompose_st


@dataclass(frozen=True)
class Origami:
    d: int
    sigma_h: tuple
    sigma_v: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma_h", tuple(self.sigma_h))
        object.__setattr__(self, "sigma_v", tuple(self.sigma_v))
        if self.d < 1:
            raise DomainError("need at least one square")
        for name, p in (("sigma_h", self.sigma_h), ("sigma_v", self.sigma_v)):
            if not perms.is_perm(p, self.d):
                raise DomainError("%s is not a permutation of %d squares"
                                  % (name, self.d))
        if not perms.is_transitive([self.sigma_h, self.sigma_v], self.d):
            orbs = perms.orbits([self.sigma_h, self.sigma_v], self.d)
            raise DomainError(
                "origami is not connected: square orbits %s"
                % [[x + 1 for x in o] for o in orbs])

    def vertex_permutation(self):
        sh, sv = self.sigma_h, self.sigma_v
        return perms.compose(
            sh, perms.compose(
                sv, perms.compose(perms.inverse(sh), perms.inverse(sv))))

    def vertex_cycles(self):
        return perms.cycles(self.vertex_permutation(), include_fixed=True)

    def genus(self):
        v = len(self.vertex_cycles())
        assert (self.d - v) % 2 == 0
        return 1 + (self.d - v) // 2

    def stratum(self):
        """Cone angles as multiples of 2*pi, sorted descending."""
        return tuple(sorted((len(c) for c in self.vertex_cycles()),
                            reverse=True))

    def to_json(self):
        return {
            "d": self.d,
            "sigma_h": perms.format_cycles(self.sigma_h),
            "sigma_v": perms.format_cycles(self.sigma_v),
        }

    def __str__(self):
        return "Origami(d=%d, h=%s, v=%s)" % (
            self.d, perms.format_cycles(self.sigma_h),
            perms.format_cycles(self.sigma_v))


def build(sigma_h, sigma_v):
    """Assemble an origami and report (origami, genus, stratum)."""
    o = Origami(len(sigma_h), tuple(sigma_h), tuple(sigma_v))
    return o, o.genus(), o.stratum()


TORUS = Origami(1, (0,), (0,))

# Genus-3 staircase of two horizontal 4-cylinders: squares 1-4 in the
# bottom row, 5-8 in the top row, rows glued with a shift of two so
# that every vertex collects two squares (four cone angles 4*pi).
# Frozen after build() confirmed genus 3 and stratum (2, 2, 2, 2).
WOLLMILCHSAU = Origami(
    8,
    perms.parse_cycles("(1 2 3 4)(5 6 7 8)"),
    perms.parse_cycles("(1 8 3 6)(2 7 4 5)"),
)

_NAMED = {"torus": TORUS, "wollmilchsau": WOLLMILCHSAU}


def named_origami(name):
    try:
        return _NAMED[name.lower()]
    except KeyError:
        raise DomainError("unknown origami %r (have: %s)"
                          % (name, ", ".join(sorted(_NAMED))))


def sl2z_act(token, o):
    """Action of one generator token on an origami.

    T shears each square rightward: sigma_v becomes sigma_v . sigma_h^-1.
    S rotates a quarter turn: what was below comes to lie to the right.
    -I rotates each square half a turn, inverting both gluings.
    """
    sh, sv = o.sigma_h, o.sigma_v
    if token == GenToken.T:
        return Origami(o.d, sh, perms.compose(sv, perms.inverse(sh)))
    if token == GenToken.T_INV:
        return Origami(o.d, sh, perms.compose(sv, sh))
    if token == GenToken.S:
        return Origami(o.d, perms.inverse(sv), sh)
    if token == GenToken.NEG_I:
        return Origami(o.d, perms.inverse(sh), perms.inverse(sv))
    raise DomainError("unknown token %r" % (token,))


def act_word(word, o):
    """Left action of a word: the rightmost token acts first."""
    for token in reversed(list(word)):
        o = sl2z_act(token, o)
    return o


def relabel(o, r):
    """Rename square i to r(i)."""
    if not perms.is_perm(r, o.d):
        raise DomainError("relabeling is not a permutation of the squares")
    return Origami(o.d,
                   perms.conjugate(o.sigma_h, r),
                   perms.conjugate(o.sigma_v, r))


def _bfs_labeling(o, root):
    new = [None] * o.d
    new[root] = 0
    order = [root]
    count = 1
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in (o.sigma_h[x], o.sigma_v[x]):
            if new[y] is None:
                new[y] = count
                count += 1
                order.append(y)
    assert count == o.d
    return tuple(new)


def canonical_form(o):
    """Canonical representative of the relabeling class.

    Breadth-first relabelings from every root square; the
    lexicographically least (sigma_h, sigma_v) wins.  Two origamis are
    isomorphic iff their canonical forms coincide.  Returns
    (canonical origami, relabeling r) with relabel(o, r) canonical.
    """
    best = None
    best_r = None
    for root in range(o.d):
        r = _bfs_labeling(o, root)
        cand = (perms.conjugate(o.sigma_h, r), perms.conjugate(o.sigma_v, r))
        if best is None or cand < best:
            best = cand
            best_r = r
    return Origami(o.d, best[0], best[1]), best_r


@dataclass(frozen=True)
class LiftWitness:
    """Certificate that a matrix word carries an origami back to itself
    after relabeling."""
    matrix: IntMatrix2
    word: tuple
    relabeling: tuple

    def verify(self, o):
        image = act_word(self.word, o)
        return relabel(image, self.relabeling) == o

    def to_json(self):
        return {
            "matrix": self.matrix.rows(),
            "word": [str(t) for t in self.word],
            "relabeling": perms.format_cycles(self.relabeling),
        }


def lift_automorphism(A, o):
    """Combinatorial lift of a hyperbolic torus map to an origami.

    Decomposes A into generator tokens, pushes the origami through the
    word, and looks for a relabeling returning the original gluings.
    Returns a verified LiftWitness, or None when the orbit moved (no
    lift exists through this construction).
    """
    if not isinstance(classify(A), Anosov):
        raise DomainError("lifting is defined for Anosov matrices only")
    word = tuple(decompose_st(A))
    image = act_word(word, o)
    canon_o, r_o = canonical_form(o)
    canon_img, r_img = canonical_form(image)
    if canon_o != canon_img:
        return None
    r = perms.compose(perms.inverse(r_o), r_img)
    witness = LiftWitness(matrix=A, word=word, relabeling=r)
    assert witness.verify(o)
    return witness


def pillowcase_origami(d, a):
    """Square-tiled model of the degree-d cyclic pillowcase cover, for
    even d with all rotation numbers odd.

    The cover splits over the four-square torus (the orientation double
    cover of the flat sphere) into d/2 sheets; crossing a marked edge
    shifts the sheet by a fixed amount, chosen so that the walk around
    the four marked corners realizes the rotation numbers.  The result
    has 2d squares and the genus predicted by pillowcase_genus.
    """
    a = tuple(a)
    if d % 2 != 0:
        raise DomainError("square-tiled model needs even degree")
    if any(ai % 2 == 0 for ai in a):
        raise DomainError("square-tiled model needs odd rotation numbers")
    _pillowcase_check(d, a)
    m = d // 2
    pos = [(0, 0), (1, 0), (0, 1), (1, 1)]
    pos_index = {xy: i for i, xy in enumerate(pos)}
    a1, a2, a3 = a[0], a[1], a[2]
    hshift = {(1, 0): a1 % m, (0, 1): (a1 + a2 + a3) % m}
    vshift = {(1, 1): (-(a1 + a2)) % m}

    def idx(x, y, s):
        return pos_index[(x, y)] * m + s % m

    sh = [0] * (4 * m)
    sv = [0] * (4 * m)
    for (x, y) in pos:
        for s in range(m):
            sh[idx(x, y, s)] = idx((x + 1) % 2, y, s + hshift.get((x, y), 0))
            sv[idx(x, y, s)] = idx(x, (y + 1) % 2, s + vshift.get((x, y), 0))
    return Origami(2 * d, tuple(sh), tuple(sv))
