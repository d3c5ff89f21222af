"""Integral homology of square-tiled surfaces and the symplectic
action of lifted torus maps.

The square complex of an origami with d squares has one face per
square, 2d edges (the bottom edge h_i and left edge v_i of each
square, oriented rightward and upward), and one vertex per cycle of
the corner-walk permutation.  Edge vectors live in Z^(2d) with h_i at
index i and v_i at index d + i.  A face boundary reads
h_i + v_(right of i) - h_(above i) - v_i.

H_1 is computed exactly: collapse a spanning tree of the 1-skeleton,
quotient the cycle space by the face boundaries through a Smith normal
form, and lift the surviving generators back to integer edge vectors.

The intersection form needs care.  Counting crossings of pushed-off
edge cycles fails at cone points, where a translated cycle no longer
closes up.  Instead we go through cohomology: cutting each square
along its up-diagonal gives a triangulated complex on which the
classical simplexwise product of 1-cochains is valid, and evaluating
it against the sum of all faces pairs cocycle classes:

    (a . b)[S] = sum_i a(h_i) b(v_right(i)) - a(v_i) b(h_above(i))

Poincare duality converts that to the intersection form on the cycle
basis: J = -E Q^-1 E^T, where Q is the cocycle pairing above and E
evaluates cocycles on the basis cycles.  Everything is integer or
Fraction arithmetic; no floating point enters this module.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from . import intlinalg as la
from . import permutations as perms
from .origami import Origami, act_word, relabel, sl2z_act
from .sl2z import GenToken


@dataclass(frozen=True)
class HomologyBasis:
    rank: int
    cycles: tuple        # rank integer vectors of length 2d
    intersection: tuple  # rank x rank integer matrix J
    face_boundaries: tuple

    def decompose(self, x):
        """Coordinates of the cycle x in this basis, modulo boundaries."""
        n = len(self.cycles[0]) if self.cycles else len(x)
        cols = list(self.cycles) + list(self.face_boundaries)
        A = [[col[i] for col in cols] for i in range(n)]
        sol = la.solve_rational(A, list(x))
        if sol is None:
            raise DomainError("vector is not a cycle of this complex")
        out = []
        for v in sol[:self.rank]:
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    def pairing(self, x, y):
        """Algebraic intersection number of two cycles in edge coordinates."""
        mx = self.decompose(x)
        my = self.decompose(y)
        return sum(mx[i] * self.intersection[i][j] * my[j]
                   for i in range(self.rank) for j in range(self.rank))

    def to_json(self):
        return {
            "rank": self.rank,
            "cycles": [list(z) for z in self.cycles],
            "intersection": [list(row) for row in self.intersection],
        }


def _vertex_classes(o):
    cyc = o.vertex_cycles()
    cls = [0] * o.d
    for i, c in enumerate(cyc):
        for x in c:
            cls[x] = i
    return len(cyc), cls


def _edge_endpoints(o, cls):
    """Edge index -> (tail vertex, head vertex)."""
    ends = []
    for i in range(o.d):
        ends.append((cls[i], cls[o.sigma_h[i]]))
    for i in range(o.d):
        ends.append((cls[i], cls[o.sigma_v[i]]))
    return ends


def _face_boundary_vectors(o):
    out = []
    for i in range(o.d):
        vec = [0] * (2 * o.d)
        vec[i] += 1                          # h_i
        vec[o.d + o.sigma_h[i]] += 1         # v over the right edge
        vec[o.sigma_v[i]] -= 1               # h over the top edge
        vec[o.d + i] -= 1                    # v_i
        out.append(vec)
    return out


def _cup_on_fundamental(o, a, b):
    """Product of two 1-cocycles evaluated on the sum of all faces.

    Valid only for cocycles (functionals vanishing on face boundaries);
    the analogous count for cycles misses crossings at cone points.
    """
    d = o.d
    total = 0
    for i in range(d):
        total += a[i] * b[d + o.sigma_h[i]]
        total -= a[d + i] * b[o.sigma_v[i]]
    return total


def _cocycle_class_basis(o, nverts, cls, ends):
    """2g integer cocycles whose classes span H^1 rationally."""
    d = o.d
    cocycles = la.kernel_rational(_face_boundary_vectors(o))
    span = []
    for p in range(nverts):
        vec = [0] * (2 * d)
        for e, (t, h) in enumerate(ends):
            vec[e] = (1 if h == p else 0) - (1 if t == p else 0)
        span.append(vec)
    base_rank = la.rank_rational(span)
    chosen = []
    for k in cocycles:
        if la.rank_rational(span + [k]) > base_rank + len(chosen):
            chosen.append(k)
            span.append(k)
    return chosen


def displacement(o, x):
    """Total (horizontal, vertical) displacement of an edge vector; a
    cycle's class on the base torus."""
    d = o.d
    return (sum(x[:d]), sum(x[d:]))


def homology_basis(o):
    """Integer basis of H_1 with its intersection form.

    Returns HomologyBasis with rank = 2 * genus; the basis vectors are
    primitive integer edge vectors, and the intersection matrix is
    antisymmetric with determinant one.
    """
    d = o.d
    nverts, cls = _vertex_classes(o)
    ends = _edge_endpoints(o, cls)

    # spanning tree of the 1-skeleton (connected since the origami is)
    parent_edge = [None] * nverts
    parent_sign = [0] * nverts
    seen = [False] * nverts
    seen[0] = True
    grew = True
    tree = set()
    while grew:
        grew = False
        for e, (t, h) in enumerate(ends):
            if e in tree:
                continue
            if seen[t] and not seen[h]:
                w, sgn = h, 1
            elif seen[h] and not seen[t]:
                w, sgn = t, -1
            else:
                continue
            seen[w] = True
            tree.add(e)
            parent_edge[w] = e
            parent_sign[w] = sgn
            grew = True
    assert all(seen)

    # path from each vertex back to the root, as an edge chain
    def path_to_root(v):
        vec = [0] * (2 * d)
        while parent_edge[v] is not None:
            e = parent_edge[v]
            sgn = parent_sign[v]
            vec[e] -= sgn  # walk against the parent edge, toward the root
            v = ends[e][0] if sgn == 1 else ends[e][1]
        return vec

    root_paths = [path_to_root(v) for v in range(nverts)]

    nontree = [e for e in range(2 * d) if e not in tree]
    # fundamental cycle of a non-tree edge e: e plus tree paths closing it
    fund = []
    for e in nontree:
        t, h = ends[e]
        vec = [0] * (2 * d)
        vec[e] += 1
        # head -> root -> tail along the tree
        for j, val in enumerate(root_paths[h]):
            vec[j] += val
        for j, val in enumerate(root_paths[t]):
            vec[j] -= val
        fund.append(vec)

    boundaries = _face_boundary_vectors(o)
    # a cycle is determined by its non-tree coordinates
    B = [[bd[e] for e in nontree] for bd in boundaries]
    U, D, V = la.smith_normal_form(B)
    divisors = [x for x in la.diagonal_of(D) if x != 0]
    assert divisors == [1] * (d - 1), divisors
    r = len(divisors)
    ncols = len(nontree)
    # U B V = D, so the boundary lattice is spanned by the first r rows
    # of V^-1 and the quotient is generated by the remaining rows
    Vinv = la.mat_inverse_rational(V)
    basis = []
    for row in range(r, ncols):
        coords = [Vinv[row][j] for j in range(ncols)]
        assert all(x.denominator == 1 for x in coords)
        vec = [0] * (2 * d)
        for coeff, f in zip(coords, fund):
            if coeff:
                c = int(coeff)
                for j, val in enumerate(f):
                    vec[j] += c * val
        basis.append(vec)

    rank = len(basis)
    assert rank == 2 * o.genus()

    alphas = _cocycle_class_basis(o, nverts, cls, ends)
    assert len(alphas) == rank
    E = [[sum(a * x for a, x in zip(alpha, z)) for alpha in alphas]
         for z in basis]
    Q = [[_cup_on_fundamental(o, au, aw) for aw in alphas] for au in alphas]
    for i in range(rank):
        for j in range(rank):
            assert Q[i][j] == -Q[j][i]
    Qinv = la.mat_inverse_rational(Q)
    Jq = la.mat_neg(la.mat_mul(la.mat_mul(E, Qinv), la.transpose(E)))
    J = []
    for row in Jq:
        assert all(x.denominator == 1 for x in row)
        J.append([int(x) for x in row])
    for i in range(rank):
        for j in range(rank):
            assert J[i][j] == -J[j][i]
    if rank:
        assert la.det_rational(J) == 1
    return HomologyBasis(rank=rank, cycles=tuple(tuple(z) for z in basis),
                         intersection=tuple(tuple(row) for row in J),
                         face_boundaries=tuple(tuple(b) for b in boundaries))


def homology_rank(o):
    """Rank of H_1 straight from the chain complex, by matrix ranks.

    Deliberately avoids the cone-angle bookkeeping: rank = dim ker d1
    minus rank d2, so agreement with 2 * genus is a genuine cross-check
    of the corner-walk combinatorics.
    """
    d = o.d
    nverts, cls = _vertex_classes(o)
    ends = _edge_endpoints(o, cls)
    d1 = [[0] * (2 * d) for _ in range(nverts)]
    for e, (t, h) in enumerate(ends):
        d1[h][e] += 1
        d1[t][e] -= 1
    r1 = la.rank_rational(d1)
    r2 = la.rank_rational(_face_boundary_vectors(o))
    return 2 * d - r1 - r2


def _token_chain_matrix(token, o):
    """Edge map of one token action, from the complex of o to the
    complex of sl2z_act(token, o), as a 2d x 2d integer matrix.

    Derived from how the affine map carries edges: the shear T fixes
    bottom edges and sends the left edge of square i to the diagonal,
    homotopic to bottom edge then right edge.  S rotates a quarter
    turn, -I half a turn; their images pick up signs and the
    neighbor relabelings below.
    """
    d = o.d
    sh, sv = o.sigma_h, o.sigma_v
    C = [[0] * (2 * d) for _ in range(2 * d)]

    def put(target, source, val):
        C[target][source] += val

    if token == GenToken.T:
        for i in range(d):
            put(i, i, 1)                      # h_i -> h_i
            put(i, d + i, 1)                  # v_i -> h_i + v_(right)
            put(d + sh[i], d + i, 1)
    elif token == GenToken.T_INV:
        ish = perms.inverse(sh)
        for i in range(d):
            put(i, i, 1)
            put(ish[i], d + i, -1)            # v_i -> -h_(left) + v_(left)
            put(d + ish[i], d + i, 1)
    elif token == GenToken.S:
        isv = perms.inverse(sv)
        for i in range(d):
            put(d + isv[i], i, 1)             # h_i -> v_(below)
            put(i, d + i, -1)                 # v_i -> -h_i
    elif token == GenToken.NEG_I:
        isv = perms.inverse(sv)
        ish = perms.inverse(sh)
        for i in range(d):
            put(isv[i], i, -1)                # h_i -> -h_(below)
            put(d + ish[i], d + i, -1)        # v_i -> -v_(left)
    else:
        raise DomainError("unknown token %r" % (token,))
    return C


def _relabel_chain_matrix(o, r):
    d = o.d
    C = [[0] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        C[r[i]][i] = 1
        C[d + r[i]][d + i] = 1
    return C


def word_chain_map(witness, o):
    """Total edge map of the witness word followed by its relabeling;
    an automorphism of the chain complex of o."""
    d = o.d
    C = la.identity_matrix(2 * d)
    cur = o
    for token in reversed(list(witness.word)):
        C = la.mat_mul(_token_chain_matrix(token, cur), C)
        cur = sl2z_act(token, cur)
    C = la.mat_mul(_relabel_chain_matrix(cur, witness.relabeling), C)
    cur = relabel(cur, witness.relabeling)
    assert cur == o
    return C


@dataclass(frozen=True)
class HomologyAction:
    matrix: tuple
    torelli_order: int
    b1: int
    symplectic: bool
    fixed_in_displacement_kernel: bool
    basis: HomologyBasis

    def to_json(self):
        return {
            "matrix": [list(row) for row in self.matrix],
            "torelli_order": self.torelli_order,
            "b1": self.b1,
            "symplectic": self.symplectic,
            "fixed_in_displacement_kernel": self.fixed_in_displacement_kernel,
        }


def induced_action(witness, o):
    """Action of a verified lift witness on H_1(o), as an integer
    matrix in the computed basis.

    The matrix preserves the intersection form exactly.  Also reports
    the dimension k of its rational fixed subspace (the mapping-torus
    first Betti number is k + 1) and whether every fixed class has
    zero displacement on the base torus, which is what suspension flow
    theory predicts for a hyperbolic base map.
    """
    if not witness.verify(o):
        raise DomainError("witness does not carry the origami to itself")
    basis = homology_basis(o)
    C = word_chain_map(witness, o)
    rank = basis.rank
    M = [[0] * rank for _ in range(rank)]
    for j, z in enumerate(basis.cycles):
        img = la.mat_vec(C, list(z))
        col = basis.decompose(img)
        for i in range(rank):
            M[i][j] = col[i]

    k, b1, sympl = torelli_order(M, [list(row) for row in basis.intersection])

    MI = [[M[i][j] - (1 if i == j else 0) for j in range(rank)]
          for i in range(rank)]
    fixed_ok = True
    ne = 2 * o.d
    for vec in la.kernel_rational(MI):
        edge = [0] * ne
        for coeff, z in zip(vec, basis.cycles):
            if coeff:
                for i in range(ne):
                    edge[i] += coeff * z[i]
        if displacement(o, edge) != (0, 0):
            fixed_ok = False
            break
    return HomologyAction(
        matrix=tuple(tuple(row) for row in M),
        torelli_order=k, b1=b1, symplectic=sympl,
        fixed_in_displacement_kernel=fixed_ok, basis=basis)


def torelli_order(M, J):
    """(k, b1, symplectic) for an integer matrix acting on a
    symplectic lattice.

    k is the rational dimension of the fixed space of M, b1 = k + 1 is
    the first Betti number of the mapping torus of any map inducing M,
    and the flag reports whether M preserves the form J exactly.  J
    must be a unimodular antisymmetric integer matrix of matching size.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise DomainError("matrix must be square")
    if len(J) != n or any(len(row) != n for row in J):
        raise DomainError("form must match the matrix size")
    for i in range(n):
        for j in range(n):
            if J[i][j] != -J[j][i]:
                raise DomainError("form must be antisymmetric")
    if n and abs(la.det_rational(J)) != 1:
        raise DomainError("form must be unimodular")
    MI = [[M[i][j] - (1 if i == j else 0) for j in range(n)]
          for i in range(n)]
    k = n - la.rank_rational(MI) if n else 0
    Ml = [list(row) for row in M]
    Jl = [list(row) for row in J]
    sympl = la.mat_eq(la.mat_mul(la.mat_mul(la.transpose(Ml), Jl), Ml), Jl)
    return k, k + 1, sympl
