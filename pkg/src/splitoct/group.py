"""Automorphisms of the split octonions: generator constructors, the
action on octonions and tuples, the automorphism test, and exhaustive
enumeration of the full automorphism group over tiny prime fields.

A group element is stored as a dense 8x8 matrix over its scalar ring,
acting on coordinate columns in the fixed basis order
(e1, e2, u1, u2, u3, v1, v2, v3), together with a word of generator
tags kept for provenance.
"""

import numpy as np

from . import linalg
from . import octonion as oc
from .scalars import GF

__all__ = [
    "GroupElement", "identity_element", "from_sl3", "delta1", "delta2",
    "hbar", "theta", "compose", "apply_tuple", "is_automorphism",
    "coordinate_action", "enumerate_group", "enumerate_group_array",
    "group_order_formula", "sl3_transvections", "structure_constants",
    "automorphism_mask", "inverse_mod_q",
]


class GroupElement:
    __slots__ = ("ring", "rows", "word")

    def __init__(self, ring, rows, word=()):
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        self.word = tuple(word)

    def apply(self, a):
        if not isinstance(a, oc.Octonion):
            raise TypeError("expected an octonion")
        if a.ring is not self.ring:
            raise ValueError("octonion ring does not match group element ring")
        return oc.from_basis_coords(self.ring,
                                    linalg.matvec(self.rows, a.basis_coords()))

    def __call__(self, a):
        return self.apply(a)

    def compose(self, other):
        """self * other, acting as: apply other first, then self."""
        if other.ring is not self.ring:
            raise ValueError("group elements over different rings")
        return GroupElement(self.ring, linalg.matmul(self.rows, other.rows),
                            self.word + other.word)

    def inverse(self):
        if not self.ring.is_field:
            raise ValueError("inverse needs a field-valued matrix")
        inv = linalg.inverse(self.rows, self.ring)
        if inv is None:
            raise ValueError("matrix is singular")
        return GroupElement(self.ring, inv, (("inv", self.word),))

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.ring is other.ring and self.rows == other.rows

    def __repr__(self):
        return "GroupElement(%s)" % (self.word or "matrix",)


def identity_element(ring):
    z, o = ring.zero, ring.one
    rows = [[o if i == j else z for j in range(8)] for i in range(8)]
    return GroupElement(ring, rows, ())


def _columns_to_rows(cols):
    return [tuple(col[r] for col in cols) for r in range(8)]


def _from_images(ring, images, word):
    return GroupElement(ring, _columns_to_rows([a.basis_coords() for a in images]),
                        word)


def from_sl3(ring, g):
    """The automorphism u -> u g, v -> v g^(-T) of a unimodular 3x3 g.

    Since det g = 1, the inverse is the adjugate, so this also works for
    matrices over a polynomial ring.
    """
    g = [list(r) for r in g]
    d = (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
         - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
         + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))
    if d != ring.one:
        raise ValueError("matrix must have determinant 1")
    adj = [[g[1][1] * g[2][2] - g[1][2] * g[2][1],
            g[0][2] * g[2][1] - g[0][1] * g[2][2],
            g[0][1] * g[1][2] - g[0][2] * g[1][1]],
           [g[1][2] * g[2][0] - g[1][0] * g[2][2],
            g[0][0] * g[2][2] - g[0][2] * g[2][0],
            g[0][2] * g[1][0] - g[0][0] * g[1][2]],
           [g[1][0] * g[2][1] - g[1][1] * g[2][0],
            g[0][1] * g[2][0] - g[0][0] * g[2][1],
            g[0][0] * g[1][1] - g[0][1] * g[1][0]]]
    z = ring.zero
    images = [oc.unit_e(ring, 1), oc.unit_e(ring, 2)]
    for i in range(3):
        images.append(oc.Octonion(ring, z, tuple(g[i]), (z, z, z), z))
    for i in range(3):
        # row i of g^(-T) is column i of the inverse (= adjugate here)
        col = (adj[0][i], adj[1][i], adj[2][i])
        images.append(oc.Octonion(ring, z, (z, z, z), col, z))
    return _from_images(ring, images, (("sl3", tuple(tuple(r) for r in g)),))


def _delta1_apply(ring, uvec, a):
    t = oc.dot3(uvec, a.v)
    return oc.Octonion(
        ring,
        a.alpha - t,
        tuple(x + (a.alpha - a.beta - t) * c for x, c in zip(a.u, uvec)),
        tuple(x - y for x, y in zip(a.v, oc.cross3(a.u, uvec))),
        a.beta + t,
    )


def _delta2_apply(ring, vvec, a):
    t = oc.dot3(a.u, vvec)
    return oc.Octonion(
        ring,
        a.alpha + t,
        tuple(x + y for x, y in zip(a.u, oc.cross3(a.v, vvec))),
        tuple(x + (-a.alpha + a.beta - t) * c for x, c in zip(a.v, vvec)),
        a.beta - t,
    )


def delta1(ring, uvec):
    uvec = tuple(uvec)
    images = [_delta1_apply(ring, uvec, b) for b in oc.basis(ring)]
    return _from_images(ring, images, (("delta1", uvec),))


def delta2(ring, vvec):
    vvec = tuple(vvec)
    images = [_delta2_apply(ring, vvec, b) for b in oc.basis(ring)]
    return _from_images(ring, images, (("delta2", vvec),))


def hbar(ring):
    """The involutive automorphism (alpha,u,v,beta) -> (beta,-v,-u,alpha)."""
    images = [oc.Octonion(ring, a.beta, tuple(-x for x in a.v),
                          tuple(-x for x in a.u), a.alpha)
              for a in oc.basis(ring)]
    return _from_images(ring, images, (("hbar",),))


def theta(ring, lam, t):
    """Diagonal one-parameter element: u_j -> t^lam_j u_j, v_j -> t^-lam_j v_j."""
    lam = tuple(lam)
    if sum(lam) != 0:
        raise ValueError("exponents must sum to zero")
    if t == ring.zero:
        raise ValueError("parameter must be invertible")

    def power(k):
        if k >= 0:
            out = ring.one
            for _ in range(k):
                out = out * t
            return out
        return ring.inv(power(-k))

    z = ring.zero
    diag = [ring.one, ring.one] + [power(l) for l in lam] + [power(-l) for l in lam]
    rows = [[diag[i] if i == j else z for j in range(8)] for i in range(8)]
    return GroupElement(ring, rows, (("theta", lam, repr(t)),))


def compose(g, h):
    return g.compose(h)


def apply_tuple(g, tup):
    return tuple(g.apply(a) for a in tup)


def is_automorphism(g):
    """Invertibility plus multiplicativity on all 64 basis products."""
    b = oc.basis(g.ring)
    gb = [g.apply(a) for a in b]
    for i in range(8):
        for j in range(8):
            if g.apply(b[i] * b[j]) != gb[i] * gb[j]:
                return False
    if g.ring.is_field and linalg.rank(g.rows, g.ring) != 8:
        return False
    return True


def coordinate_action(g, f):
    """Action on coordinate polynomials: (g f)(a) = f(g^{-1} a).

    Substitutes each variable z[i,j] by the j-th z-coordinate of the
    octonion obtained by applying g^{-1} to a generic octonion in slot i.
    """
    n_inv = g.inverse().rows
    # basis-order index of z-coordinate j (alpha,u1,u2,u3,v1,v2,v3,beta)
    z_to_basis = (0, 2, 3, 4, 5, 6, 7, 1)
    basis_to_z = (0, 7, 1, 2, 3, 4, 5, 6)
    ring = f.ring
    assignment = {}
    for (i, j) in f.variables():
        row = n_inv[z_to_basis[j - 1]]
        acc = ring.zero
        for col in range(8):
            c = row[col]
            if c != g.ring.zero:
                acc = acc + ring.constant(c) * ring.var(i, basis_to_z[col] + 1)
        assignment[(i, j)] = acc
    return f.substitute(assignment)


# ---------------------------------------------------------------------------
# Enumeration over tiny prime fields


def group_order_formula(q):
    """Classical order q^6 (q^6 - 1) (q^2 - 1), computed independently."""
    return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)


def sl3_transvections(field):
    """All elementary transvections I + t E_ij over GF(q), t nonzero."""
    z, o = field.zero, field.one
    out = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for t in range(1, field.p):
                m = [[o if a == b else z for b in range(3)] for a in range(3)]
                m[i][j] = field(t)
                out.append(m)
    return out


def _generator_elements(field):
    gens = [from_sl3(field, m) for m in sl3_transvections(field)]
    for i in (1, 2, 3):
        for t in range(1, field.p):
            c = tuple(field(t) if k == i - 1 else field.zero for k in range(3))
            gens.append(delta1(field, c))
    for i in (1, 2, 3):
        for t in range(1, field.p):
            c = tuple(field(t) if k == i - 1 else field.zero for k in range(3))
            gens.append(delta2(field, c))
    return gens


_enum_cache = {}


def enumerate_group_array(q):
    """BFS closure of the generators over GF(q) as a numpy array.

    Returns (mats, words) with mats of shape (N, 8, 8) dtype int64 in
    deterministic BFS insertion order; words[k] is the generator-index
    path that produced mats[k].
    """
    if q not in (2, 3):
        raise ValueError("enumeration is restricted to q in {2, 3}")
    cached = _enum_cache.get(q)
    if cached is not None:
        return cached
    field = GF(q)
    gens = _generator_elements(field)
    gen_mats = [np.array([[x.r for x in row] for row in g.rows], dtype=np.int64)
                for g in gens]
    ident = np.eye(8, dtype=np.int64)
    seen = {ident.tobytes(): 0}
    mats = [ident]
    words = [()]
    frontier = [0]
    while frontier:
        new_frontier = []
        for idx in frontier:
            m = mats[idx]
            for gi, gm in enumerate(gen_mats):
                nm = (m @ gm) % q
                key = nm.tobytes()
                if key not in seen:
                    seen[key] = len(mats)
                    mats.append(nm)
                    words.append(words[idx] + (gi,))
                    new_frontier.append(len(mats) - 1)
        frontier = new_frontier
    out = (np.stack(mats), words)
    _enum_cache[q] = out
    return out


def enumerate_group(q):
    """All automorphisms over GF(q) as GroupElements, in BFS order."""
    mats, words = enumerate_group_array(q)
    field = GF(q)
    gens = _generator_elements(field)
    out = []
    for m, w in zip(mats, words):
        rows = [[field(int(x)) for x in row] for row in m]
        tags = tuple(gens[gi].word[0] for gi in w)
        out.append(GroupElement(field, rows, tags))
    return out


def structure_constants():
    """C[i][j][k]: coordinate k of (basis_i * basis_j), as small ints."""
    from .scalars import QQ
    b = oc.basis(QQ)
    return np.array(
        [[[int(x) for x in (b[i] * b[j]).basis_coords()] for j in range(8)]
         for i in range(8)],
        dtype=np.int64)


def automorphism_mask(mats, q):
    """Vectorized 64-product automorphism check for a stack of matrices."""
    c = structure_constants() % q
    # lhs[n,i,j,:] = M_n applied to coordinates of (b_i b_j)
    lhs = np.einsum("ijA,nkA->nijk", c, mats) % q
    # rhs[n,i,j,:] = product of images (columns i and j of M_n)
    rhs = np.einsum("nai,nbj,abk->nijk", mats, mats, c) % q
    return np.all(lhs == rhs, axis=(1, 2, 3))


def inverse_mod_q(mat, q):
    """Gauss-Jordan inverse of an integer matrix mod prime q, or None."""
    n = mat.shape[0]
    aug = np.concatenate([mat % q, np.eye(n, dtype=np.int64)], axis=1)
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, n):
            if aug[i, c] % q:
                pivot = i
                break
        if pivot is None:
            return None
        if pivot != r:
            aug[[r, pivot]] = aug[[pivot, r]]
        inv = pow(int(aug[r, c]), q - 2, q)
        aug[r] = (aug[r] * inv) % q
        for i in range(n):
            if i != r and aug[i, c]:
                aug[i] = (aug[i] - aug[i, c] * aug[r]) % q
        r += 1
    return aug[:, n:]
