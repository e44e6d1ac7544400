"""Invariant descriptor sets, their evaluation, the skew symmetrization
of the degree-4 trace, and the bridge to 2x2 matrix invariants.

A descriptor is either n(i) or tr(i1,...,ik) with strictly increasing
indices; the trace is always taken of the left-normed product.  The
matrix side mirrors this with det and traces of associative products
of generic 2x2 matrices.
"""

from fractions import Fraction
from itertools import combinations, permutations

from . import octonion as oc
from . import words as wd
from .scalars import Polynomial

__all__ = [
    "Descriptor", "enumerate_set", "eval_descriptor", "descriptor_polynomial",
    "q_prime", "q_prime_combination", "psi", "psi_hat", "embed_matrix",
    "MatrixDescriptor", "matrix_invariants", "eval_matrix_descriptor",
    "generic_matrix", "mat2_mul", "mat2_trace", "mat2_det",
    "generic_octonion", "generic_traceless_octonion",
]


class Descriptor:
    """n(i) or tr(i1,...,ik), the members of the invariant families."""

    __slots__ = ("kind", "indices")

    def __init__(self, kind, indices):
        if kind not in ("n", "tr"):
            raise ValueError("kind must be 'n' or 'tr'")
        indices = tuple(indices)
        if kind == "tr" and any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError("trace indices must strictly increase")
        self.kind = kind
        self.indices = indices

    @property
    def degree(self):
        return 2 if self.kind == "n" else len(self.indices)

    def name(self):
        if self.kind == "n":
            return "n(%d)" % self.indices[0]
        return "tr(%s)" % ",".join(map(str, self.indices))

    def __eq__(self, other):
        if not isinstance(other, Descriptor):
            return NotImplemented
        return self.kind == other.kind and self.indices == other.indices

    def __hash__(self):
        return hash((self.kind, self.indices))

    def __repr__(self):
        return self.name()


def enumerate_set(family, n, d):
    """The degree filtration of the invariant family, in a fixed order.

    family "S": norms n(i) plus traces of strictly increasing sequences
    of length 1..d; family "S0": the same with sequences of length >= 2
    (the single traces vanish identically on traceless tuples).
    Ordered by (degree, norms first, indices).
    """
    if family not in ("S", "S0"):
        raise ValueError("family must be 'S' or 'S0'")
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    out = []
    min_len = 1 if family == "S" else 2
    for deg in range(1, d + 1):
        if deg == 2:
            for i in range(1, n + 1):
                out.append(Descriptor("n", (i,)))
        if deg >= min_len:
            for seq in combinations(range(1, n + 1), deg):
                out.append(Descriptor("tr", seq))
    return out


def eval_descriptor(desc, tup):
    for i in desc.indices:
        if not 1 <= i <= len(tup):
            raise IndexError("descriptor index %d exceeds tuple length %d"
                             % (i, len(tup)))
    if desc.kind == "n":
        return tup[desc.indices[0] - 1].norm()
    return wd.evaluate(wd.left_normed(desc.indices), tup).trace()


def generic_octonion(ring, i):
    """Z_i with coordinates z[i,1..8] over a polynomial ring."""
    v = ring.var
    return oc.Octonion(ring, v(i, 1), (v(i, 2), v(i, 3), v(i, 4)),
                       (v(i, 5), v(i, 6), v(i, 7)), v(i, 8))


def generic_traceless_octonion(ring, i):
    v = ring.var
    return oc.Octonion(ring, v(i, 1), (v(i, 2), v(i, 3), v(i, 4)),
                       (v(i, 5), v(i, 6), v(i, 7)), -v(i, 1))


def descriptor_polynomial(desc, ring):
    """The descriptor evaluated on generic octonions, as a polynomial."""
    n = max(desc.indices)
    tup = tuple(generic_octonion(ring, i) for i in range(1, n + 1))
    return eval_descriptor(desc, tup)


# ---------------------------------------------------------------------------
# Skew symmetrization of tr(((A1 A2) A3) A4)


def q_prime_combination():
    """The expansion of the skew symmetrization over canonical invariants
    of four letters; coefficients lie in Z[1/2]."""
    half = Fraction(1, 2)
    t = lambda *ix: wd.te_tr(ix)
    expr = t(1, 2, 3, 4) + half * (
        - t(1) * t(2) * t(3) * t(4)
        - t(1) * t(2, 3, 4) - t(2) * t(1, 3, 4)
        - t(3) * t(1, 2, 4) - t(4) * t(1, 2, 3)
        - t(1, 2) * t(3, 4) + t(1, 3) * t(2, 4) - t(1, 4) * t(2, 3)
        + t(1) * t(2) * t(3, 4) + t(1) * t(4) * t(2, 3)
        + t(2) * t(3) * t(1, 4) + t(3) * t(4) * t(1, 2))
    return expr


def q_prime(a1, a2, a3, a4, path="auto"):
    """Complete skew symmetrization of tr(((A1 A2) A3) A4).

    path "sym" averages the 24 signed trace terms (needs 1/24), path
    "combination" evaluates the expanded form (needs only 1/2), "auto"
    picks by characteristic.  Undefined in characteristic 2.
    """
    ring = a1.ring
    if path == "auto":
        path = "sym" if ring.char == 0 else "combination"
    if path == "sym":
        if ring.char != 0 and ring.char <= 3:
            raise ZeroDivisionError("24 is not invertible; use the combination path")
        acc = ring.zero
        args = (a1, a2, a3, a4)
        for perm in permutations(range(4)):
            sgn = _parity(perm)
            term = (((args[perm[0]] * args[perm[1]]) * args[perm[2]])
                    * args[perm[3]]).trace()
            acc = acc + (term if sgn > 0 else -term)
        return acc * ring.from_fraction(Fraction(1, 24))
    if path == "combination":
        if ring.char == 2:
            raise ZeroDivisionError("2 is not invertible in characteristic 2")
        return q_prime_combination().evaluate((a1, a2, a3, a4))
    raise ValueError("path must be 'auto', 'sym' or 'combination'")


def _parity(perm):
    sgn = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sgn = -sgn
    return sgn


# ---------------------------------------------------------------------------
# The 2x2 matrix bridge

_PSI_KILLED = (3, 4, 6, 7)


def psi(f):
    """Projection onto the matrix coordinate subring: z[i,j] -> 0 for
    j in {3, 4, 6, 7}."""
    if not isinstance(f, Polynomial):
        raise TypeError("psi expects a polynomial")
    assignment = {}
    for (i, j) in f.variables():
        if j in _PSI_KILLED:
            assignment[(i, j)] = f.ring.zero
    if not assignment:
        return f
    return f.substitute(assignment)


def psi_hat(a):
    """psi applied to each coordinate of an octonion over a polynomial ring."""
    return oc.Octonion(a.ring, psi(a.alpha), tuple(psi(x) for x in a.u),
                       tuple(psi(x) for x in a.v), psi(a.beta))


def embed_matrix(ring, m):
    """The multiplicative, trace preserving embedding of 2x2 matrices:
    (a1,a2;a3,a4) -> (a1, (a2,0,0), (a3,0,0), a4)."""
    z = ring.zero
    (a1, a2), (a3, a4) = m
    return oc.Octonion(ring, a1, (a2, z, z), (a3, z, z), a4)


def mat2_mul(a, b):
    return ((a[0][0] * b[0][0] + a[0][1] * b[1][0],
             a[0][0] * b[0][1] + a[0][1] * b[1][1]),
            (a[1][0] * b[0][0] + a[1][1] * b[1][0],
             a[1][0] * b[0][1] + a[1][1] * b[1][1]))


def mat2_trace(a):
    return a[0][0] + a[1][1]


def mat2_det(a):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def generic_matrix(ring, i):
    """The generic 2x2 matrix with entries z[i,1], z[i,2], z[i,5], z[i,8]."""
    v = ring.var
    return ((v(i, 1), v(i, 2)), (v(i, 5), v(i, 8)))


class MatrixDescriptor:
    """det(i) or tr(i1 ... ik) on the 2x2 matrix side."""

    __slots__ = ("kind", "indices")

    def __init__(self, kind, indices):
        if kind not in ("det", "tr"):
            raise ValueError("kind must be 'det' or 'tr'")
        self.kind = kind
        self.indices = tuple(indices)

    @property
    def degree(self):
        return 2 if self.kind == "det" else len(self.indices)

    @property
    def in_odd_char_generating_set(self):
        # traces of length > 3 are redundant generators unless char = 2
        return self.kind == "det" or len(self.indices) <= 3

    def name(self):
        if self.kind == "det":
            return "det(%d)" % self.indices[0]
        return "tr(%s)" % ",".join(map(str, self.indices))

    def __eq__(self, other):
        if not isinstance(other, MatrixDescriptor):
            return NotImplemented
        return self.kind == other.kind and self.indices == other.indices

    def __hash__(self):
        return hash(("m", self.kind, self.indices))

    def __repr__(self):
        return self.name()


def matrix_invariants(n, d=None):
    """Conjugation invariants of n generic 2x2 matrices: all det(i) and
    tr of strictly increasing products of length <= d (default n)."""
    if d is None:
        d = n
    out = []
    for deg in range(1, min(d, n) + 1):
        if deg == 2:
            for i in range(1, n + 1):
                out.append(MatrixDescriptor("det", (i,)))
        for seq in combinations(range(1, n + 1), deg):
            out.append(MatrixDescriptor("tr", seq))
    return out


def eval_matrix_descriptor(desc, mats):
    if desc.kind == "det":
        return mat2_det(mats[desc.indices[0] - 1])
    m = mats[desc.indices[0] - 1]
    for i in desc.indices[1:]:
        m = mat2_mul(m, mats[i - 1])
    return mat2_trace(m)


def matrix_descriptor_polynomial(desc, ring):
    n = max(desc.indices)
    mats = [generic_matrix(ring, i) for i in range(1, n + 1)]
    return eval_matrix_descriptor(desc, mats)
