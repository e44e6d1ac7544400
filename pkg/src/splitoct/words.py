"""Non-associative words and the exact trace normalizer.

A word is a binary tree built from plain tuples: a leaf is an int letter
index (1-based), an inner node is a pair (left, right).  The normalizer
rewrites tr(w(Z_1,...,Z_n)) into an exact linear combination of products
of the canonical invariants tr(i_1,...,i_k) (left-normed, strictly
increasing indices) and n(i).  Unlike the coarse equivalence modulo
decomposables, every lower-order correction term is kept, so the output
is an identity that can be checked by evaluation over any ring.

The rewriting uses three exact consequences of the quadratic relation
and linearized alternativity:

  (swap)      AB   = -BA + tr(A)B + tr(B)A + (tr(AB) - tr(A)tr(B)) 1
  (exchange)  A(BC) = -B(AC) + tr(A)(BC) + tr(B)(AC) + (tr(AB) - tr(A)tr(B)) C
  (square)    (PA)A = P(A*A) = tr(A)(PA) - n(A)P

Products of left-normed words reduce by induction on the length of the
right factor; index sequences are then sorted by adjacent transpositions,
each with its full correction terms.
"""

from fractions import Fraction

__all__ = [
    "degree", "leaves", "multidegree", "is_multilinear",
    "left_normed", "is_left_normed", "ln_indices", "evaluate",
    "TraceExpr", "te_const", "te_tr", "te_norm",
    "normalize_trace", "multilinear_sign", "Decomposable", "DECOMPOSABLE",
    "all_shapes", "canonical_trace",
]

UNIT = ()  # the algebra unit 1_O, as a key in word linear combinations


def degree(w):
    if isinstance(w, int):
        return 1
    return degree(w[0]) + degree(w[1])


def leaves(w):
    if isinstance(w, int):
        return (w,)
    return leaves(w[0]) + leaves(w[1])


def multidegree(w, n):
    h = [0] * n
    for i in leaves(w):
        h[i - 1] += 1
    return tuple(h)


def is_multilinear(w):
    ls = leaves(w)
    return len(set(ls)) == len(ls)


def left_normed(indices):
    """The left comb ((..(x_{i1} x_{i2}) x_{i3})..) x_{ik}."""
    indices = tuple(indices)
    if not indices:
        raise ValueError("a word needs at least one letter")
    w = indices[0]
    for i in indices[1:]:
        w = (w, i)
    return w


def is_left_normed(w):
    while not isinstance(w, int):
        if not isinstance(w[1], int):
            return False
        w = w[0]
    return True


def ln_indices(w):
    """Index sequence of a left-normed word."""
    out = []
    while not isinstance(w, int):
        out.append(w[1])
        w = w[0]
    out.append(w)
    out.reverse()
    return tuple(out)


def all_shapes(d):
    """All binary tree shapes with d leaves; leaves are None placeholders."""
    if d == 1:
        return [None]
    out = []
    for k in range(1, d):
        for l in all_shapes(k):
            for r in all_shapes(d - k):
                out.append((l, r))
    return out


def evaluate(w, tup, memo=None):
    """Evaluate the word on a tuple of octonions by its tree shape."""
    if isinstance(w, int):
        if not 1 <= w <= len(tup):
            raise IndexError("letter %d exceeds tuple length %d" % (w, len(tup)))
        return tup[w - 1]
    if memo is not None:
        val = memo.get(w)
        if val is not None:
            return val
    val = evaluate(w[0], tup, memo) * evaluate(w[1], tup, memo)
    if memo is not None:
        memo[w] = val
    return val


# ---------------------------------------------------------------------------
# Trace expressions


def _factor_degree(f):
    return len(f[1]) if f[0] == "t" else 2


def _monomial_degree(m):
    return sum(_factor_degree(f) for f in m)


class TraceExpr:
    """Exact linear combination of products of tr(i1,...,ik) and n(i).

    Monomials are sorted tuples of factors ('t', (i1,...,ik)) or ('n', i);
    coefficients are exact integers or Fractions.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = te_const(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
        return TraceExpr(terms)

    __radd__ = __add__

    def __neg__(self):
        return TraceExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = te_const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return TraceExpr()
            return TraceExpr({m: c * other for m, c in self.terms.items()})
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                s = terms.get(m, 0) + c1 * c2
                if s == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return TraceExpr(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TraceExpr):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def reduce_mod(self, p):
        """Coefficients reduced into GF(p); drops vanishing monomials."""
        field = None
        terms = {}
        for m, c in self.terms.items():
            c = Fraction(c)
            num, den = c.numerator % p, c.denominator % p
            if den == 0:
                raise ZeroDivisionError("coefficient %s undefined mod %d" % (c, p))
            r = (num * pow(den, p - 2, p)) % p
            if r:
                terms[m] = r
        expr = TraceExpr(terms)
        return expr

    def monomials_sorted(self):
        return sorted(self.terms, key=lambda m: (_monomial_degree(m), m))

    def evaluate(self, tup, cache=None):
        """Evaluate on a tuple of octonions; exact in the tuple's ring."""
        ring = tup[0].ring
        if cache is None:
            cache = {}
        memo = cache.setdefault("words", {})
        acc = ring.zero
        for m, c in self.terms.items():
            if isinstance(c, Fraction) and c.denominator != 1:
                val = ring.from_fraction(c)
            else:
                val = ring(int(c))
            for f in m:
                fv = cache.get(f)
                if fv is None:
                    if f[0] == "t":
                        fv = evaluate(left_normed(f[1]), tup, memo).trace()
                    else:
                        fv = tup[f[1] - 1].norm()
                    cache[f] = fv
                val = val * fv
            acc = acc + val
        return acc

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials_sorted():
            c = self.terms[m]
            factors = []
            for f in m:
                if f[0] == "t":
                    factors.append("tr(%s)" % ",".join(map(str, f[1])))
                else:
                    factors.append("n(%d)" % f[1])
            body = "*".join(factors) if factors else "1"
            parts.append("%s*%s" % (c, body) if c != 1 or not factors else body)
        return " + ".join(parts)


def te_const(c):
    if c == 0:
        return TraceExpr()
    return TraceExpr({(): c})


def te_tr(indices):
    return TraceExpr({(("t", tuple(indices)),): 1})


def te_norm(i):
    return TraceExpr({(("n", i),): 1})


_TE_ONE = te_const(1)


# ---------------------------------------------------------------------------
# The rewriting engine

_canon_cache = {}
_mul_cache = {}


def canonical_trace(J):
    """tr of the left-normed word with index sequence J, as a TraceExpr
    over sorted strictly increasing canonical monomials."""
    J = tuple(J)
    out = _canon_cache.get(J)
    if out is not None:
        return out
    k = len(J)
    if k == 1:
        out = te_tr(J)
    elif k == 2:
        i, j = J
        if i == j:
            # tr(Z^2) = tr(Z)^2 - 2 n(Z), from the quadratic relation
            out = te_tr((i,)) * te_tr((i,)) - 2 * te_norm(i)
        else:
            out = te_tr((min(i, j), max(i, j)))
    else:
        m = None
        for t in range(k - 1):
            if J[t] >= J[t + 1]:
                m = t
                break
        if m is None:
            out = te_tr(J)
        elif J[m] == J[m + 1]:
            j = J[m]
            rest1 = J[:m] + (j,) + J[m + 2:]
            rest2 = J[:m] + J[m + 2:]
            out = te_tr((j,)) * canonical_trace(rest1) \
                - te_norm(j) * canonical_trace(rest2)
        else:
            a, b = J[m], J[m + 1]
            swapped = J[:m] + (b, a) + J[m + 2:]
            with_b = J[:m] + (b,) + J[m + 2:]
            with_a = J[:m] + (a,) + J[m + 2:]
            dropped = J[:m] + J[m + 2:]
            tab = te_tr((min(a, b), max(a, b)))
            ta, tb = te_tr((a,)), te_tr((b,))
            out = -canonical_trace(swapped) \
                + ta * canonical_trace(with_b) \
                + tb * canonical_trace(with_a) \
                + (tab - ta * tb) * canonical_trace(dropped)
    _canon_cache[J] = out
    return out


def _ae_add(acc, key, expr):
    cur = acc.get(key)
    cur = expr if cur is None else cur + expr
    if cur.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = cur


def _trace_of(acc):
    out = TraceExpr()
    for key, s in acc.items():
        if key == UNIT:
            out = out + s * 2  # tr(1_O) = 2
        else:
            out = out + s * canonical_trace(ln_indices(key))
    return out


def _mul_left_normed(L, R):
    """Product of two left-normed words as a combination of left-normed
    words and the unit, with TraceExpr coefficients.  Exact identity."""
    key = (L, R)
    out = _mul_cache.get(key)
    if out is not None:
        return out
    if isinstance(R, int):
        out = {(L, R): _TE_ONE}
        _mul_cache[key] = out
        return out
    R1, x = R
    M = _mul_left_normed((L, x), R1)
    tL = canonical_trace(ln_indices(L))
    tLx = canonical_trace(ln_indices(L) + (x,))
    tR1 = canonical_trace(ln_indices(R1))
    tLR1 = _trace_of(_mul_left_normed(L, R1))
    tM = _trace_of(M)
    out = dict(M)
    _ae_add(out, R, tL)
    _ae_add(out, R1, -tLx)
    _ae_add(out, x, tLR1 - tL * tR1)
    _ae_add(out, UNIT, -(tM - tR1 * tLx))
    _mul_cache[key] = out
    return out


def _to_left_normed(w):
    if isinstance(w, int):
        return {w: _TE_ONE}
    ea = _to_left_normed(w[0])
    eb = _to_left_normed(w[1])
    out = {}
    for wa, sa in ea.items():
        for wb, sb in eb.items():
            s = sa * sb
            if wa == UNIT:
                _ae_add(out, wb, s)
            elif wb == UNIT:
                _ae_add(out, wa, s)
            else:
                for wk, sc in _mul_left_normed(wa, wb).items():
                    _ae_add(out, wk, s * sc)
    return out


def normalize_trace(w, char=0):
    """Exact expansion of tr(w(Z_1,...,Z_n)) over canonical monomials.

    With char=p the coefficients are reduced into GF(p); char=0 keeps
    them in Z (signs are always computed in Z first).
    """
    out = _trace_of(_to_left_normed(w))
    if char:
        out = out.reduce_mod(char)
    return out


class Decomposable:
    """Marker: the trace is a polynomial in strictly lower degree invariants."""

    def __repr__(self):
        return "Decomposable"


DECOMPOSABLE = Decomposable()


def multilinear_sign(w):
    """Sign and sorted indices with tr(w) = sign*tr(sorted) modulo
    decomposables, or DECOMPOSABLE for a non-multilinear word of
    degree > 2."""
    ls = leaves(w)
    k = len(ls)
    if len(set(ls)) != k:
        if k > 2:
            return DECOMPOSABLE
        raise ValueError("sign is defined for multilinear words or degree > 2")
    srt = tuple(sorted(ls))
    if k == 1:
        return (1, srt)
    if k == 2:
        # convention of the degree-2 rearrangement of the swap identity;
        # the exact expansion still collects to +tr(i,j)
        return ((1 if ls[0] < ls[1] else -1), srt)
    coeff = normalize_trace(w).terms.get((("t", srt),), 0)
    return (int(coeff), srt)
