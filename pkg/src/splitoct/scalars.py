"""Exact coefficient rings: prime fields GF(p), rationals, and sparse
multivariate polynomials in variables z[i,j].

Rationals are plain `fractions.Fraction` (ints are accepted wherever a
rational is expected; they are exact rationals with denominator 1).
All rings are interned, so two rings compare equal iff they are the
same object.
"""

from fractions import Fraction

__all__ = [
    "GF", "QQ", "PrimeField", "RationalField", "PolynomialRing",
    "Polynomial", "FpElement", "coefficients_in_z_half",
]


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FpElement:
    """Residue in GF(p). Instances are interned per field."""

    __slots__ = ("field", "r")

    def __init__(self, field, r):
        self.field = field
        self.r = r

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field is not self.field:
                raise ValueError("elements of different prime fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.elem((self.r + o.r) % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.elem((self.r - o.r) % self.field.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.elem((self.r * o.r) % self.field.p)

    __rmul__ = __mul__

    def __neg__(self):
        return self.field.elem((-self.r) % self.field.p)

    def inverse(self):
        if self.r == 0:
            raise ZeroDivisionError("zero has no inverse in GF(%d)" % self.field.p)
        return self.field.elem(pow(self.r, self.field.p - 2, self.field.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return self.field.elem(pow(self.r, k, self.field.p))

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field is other.field and self.r == other.r
        if isinstance(other, int):
            return self.r == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.r))

    def __repr__(self):
        return str(self.r)

    def __bool__(self):
        return self.r != 0


class PrimeField:
    """GF(p) for prime p. `GF(p)` returns the interned instance."""

    _interned = {}

    def __new__(cls, p):
        inst = cls._interned.get(p)
        if inst is None:
            if not _is_prime(p):
                raise ValueError("modulus %r is not prime" % (p,))
            inst = object.__new__(cls)
            inst.p = p
            inst.char = p
            inst.is_field = True
            inst._elems = {}
            cls._interned[p] = inst
        return inst

    def elem(self, r):
        e = self._elems.get(r)
        if e is None:
            e = FpElement(self, r)
            self._elems[r] = e
        return e

    def __call__(self, x):
        if isinstance(x, FpElement):
            if x.field is not self:
                raise ValueError("element of a different prime field")
            return x
        if isinstance(x, int):
            return self.elem(x % self.p)
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        raise TypeError("cannot coerce %r into GF(%d)" % (x, self.p))

    def from_fraction(self, c):
        c = Fraction(c)
        den = c.denominator % self.p
        if den == 0:
            raise ZeroDivisionError("denominator %d not invertible in GF(%d)"
                                    % (c.denominator, self.p))
        return self(c.numerator) * self(den).inverse()

    @property
    def zero(self):
        return self.elem(0)

    @property
    def one(self):
        return self.elem(1)

    def inv(self, x):
        return self(x).inverse()

    def elements(self):
        return [self.elem(r) for r in range(self.p)]

    def __repr__(self):
        return "GF(%d)" % self.p


def GF(p):
    return PrimeField(p)


class RationalField:
    """The rationals. Elements are Fraction (or int, treated exactly)."""

    char = 0
    is_field = True

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError("cannot coerce %r into the rationals" % (x,))

    def from_fraction(self, c):
        return Fraction(c)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def inv(self, x):
        return Fraction(1) / Fraction(x)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class Polynomial:
    """Sparse polynomial in variables z[i,j].

    `terms` maps a monomial to a nonzero base-field coefficient.  A
    monomial is a tuple of ((i, j), exponent) pairs sorted by variable,
    so monomials compare lexicographically on (i, j) then exponent.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise ValueError("polynomials over different rings")
            return other
        try:
            return self.ring(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        zero = self.ring.base.zero
        for m, c in o.terms.items():
            s = terms.get(m, zero) + c
            if s == zero:
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        zero = self.ring.base.zero
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                c = c1 * c2
                if c == zero:
                    continue
                m = _mul_monomials(m1, m2)
                s = terms.get(m)
                s = c if s is None else s + c
                if s == zero:
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring is other.ring and self.terms == other.terms
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m == () for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((), self.ring.base.zero)

    def inverse(self):
        if not self.is_constant() or self.is_zero():
            raise ZeroDivisionError("only nonzero constants are units")
        c = self.constant_value()
        if isinstance(c, FpElement):
            return self.ring.constant(c.inverse())
        return self.ring.constant(Fraction(1) / Fraction(c))

    def variables(self):
        vs = set()
        for m in self.terms:
            for (v, _e) in m:
                vs.add(v)
        return sorted(vs)

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(e for _v, e in m) for m in self.terms)

    def multidegree(self, n=None):
        """Per-slot degree vector (degree in the block z[i,.] for each i).

        Raises ValueError unless the polynomial is multihomogeneous.
        """
        if n is None:
            n = max((v[0] for m in self.terms for (v, _e) in m), default=0)
        mdeg = None
        for m in self.terms:
            d = [0] * n
            for ((i, _j), e) in m:
                d[i - 1] += e
            d = tuple(d)
            if mdeg is None:
                mdeg = d
            elif mdeg != d:
                raise ValueError("polynomial is not multihomogeneous")
        return mdeg if mdeg is not None else (0,) * n

    def monomials_sorted(self):
        return sorted(self.terms)

    def coefficients(self):
        return [self.terms[m] for m in self.monomials_sorted()]

    def substitute(self, assignment):
        """Evaluate with variables (i,j) replaced per `assignment`.

        Values must all live in one ring (base scalars, or polynomials of
        one polynomial ring).  Unassigned variables are retained, which
        requires the target ring to be this very ring.  Returns a base
        scalar when the target is the base field, a Polynomial otherwise.
        """
        target = None
        for v in assignment.values():
            r = v.ring if isinstance(v, Polynomial) else None
            if target is None:
                target = r
            elif target is not r:
                raise ValueError("mixed-ring assignment")
        retained = [v for v in self.variables() if v not in assignment]
        if retained:
            if target is None:
                target = self.ring
            if target is not self.ring:
                raise ValueError("retained variables need the original ring")
        if target is None:
            # scalar values only; land in the base field
            acc = self.ring.base.zero
            for m, c in self.terms.items():
                val = c
                for (v, e) in m:
                    a = assignment[v]
                    if isinstance(a, (int, Fraction)):
                        a = self.ring.base(a)
                    for _ in range(e):
                        val = val * a
                acc = acc + val
            return acc
        acc = target.zero
        for m, c in self.terms.items():
            val = target.constant(c)
            for (v, e) in m:
                if v in assignment:
                    a = assignment[v]
                    if not isinstance(a, Polynomial):
                        a = target.constant(target.base(a))
                else:
                    a = target.var(*v)
                val = val * a ** e
            acc = acc + val
        return acc

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in self.monomials_sorted():
            c = self.terms[m]
            factors = ["z[%d,%d]%s" % (v[0], v[1], "" if e == 1 else "^%d" % e)
                       for v, e in m]
            body = "*".join(factors)
            if not factors:
                parts.append(str(c))
            elif c == self.ring.base.one:
                parts.append(body)
            else:
                parts.append("%s*%s" % (c, body))
        return " + ".join(parts)


def _mul_monomials(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class PolynomialRing:
    """Polynomials over GF(p) or the rationals, variables keyed (i, j)."""

    _interned = {}

    def __new__(cls, base):
        key = id(base)
        inst = cls._interned.get(key)
        if inst is None:
            inst = object.__new__(cls)
            inst.base = base
            inst.char = base.char
            inst.is_field = False
            cls._interned[key] = inst
        return inst

    def var(self, i, j):
        return Polynomial(self, {(((i, j), 1),): self.base.one})

    def constant(self, c):
        c = self.base(c) if isinstance(c, (int, Fraction)) else c
        if c == self.base.zero:
            return Polynomial(self, {})
        return Polynomial(self, {(): c})

    def __call__(self, x):
        if isinstance(x, Polynomial):
            if x.ring is not self:
                raise ValueError("polynomial from a different ring")
            return x
        return self.constant(self.base(x))

    def from_fraction(self, c):
        return self.constant(self.base.from_fraction(c))

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.constant(self.base.one)

    def inv(self, x):
        return self(x).inverse()

    def __repr__(self):
        return "%r[z]" % (self.base,)


def coefficients_in_z_half(f):
    """True iff every coefficient of f has a power-of-two denominator."""
    for c in f.terms.values():
        den = Fraction(c).denominator
        if den & (den - 1):
            return False
    return True
