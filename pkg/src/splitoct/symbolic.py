"""Symbolic verification layer: the defining identities of the algebra
checked as exact polynomial identities in generic octonions, the closed
form of the skew symmetrized degree-4 trace, and a linear-algebra
decomposability checker over exact fields.
"""

from fractions import Fraction
from itertools import permutations

from . import linalg
from . import octonion as oc
from .invariants import (generic_octonion, generic_traceless_octonion,
                         q_prime_combination)
from .scalars import QQ, PolynomialRing, coefficients_in_z_half

__all__ = [
    "IDENTITY_NAMES", "verify_identity", "verify_all_identities",
    "verify_skew_symmetrization", "skew_symmetrized_trace_polynomial",
    "decomposability_check", "CheckResult",
    "generic_octonion", "generic_traceless_octonion",
]


class CheckResult:
    __slots__ = ("name", "ok", "detail")

    def __init__(self, name, ok, detail=None):
        self.name = name
        self.ok = ok
        self.detail = detail

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "%s: %s%s" % (self.name, "pass" if self.ok else "FAIL",
                             " (%s)" % (self.detail,) if self.detail else "")


# name -> (number of generic octonions, checker)

def _zero_oct(ring, a):
    return a.is_zero()


def _id_trace_symmetry(z):
    return (z[0] * z[1]).trace() - (z[1] * z[0]).trace()


def _id_norm_multiplicativity(z):
    return (z[0] * z[1]).norm() - z[0].norm() * z[1].norm()


def _id_quadratic(z):
    a = z[0]
    return a * a - a.scale(a.trace()) + oc.identity(a.ring).scale(a.norm())


def _id_norm_polarization(z):
    a, b = z
    return ((a + b).norm() - a.norm() - b.norm()
            + (a * b).trace() - a.trace() * b.trace())


def _id_product_polarization(z):
    a, b = z
    one = oc.identity(a.ring)
    return (a * b + b * a - b.scale(a.trace()) - a.scale(b.trace())
            - one.scale((a * b).trace() - a.trace() * b.trace()))


def _id_left_alternative(z):
    a, b = z
    return a * (a * b) - (a * a) * b


def _id_right_alternative(z):
    a, b = z
    return (b * a) * a - b * (a * a)


def _id_left_alt_linearized(z):
    a, c, b = z
    return a * (c * b) + c * (a * b) - (a * c + c * a) * b


def _id_right_alt_linearized(z):
    a, c, b = z
    return (b * a) * c + (b * c) * a - b * (a * c + c * a)


def _id_trace_associativity(z):
    a, b, c = z
    return ((a * b) * c).trace() - (a * (b * c)).trace()


def _id_norm_trace_relation(z):
    a = z[0]
    return 2 * a.norm() + (a * a).trace() - a.trace() * a.trace()


_IDENTITIES = {
    "trace-symmetry": (2, _id_trace_symmetry),
    "norm-multiplicativity": (2, _id_norm_multiplicativity),
    "quadratic-relation": (1, _id_quadratic),
    "norm-polarization": (2, _id_norm_polarization),
    "product-polarization": (2, _id_product_polarization),
    "left-alternative": (2, _id_left_alternative),
    "right-alternative": (2, _id_right_alternative),
    "left-alternative-linearized": (3, _id_left_alt_linearized),
    "right-alternative-linearized": (3, _id_right_alt_linearized),
    "trace-associativity": (3, _id_trace_associativity),
    "norm-trace-relation": (1, _id_norm_trace_relation),
}

IDENTITY_NAMES = tuple(_IDENTITIES)


def _first_failing_monomial(x):
    if isinstance(x, oc.Octonion):
        for coord in x.coords():
            if not coord.is_zero():
                m = coord.monomials_sorted()[0]
                return (m, coord.terms[m])
        return None
    if x.is_zero():
        return None
    m = x.monomials_sorted()[0]
    return (m, x.terms[m])


def verify_identity(name, base=QQ):
    """Check one defining identity exactly in generic octonions over the
    given base field.  Failure reports the first offending monomial."""
    if name not in _IDENTITIES:
        raise ValueError("unknown identity %r (choose from %s)"
                         % (name, ", ".join(IDENTITY_NAMES)))
    count, fn = _IDENTITIES[name]
    ring = PolynomialRing(base)
    z = tuple(generic_octonion(ring, i) for i in range(1, count + 1))
    residue = fn(z)
    bad = _first_failing_monomial(residue)
    return CheckResult(name, bad is None, bad)


def verify_all_identities(base=QQ):
    return [verify_identity(name, base) for name in IDENTITY_NAMES]


def skew_symmetrized_trace_polynomial(ring=None):
    """The full signed average of tr over the 24 argument orders of the
    degree-4 left-normed product, on generic octonions; 32 variables."""
    if ring is None:
        ring = PolynomialRing(QQ)
    z = [generic_octonion(ring, i) for i in range(1, 5)]
    acc = ring.zero
    for perm in permutations(range(4)):
        sgn = 1
        for i in range(4):
            for j in range(i + 1, 4):
                if perm[i] > perm[j]:
                    sgn = -sgn
        term = (((z[perm[0]] * z[perm[1]]) * z[perm[2]]) * z[perm[3]]).trace()
        acc = acc + (term if sgn > 0 else -term)
    return Fraction(1, 24) * acc


def verify_skew_symmetrization():
    """The signed average equals its closed combination of canonical
    invariants, exactly, and its coefficients lie in Z[1/2]."""
    ring = PolynomialRing(QQ)
    lhs = skew_symmetrized_trace_polynomial(ring)
    z = tuple(generic_octonion(ring, i) for i in range(1, 5))
    rhs = q_prime_combination().evaluate(z)
    diff = lhs - rhs
    bad = _first_failing_monomial(diff)
    if bad is not None:
        return CheckResult("skew-symmetrization", False, bad)
    if not coefficients_in_z_half(lhs):
        return CheckResult("skew-symmetrization", False, "coefficient outside Z[1/2]")
    return CheckResult("skew-symmetrization", True)


# ---------------------------------------------------------------------------
# Decomposability


def _products_with_multidegree(gens, target_mdeg, _start=0, _memo=None):
    """All multisets of generator indices whose multidegrees sum to the
    target.  gens: list of (label, polynomial, mdeg)."""
    if _memo is None:
        _memo = {}
    key = (_start, target_mdeg)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    out = []
    if all(t == 0 for t in target_mdeg):
        out.append(())
    else:
        for k in range(_start, len(gens)):
            md = gens[k][2]
            if any(m > t for m, t in zip(md, target_mdeg)):
                continue
            rest = tuple(t - m for t, m in zip(target_mdeg, md))
            for tail in _products_with_multidegree(gens, rest, k, _memo):
                out.append((k,) + tail)
    _memo[key] = out
    return out


def decomposability_check(target, generators, field=QQ):
    """Is the target polynomial a linear combination of products of the
    generator polynomials, within its multidegree component?

    Inputs must be multihomogeneous.  Candidate products run over all
    multisets of generators whose multidegrees sum to the target's (a
    single generator of full degree counts as a product of one).  For the
    decomposability question pass only generators of strictly lower
    degree, so every candidate is a product of at least two of them.
    Returns (expressible, certificate) where the certificate maps a
    tuple of generator labels to its coefficient.

    generators: list of (label, polynomial) pairs.
    """
    n = max((v[0] for m in target.terms for (v, _e) in m), default=1)
    tmdeg = target.multidegree(n)
    gens = []
    for label, g in generators:
        try:
            gm = g.multidegree(n)
        except ValueError:
            raise ValueError("generator %r is not multihomogeneous" % (label,))
        gens.append((label, g, gm))
    combos = _products_with_multidegree(gens, tmdeg)
    products = []
    for combo in combos:
        p = target.ring.one
        for k in combo:
            p = p * gens[k][1]
        products.append((tuple(gens[k][0] for k in combo), p))
    if not products:
        return (False, None)
    monomials = sorted(set().union(*[set(p.terms) for _lbl, p in products],
                                   set(target.terms)))
    mindex = {m: r for r, m in enumerate(monomials)}
    zero = field.zero
    rows = [[zero] * len(products) for _ in monomials]
    for c, (_lbl, p) in enumerate(products):
        for m, coeff in p.terms.items():
            rows[mindex[m]][c] = coeff
    rhs = [target.terms.get(m, zero) for m in monomials]
    sol = linalg.solve(rows, rhs, field)
    if sol is None:
        return (False, None)
    certificate = {lbl: coeff for (lbl, _p), coeff in zip(products, sol)
                   if coeff != zero}
    return (True, certificate)
