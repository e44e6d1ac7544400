"""Command-line front end.

Tuple files are plain text: a header line "field q" (rationals) or
"field p=<prime>", then one octonion per line as 8 whitespace-separated
scalars in the order alpha u1 u2 u3 v1 v2 v3 beta.  '#' starts a
comment.  Negative literals are accepted in any field and reduced.
"""

import argparse
import sys
import time
from fractions import Fraction

from . import group as gp
from . import octonion as oc
from . import orbits as ob
from . import suite
from . import symbolic as sy
from .invariants import enumerate_set, eval_descriptor
from .scalars import GF, QQ

__all__ = ["main", "parse_tuple_file", "ParseError"]


class ParseError(Exception):
    pass


def _parse_scalar(ring, token, lineno):
    try:
        frac = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError("line %d: cannot parse scalar %r" % (lineno, token))
    try:
        return ring.from_fraction(frac)
    except ZeroDivisionError:
        raise ParseError("line %d: scalar %r is undefined in this field"
                         % (lineno, token))


def parse_tuple_file(text):
    """Parse a tuple file; returns (ring, tuple of octonions)."""
    ring = None
    octs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "field":
                raise ParseError("line %d: expected header 'field q' or "
                                 "'field p=<prime>'" % lineno)
            spec = parts[1]
            if spec == "q":
                ring = QQ
            elif spec.startswith("p="):
                try:
                    p = int(spec[2:])
                    ring = GF(p)
                except ValueError:
                    raise ParseError("line %d: bad field spec %r" % (lineno, spec))
            else:
                raise ParseError("line %d: bad field spec %r" % (lineno, spec))
            continue
        tokens = line.split()
        if len(tokens) != 8:
            raise ParseError("line %d: expected 8 scalars, got %d"
                             % (lineno, len(tokens)))
        coords = [_parse_scalar(ring, t, lineno) for t in tokens]
        octs.append(oc.from_coords(ring, coords))
    if ring is None:
        raise ParseError("missing 'field' header line")
    if not octs:
        raise ParseError("no octonions in file")
    return ring, tuple(octs)


def _load(path):
    try:
        with open(path) as fh:
            return parse_tuple_file(fh.read())
    except OSError as exc:
        raise ParseError(str(exc))


def _render(ring, value):
    if ring is QQ:
        return str(Fraction(value))
    return str(value)


def _render_octonion(ring, a):
    return " ".join(_render(ring, c) for c in a.coords())


def cmd_eval(args, out):
    ring, tup = _load(args.file)
    rows = []
    for desc in enumerate_set(args.family, len(tup), args.degree):
        rows.append("%s = %s" % (desc.name(),
                                 _render(ring, eval_descriptor(desc, tup))))
    for row in rows:
        print(row, file=out)
    return 0


def cmd_separate(args, out):
    ring_a, tup_a = _load(args.file_a)
    ring_b, tup_b = _load(args.file_b)
    if ring_a is not ring_b:
        raise ParseError("the two files declare different fields")
    if len(tup_a) != len(tup_b):
        raise ParseError("the two files have different tuple lengths")
    report = ob.separate(tup_a, tup_b, args.family, args.degree)
    if report.separated:
        print("separated by %s: %s != %s"
              % (report.witness.name(), _render(ring_a, report.values[0]),
                 _render(ring_a, report.values[1])), file=out)
        return 0
    print("not separated (family %s, degree <= %d)"
          % (args.family, args.degree), file=out)
    return 1


def cmd_limit(args, out):
    ring, tup = _load(args.file)
    try:
        lam = tuple(int(x) for x in args.lam.split(","))
    except ValueError:
        raise ParseError("bad --lambda value %r" % args.lam)
    if len(lam) != 3 or sum(lam) != 0:
        raise ParseError("--lambda needs three integers summing to zero")
    res = ob.limit(lam, tup)
    print("lambda = (%d,%d,%d)" % lam, file=out)
    print("rank before = %d" % ob.rank(tup), file=out)
    if not res.exists:
        print("limit does not exist", file=out)
        return 0
    print("limit exists", file=out)
    for a in res.value:
        print(_render_octonion(ring, a), file=out)
    print("rank after = %d" % ob.rank(res.value), file=out)
    return 0


def cmd_verify(args, out):
    width = max(len(n) for n in sy.IDENTITY_NAMES) + 2
    all_ok = True
    for name in sy.IDENTITY_NAMES:
        ok = all(sy.verify_identity(name, base) for base in (QQ, GF(2), GF(5)))
        all_ok = all_ok and ok
        print("%-*s %s" % (width, name, "pass" if ok else "FAIL"), file=out)
    r = sy.verify_skew_symmetrization()
    all_ok = all_ok and r.ok
    print("%-*s %s" % (width, "skew-symmetrization", "pass" if r.ok else "FAIL"),
          file=out)
    return 0 if all_ok else 1


def cmd_group(args, out):
    t0 = time.time()
    mats, _words = gp.enumerate_group_array(args.q)
    elapsed = time.time() - t0
    print("order %d" % mats.shape[0], file=out)
    print("elapsed %.2fs" % elapsed, file=sys.stderr)
    return 0


def cmd_examples(args, out):
    results = suite.run_all()
    width = max(len(n) for n, _ in results) + 2
    passed = 0
    for name, ok in results:
        passed += ok
        print("%-*s %s" % (width, name, "pass" if ok else "FAIL"), file=out)
    print("%d checks, %d passed" % (len(results), passed), file=out)
    return 0 if passed == len(results) else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="splitoct",
        description="Exact split-octonion invariants toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the invariant family on a tuple file")
    p.add_argument("file")
    p.add_argument("--family", choices=["S", "S0"], default="S")
    p.add_argument("--degree", type=int, default=8)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("separate", help="separation report for two tuple files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--family", choices=["S", "S0"], default="S")
    p.add_argument("--degree", type=int, default=8)
    p.set_defaults(fn=cmd_separate)

    p = sub.add_parser("limit", help="diagonal one-parameter limit of a tuple file")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="three comma-separated integers summing to zero")
    p.set_defaults(fn=cmd_limit)

    p = sub.add_parser("verify", help="run the symbolic identity suite")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("group", help="enumerate the automorphism group over GF(q)")
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("paper-examples",
                       help="run the bundled reference example checks")
    p.set_defaults(fn=cmd_examples)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, IndexError, ZeroDivisionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
