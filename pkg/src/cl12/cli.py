"""Command line front end.

Subcommands: eval, solve, similar, rep, eig, det, verify.  Multivector
literals follow ``term (('+'|'-') term)*`` with ``term`` a decimal
coefficient, a basis symbol e0..e7, or both (``2.5 e3``); a JSON array of
eight numbers is accepted as well.  ``2e3`` denotes 2 * e3; scientific
notation needs a signed exponent (``1e-9``).  ``eval`` additionally
supports ``*``, parentheses and the unary functions conj(), prime(),
cre(), cim(), inv() and pinv().

Exit codes: 0 success, 1 domain error (singular input to inv(),
unsolvable system under --strict, failed verification), 2 parse or usage
error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .inverse import SingularElement, inverse, mp_inverse
from .matrep import determinant, eigenvalues, left_matrix, right_matrix
from .multivector import DEFAULT_TOL, Multivector, format_multivector
from .similarity import is_similar
from .solver import solve_ax, solve_axb, solve_xb
from .verify import run_all

__all__ = ["ParseError", "parse_multivector", "main"]


class ParseError(ValueError):
    """Bad multivector or expression input; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


# '2e3' means 2 * e3; an exponent is only an exponent with an explicit
# sign ('1e-13'), which is how the 12-digit formatter always writes them
_NUM_RE = re.compile(r"(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]\d+)?")
_NAME_RE = re.compile(r"[A-Za-z]+\d*")
_FUNCTIONS = ("conj", "prime", "cre", "cim", "inv", "pinv")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        m = _NUM_RE.match(text, i)
        if m:
            tokens.append(("num", float(m.group()), i))
            i = m.end()
            continue
        m = _NAME_RE.match(text, i)
        if m:
            name = m.group()
            if re.fullmatch(r"e[0-7]", name):
                tokens.append(("basis", int(name[1]), i))
            elif name in _FUNCTIONS:
                tokens.append(("func", name, i))
            else:
                raise ParseError(f"unknown symbol {name!r}", i)
            i = m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    """Recursive descent over: expr := term (('+'|'-') term)*,
    term := factor ('*' factor)*, factor := ['-'] atom."""

    def __init__(self, text: str, tol: float = DEFAULT_TOL):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.tol = tol

    def _peek(self) -> tuple[str, object, int]:
        return self.tokens[self.pos]

    def _next(self) -> tuple[str, object, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect(self, kind: str) -> tuple[str, object, int]:
        tok = self._next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2])
        return tok

    def parse(self) -> Multivector:
        value = self._expr()
        tok = self._peek()
        if tok[0] != "end":
            raise ParseError("trailing input", tok[2])
        return value

    def _expr(self) -> Multivector:
        value = self._factor()
        while self._peek()[0] in "+-*":
            op = self._next()[0]
            rhs = self._factor()
            value = value + rhs if op == "+" else value - rhs if op == "-" else value * rhs
        return value

    def _factor(self) -> Multivector:
        tok = self._peek()
        if tok[0] == "-":
            self._next()
            return -self._factor()
        if tok[0] == "+":
            self._next()
            return self._factor()
        return self._atom()

    def _atom(self) -> Multivector:
        kind, value, pos = self._next()
        if kind == "num":
            if self._peek()[0] == "basis":
                _, t, _ = self._next()
                return float(value) * Multivector.basis(int(t))
            return Multivector.scalar(float(value))
        if kind == "basis":
            return Multivector.basis(int(value))
        if kind == "func":
            self._expect("(")
            arg = self._expr()
            self._expect(")")
            return self._apply(str(value), arg)
        if kind == "(":
            inner = self._expr()
            self._expect(")")
            return inner
        raise ParseError("expected a number, basis symbol or function", pos)

    def _apply(self, name: str, arg: Multivector) -> Multivector:
        if name == "conj":
            return arg.conjugate()
        if name == "prime":
            return arg.prime()
        if name == "cre":
            return arg.cre()
        if name == "cim":
            return arg.cim()
        if name == "inv":
            return inverse(arg, self.tol)
        return mp_inverse(arg, self.tol).pinv


def parse_multivector(text: str, tol: float = DEFAULT_TOL) -> Multivector:
    """Parse a literal: JSON array of 8 numbers, or the sum grammar."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON literal: {exc.msg}", exc.pos) from None
        if not isinstance(data, list) or len(data) != 8 \
                or not all(isinstance(x, (int, float)) for x in data):
            raise ParseError("JSON literal must be an array of 8 numbers", 0)
        return Multivector(data)
    return _Parser(stripped, tol).parse()


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _g(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def _format_complex(z: complex) -> str:
    re_, im = z.real, z.imag
    if im == 0:
        return _g(re_)
    imag = "i" if im == 1 else "-i" if im == -1 else f"{_g(im)}i"
    if re_ == 0:
        return imag
    return f"{_g(re_)}{'+' if im > 0 else '-'}{imag.lstrip('-')}"


def _mv_json(m: Multivector) -> dict:
    f = m.functionals()
    return {"coeffs": list(m.coeffs), "N": f.N, "T": f.T, "P": f.P}


def _print_matrix(m) -> None:
    cells = [[_g(v) for v in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    for row in cells:
        print(" ".join(c.rjust(width) for c in row))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_eval(args) -> int:
    result = _Parser(args.expr, args.tol).parse()
    if args.json:
        print(json.dumps(_mv_json(result)))
        return 0
    f = result.functionals()
    print(format_multivector(result))
    print(f"N = {_g(f.N)}  T = {_g(f.T)}  P = {_g(f.P)}")
    return 0


def _cmd_solve(args) -> int:
    d = parse_multivector(args.d, args.tol)
    if args.kind == "axb":
        if args.a is None or args.b is None:
            raise ParseError("solve axb needs both --a and --b", 0)
        sol = solve_axb(parse_multivector(args.a, args.tol),
                        parse_multivector(args.b, args.tol), d, args.tol)
    elif args.kind == "ax":
        if args.a is None:
            raise ParseError("solve ax needs --a", 0)
        sol = solve_ax(parse_multivector(args.a, args.tol), d, args.tol)
    else:
        if args.b is None:
            raise ParseError("solve xb needs --b", 0)
        sol = solve_xb(parse_multivector(args.b, args.tol), d, args.tol)

    if args.json:
        print(json.dumps({
            "solvable": sol.solvable,
            "particular": _mv_json(sol.particular) if sol.particular is not None else None,
            "hom_basis": [_mv_json(h) for h in sol.hom_basis],
            "dim": sol.dim,
            "residual": sol.residual,
        }))
    else:
        print(f"solvable: {'yes' if sol.solvable else 'no'}")
        if sol.particular is not None:
            print(f"particular: {format_multivector(sol.particular)}")
        print(f"homogeneous dimension: {sol.dim}")
        for h in sol.hom_basis:
            print(f"  {format_multivector(h)}")
        print(f"residual: {_g(sol.residual)}")
    if args.strict and not sol.solvable:
        return 1
    return 0


def _cmd_similar(args) -> int:
    a = parse_multivector(args.a, args.tol)
    b = parse_multivector(args.b, args.tol)
    verdict = is_similar(a, b, args.tol, seed=args.seed)
    check = None
    if verdict.similar:
        check = (verdict.witness * a - b * verdict.witness).norm()
        scale = max(a.norm(), b.norm())
        if check > 8 * args.tol * (1.0 + scale + scale * scale):
            print(f"error: witness failed its defining equation (|qa - bq| = {check:g})",
                  file=sys.stderr)
            return 1
    if args.json:
        print(json.dumps({
            "similar": verdict.similar,
            "reason": verdict.reason.value,
            "witness": _mv_json(verdict.witness) if verdict.witness is not None else None,
        }))
        return 0
    print(f"similar: {'yes' if verdict.similar else 'no'}")
    print(f"reason: {verdict.reason.value}")
    if verdict.witness is not None:
        print(f"witness: {format_multivector(verdict.witness)}")
        print(f"witness residual: {_g(check)}")
    return 0


def _cmd_rep(args) -> int:
    a = parse_multivector(args.a, args.tol)
    m = left_matrix(a) if args.side == "left" else right_matrix(a)
    if args.json:
        print(json.dumps({"side": args.side, "matrix": [list(row) for row in m]}))
    else:
        _print_matrix(m)
    return 0


def _cmd_eig(args) -> int:
    spectrum = eigenvalues(parse_multivector(args.a, args.tol))
    if args.json:
        print(json.dumps({
            "eigenvalues": [{"re": z.real, "im": z.imag} for z in spectrum.values],
            "multiplicity": spectrum.multiplicity,
        }))
    else:
        listing = ", ".join(_format_complex(z) for z in spectrum.values)
        print(f"{listing}  (each with algebraic multiplicity {spectrum.multiplicity})")
    return 0


def _cmd_det(args) -> int:
    a = parse_multivector(args.a, args.tol)
    det = determinant(left_matrix(a))
    p = a.functionals().P
    if args.json:
        print(json.dumps({"det": det, "P": p, "P_squared": p * p}))
    else:
        print(f"det = {_g(det)}  (P = {_g(p)}, P^2 = {_g(p * p)})")
    return 0


def _cmd_verify(args) -> int:
    results = run_all(trials=args.trials, seed=args.seed, tol=args.tol)
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({
            "ok": ok,
            "suites": [{"name": r.name, "passed": r.passed, "failed": r.failed} for r in results],
        }))
    else:
        for r in results:
            print(f"{r.name}: {r.passed} passed, {r.failed} failed")
            for msg in r.messages:
                print(f"  {msg}")
        print(f"overall: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _nonneg_float(text: str) -> float:
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cl12", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--tol", type=_nonneg_float, default=DEFAULT_TOL,
                        help="tolerance for singularity and comparisons (default 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a multivector expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("solve", parents=[common], help="solve a*x*b = d, a*x = d or x*b = d")
    p.add_argument("kind", choices=["axb", "ax", "xb"])
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--d", required=True)
    p.add_argument("--strict", action="store_true", help="exit 1 when unsolvable")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("similar", parents=[common], help="decide similarity, produce a witness")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_similar)

    p = sub.add_parser("rep", parents=[common], help="print a representation matrix")
    p.add_argument("a")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.set_defaults(func=_cmd_rep)

    p = sub.add_parser("eig", parents=[common], help="closed-form eigenvalues")
    p.add_argument("a")
    p.set_defaults(func=_cmd_eig)

    p = sub.add_parser("det", parents=[common], help="determinant of the left matrix")
    p.add_argument("a")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("verify", parents=[common], help="run the randomized cross-check suites")
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)
    return parser


_FLAGS = {"-h", "--help", "--json", "--tol", "--seed", "--strict", "--side",
          "--a", "--b", "--d", "--trials"}


def _escape_negatives(argv: list[str]) -> list[str]:
    # Literals like "-e7" would otherwise be eaten as options; a leading
    # space keeps argparse happy and is stripped by the literal parser.
    out = []
    for token in argv:
        if token != "--" and token.startswith("-") and token.split("=", 1)[0] not in _FLAGS:
            out.append(" " + token)
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_escape_negatives(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except SingularElement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
