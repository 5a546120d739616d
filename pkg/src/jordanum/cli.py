"""Command-line front end: field DSL parser and the ``jordanum`` commands."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import CycElt
from .constructions import witness_for_field
from .errors import CapExceeded, JordanumError, NoWitness, ParseError, SemanticError, ZeroInput
from .fields import (
    CC,
    QQ,
    RR,
    Abelian,
    FieldDescriptor,
    FunctionField,
    abelian,
    adjoin_sqrt,
    adjoin_zeta,
    constant_field,
    function_field,
)
from .groups import default_cap
from .laws import AmbientGroup, jordan, jordan_all
from .oracle import pgl3_cyclic_witness, property_vector

# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Sqrt:
    radicand: Fraction


@dataclass(frozen=True)
class Zeta:
    n: int


@dataclass(frozen=True)
class NamedConst:
    name: str  # "i" or "omega"


@dataclass(frozen=True)
class Indeterminate:
    pass


@dataclass(frozen=True)
class FieldExpr:
    base: str
    adjunctions: tuple = ()
    # set when the text was a canonical descriptor rather than DSL
    descriptor: FieldDescriptor | None = field(default=None, compare=False)


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos: int | None = None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def fail(self, message: str, expected=()):
        raise ParseError(message, self.offset(), expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek_word(self, word: str) -> bool:
        self.skip()
        return self.text.startswith(word, self.pos)

    def accept(self, word: str) -> bool:
        if self.peek_word(word):
            self.pos += len(word)
            return True
        return False

    def expect(self, word: str, expected=None):
        if not self.accept(word):
            found = self.text[self.pos:self.pos + 1] or "end of input"
            self.fail(f"unexpected {found!r}", expected or (word,))

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if digits in ("", "+", "-"):
            self.pos = start
            self.fail("expected an integer", ("integer",))
        return int(digits)

    def rational(self) -> Fraction:
        num = self.integer()
        if self.accept("/"):
            den_pos = self.pos
            den = self.integer()
            if den == 0:
                self.pos = den_pos
                self.fail("zero denominator", ("nonzero integer",))
            return Fraction(num, den)
        return Fraction(num)

    # field := base | base "(" gen ("," gen)* ")" | canonical forms
    def field(self) -> FieldExpr:
        self.skip()
        if self.peek_word("Abelian") or self.peek_word("FunctionField"):
            return FieldExpr("canonical", (), self.canonical())
        for base in ("QQ", "RR", "CC"):
            if self.accept(base):
                break
        else:
            self.fail("expected a field", ("QQ", "RR", "CC", "Abelian(", "FunctionField("))
        gens = []
        if self.accept("("):
            gens.append(self.gen())
            while self.accept(","):
                gens.append(self.gen())
            self.expect(")", (",", ")"))
        return FieldExpr(base, tuple(gens))

    def gen(self):
        if self.accept("sqrt"):
            self.expect("(")
            r = self.rational()
            self.expect(")")
            return Sqrt(r)
        if self.accept("zeta"):
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return Zeta(n)
        if self.accept("omega"):
            return NamedConst("omega")
        if self.accept("i"):
            return NamedConst("i")
        if self.accept("t"):
            return Indeterminate()
        self.fail("expected a generator", ("sqrt(", "zeta(", "i", "omega", "t"))

    def canonical(self) -> FieldDescriptor:
        if self.accept("Abelian"):
            self.expect("(")
            self.expect("m")
            self.expect("=")
            m = self.integer()
            self.expect(";")
            self.expect("H")
            self.expect("=")
            H = [self.integer()]
            while self.accept(","):
                H.append(self.integer())
            self.expect(")")
            if m < 1:
                raise SemanticError("conductor must be positive")
            return abelian(m, H)
        if self.accept("FunctionField"):
            self.expect("(")
            self.expect("base")
            self.expect("=")
            base = self.base_descriptor()
            self.expect(";")
            self.expect("vars")
            self.expect("=")
            v = self.integer()
            self.expect(")")
            if v < 1:
                raise SemanticError("vars must be >= 1")
            return function_field(base, v)
        self.fail("expected a canonical field", ("Abelian(", "FunctionField("))

    def base_descriptor(self) -> FieldDescriptor:
        for word, value in (("QQ", QQ), ("RR", RR), ("CC", CC)):
            if self.accept(word):
                return value
        return self.canonical()


def parse_field(text: str) -> FieldExpr:
    """Parse the field DSL (or a canonical descriptor string) into an AST."""
    p = _Parser(text)
    expr = p.field()
    if not p.at_end():
        p.fail("trailing input", ("end of input",))
    return expr


def build_field(expr: FieldExpr) -> FieldDescriptor:
    if expr.descriptor is not None:
        return expr.descriptor
    base = {"QQ": QQ, "RR": RR, "CC": CC}[expr.base]
    vars_ = 0
    K: FieldDescriptor = base
    for g in expr.adjunctions:
        if isinstance(g, Indeterminate):
            if vars_:
                raise SemanticError("at most one indeterminate t")
            vars_ = 1
            continue
        if expr.base != "QQ":
            raise SemanticError(f"{expr.base} admits no algebraic adjunctions")
        if isinstance(g, Sqrt):
            if g.radicand == 0:
                raise SemanticError("sqrt(0) is not a valid adjunction")
            K = adjoin_sqrt(K, g.radicand)
        elif isinstance(g, Zeta):
            if g.n < 1:
                raise SemanticError("zeta(n) needs n >= 1")
            K = adjoin_zeta(K, g.n)
        else:
            K = adjoin_zeta(K, 4 if g.name == "i" else 3)
    return function_field(K, vars_) if vars_ else K


def field_from_text(text: str) -> FieldDescriptor:
    try:
        return build_field(parse_field(text))
    except ZeroInput as exc:
        raise SemanticError(str(exc)) from exc


# ---------------------------------------------------------------------------
# reports


def descriptor_json(K: FieldDescriptor) -> dict:
    C = constant_field(K)
    out: dict = {}
    if isinstance(C, Abelian):
        out["m"] = C.m
        out["H"] = list(C.H)
    else:
        out["m"] = None
        out["H"] = []
        out["kind"] = str(C)
    if isinstance(K, FunctionField):
        out["vars"] = K.vars
    return out


def _groups(choice: str) -> list[AmbientGroup]:
    if choice == "all":
        return list(AmbientGroup)
    return [AmbientGroup.parse(choice)]


def base_report(K: FieldDescriptor) -> dict:
    p = property_vector(K)
    return {
        "field": str(K),
        "descriptor": descriptor_json(K),
        "properties": p.as_dict(),
        "jordan": {
            g.value: {"value": a.value, "branch": a.branch}
            for g, a in jordan_all(p).items()
        },
    }


def _family(K, g: AmbientGroup) -> str:
    return jordan(property_vector(K), g).name


def _verify_one(K: FieldDescriptor, g: AmbientGroup, cap: int) -> dict:
    value = jordan(property_vector(K), g).value
    try:
        recipe = witness_for_field(K, g)
    except NoWitness as exc:
        return {"witness": None, "closure_order": None, "bruteforce_jordan": None,
                "expected": value, "matched": False, "reason": str(exc)}
    rec = recipe.verify(cap=cap, expected=value)
    out = {"witness": recipe.name, "expected": value}
    out.update(rec.as_dict())
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_props(args) -> int:
    K = field_from_text(args.field)
    rep = base_report(K)
    if args.json:
        _emit_json({k: rep[k] for k in ("field", "descriptor", "properties")})
    else:
        print(f"field: {rep['field']}")
        for k, v in rep["properties"].items():
            print(f"{k}: {str(v).lower()}")
    return 0


def cmd_jordan(args) -> int:
    K = field_from_text(args.field)
    rep = base_report(K)
    groups = _groups(args.group)
    if args.json:
        rep["jordan"] = {g.value: rep["jordan"][g.value] for g in groups}
        _emit_json(rep)
    else:
        for g in groups:
            j = rep["jordan"][g.value]
            print(f"{g.name}: {j['value']}  [{j['branch']}] {_family(K, g)}")
    return 0


def cmd_witness(args) -> int:
    K = field_from_text(args.field)
    g = AmbientGroup.parse(args.group)
    recipe = witness_for_field(K, g)
    data = recipe.to_json()
    if args.json:
        rep = base_report(K)
        rep["witness"] = {"level": data["level"], "generators": data["generators"],
                          "name": data["name"], "projective": data["projective"]}
        _emit_json(rep)
    else:
        print(json.dumps(data))
    return 0


def cmd_verify(args) -> int:
    K = field_from_text(args.field)
    cap = args.cap if args.cap is not None else default_cap()
    groups = _groups(args.group)
    results = {g.value: _verify_one(K, g, cap) for g in groups}
    ok = all(r["matched"] for r in results.values())
    if args.json:
        rep = base_report(K)
        rep["verification"] = results
        _emit_json(rep)
    else:
        for g in groups:
            r = results[g.value]
            if r["witness"] is None:
                print(f"{g.name}: expected {r['expected']}, no witness: {r['reason']}")
                continue
            status = "matched" if r["matched"] else "MISMATCH"
            print(f"{g.name}: witness {r['witness']}, closure order {r['closure_order']}, "
                  f"bruteforce J {r['bruteforce_jordan']}, expected {r['expected']}: {status}")
    return 0 if ok else 2


def cmd_order_n(args) -> int:
    K = field_from_text(args.field)
    w = pgl3_cyclic_witness(K, args.n)
    if args.json:
        out = {"field": str(K), "n": args.n, "exists": w is not None}
        if w is not None:
            out.update({"t": w.t, "i": w.i, "j": w.j,
                        "lambda": _cyc_json(w.lam), "eta": _cyc_json(w.eta)})
        _emit_json(out)
    elif w is None:
        print("false")
    else:
        print(f"true  t={w.t} i={w.i} j={w.j}  lambda = {w.lam}  eta = {w.eta}")
    return 0


def cmd_table(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    status = 0
    for line in lines:
        try:
            K = field_from_text(line)
            rep = base_report(K)
        except JordanumError as exc:
            status = 1
            if args.json:
                print(json.dumps({"input": line, "error": str(exc)}))
            else:
                print(f"{line}\terror: {exc}")
            continue
        if args.json:
            print(json.dumps(rep, sort_keys=True))
        else:
            vals = "  ".join(f"{g.name}={rep['jordan'][g.value]['value']}" for g in AmbientGroup)
            print(f"{rep['field']}\t{vals}")
    return status


def _cyc_json(x: CycElt) -> dict:
    return {"level": x.level, "coeffs": [[c.numerator, c.denominator] for c in x.coeffs]}


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="jordanum",
        description="Jordan constants of GL2, SL2, PGL2 and PGL3 over characteristic-0 fields.",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    group_help = "gl2, sl2, pgl2, pgl3 or all"

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("props", cmd_props, "field predicates")
    p.add_argument("field")
    p = add("jordan", cmd_jordan, "Jordan constants with clause citations")
    p.add_argument("field")
    p.add_argument("--group", default="all", help=group_help)
    p = add("witness", cmd_witness, "serialized witness generators")
    p.add_argument("field")
    p.add_argument("--group", required=True, help=group_help.replace(" or all", ""))
    p = add("verify", cmd_verify, "close the witness and brute-force its Jordan constant")
    p.add_argument("field")
    p.add_argument("--group", default="all", help=group_help)
    p.add_argument("--cap", type=int, default=None, help="closure size cap (default $JORDANUM_CAP or 4096)")
    p = add("order-n", cmd_order_n, "cyclic subgroup of odd prime order n in PGL3")
    p.add_argument("field")
    p.add_argument("--n", type=int, required=True)
    p = add("table", cmd_table, "one report per field listed in a file")
    p.add_argument("--file", required=True)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (JordanumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:  # pragma: no cover - subclass of JordanumError
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
