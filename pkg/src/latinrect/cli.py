"""Command-line interface: ``latinrect <command> [options]``.

Every command reads squares in the square file format (``-`` for stdin) and
prints either a human-readable summary in the notation ⟨x,y,z,u⟩ / (12.34.)
or, with ``--json``, a deterministic JSON report.

Exit codes: 0 ok, 1 internal error, 2 input error, 3 search bound exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from importlib.resources import files
from typing import Any, Sequence

from .core import (boolean_group, check_group, cyclic_group, distance, format_cycles,
                   format_square, involutions, klein_group, parastrophe, parse_square)
from .core.square import LatinSquare
from .errors import LatinRectError, SearchBoundError
from .rectangles import (Rectangle, canonicalize, find_rectangles, find_rectangles_oracle,
                         translation_product, two_cycles)
from .symmetry import (DEFAULT_BOUND, IsotopyTriple, are_antiisotopic, are_isotopic,
                       autotopisms, equivalence_classes)
from .transform import rectangle_transform

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3

FIXTURES = ("example1", "example2", "example4")


def load_fixture(name: str) -> LatinSquare:
    """A square shipped in ``latinrect/data`` (e.g. ``"example1"``)."""
    return parse_square((files("latinrect") / "data" / f"{name}.sq").read_text())


def read_square(path: str) -> LatinSquare:
    if path == "-":
        return parse_square(sys.stdin.read())
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return parse_square(fh.read())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


class InputError(LatinRectError):
    pass


def digest(s: LatinSquare) -> dict[str, Any]:
    return {"order": s.n, "sha256": hashlib.sha256(format_square(s).encode()).hexdigest()}


def rect_json(r: Rectangle) -> list[int]:
    return r.as_list()


def perm_json(p) -> dict[str, Any]:
    return {"images": list(p.images), "cycles": format_cycles(p)}


def triple_json(t: IsotopyTriple) -> dict[str, Any]:
    return {"alpha": perm_json(t.alpha), "beta": perm_json(t.beta), "gamma": perm_json(t.gamma)}


class Report:
    """Collects the structured result of one command and the human-readable lines."""

    def __init__(self, command: str, inputs: Sequence[LatinSquare] = ()):
        self.command = command
        self.inputs = [digest(s) for s in inputs]
        self.payload: dict[str, Any] = {}
        self.lines: list[str] = []
        self.square: LatinSquare | None = None

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def to_dict(self, status: str = "ok", message: str | None = None) -> dict[str, Any]:
        d: dict[str, Any] = {"command": self.command, "input": self.inputs,
                             "payload": self.payload, "status": status}
        if message is not None:
            d["message"] = message
        return d


def dump_json(d: dict[str, Any]) -> str:
    return json.dumps(d, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_square(rep: Report, s: LatinSquare) -> None:
    """Attach a result square; main() routes it to -o, the JSON payload or stdout."""
    rep.square = s
    rep.payload["square"] = [list(r) for r in s.rows]


# -- commands ---------------------------------------------------------------

def cmd_rects(args) -> Report:
    s = read_square(args.file)
    rep = Report("rects", [s])
    rects = find_rectangles(s)
    rep.payload["count"] = len(rects)
    rep.payload["rectangles"] = [rect_json(r) for r in rects]
    rep.say(f"order {s.n}: {len(rects)} rectangle{'s' if len(rects) != 1 else ''}")
    if args.cycles:
        products = []
        for x in range(1, s.n + 1):
            for z in range(x + 1, s.n + 1):
                p = translation_product(s, x, z)
                cyc = two_cycles(p)
                if cyc:
                    products.append({"x": x, "z": z, "product": format_cycles(p),
                                     "two_cycles": [list(c) for c in cyc]})
                    pairs = ", ".join(f"({a},{b})" for a, b in cyc)
                    rep.say(f"L{x}L{z}^-1 = {format_cycles(p)}   2-cycles: {pairs}")
        rep.payload["products"] = products
    for r in rects:
        rep.say(f"({r.a},{r.b}): {r}")
    if args.oracle:
        agree = set(find_rectangles_oracle(s)) == set(rects)
        rep.payload["oracle_agrees"] = agree
        rep.say(f"brute-force oracle: {'agrees' if agree else 'DISAGREES'}")
    return rep


def cmd_transform(args) -> Report:
    s = read_square(args.file)
    rep = Report("transform", [s])
    r = canonicalize(s, *args.rect)
    out = rectangle_transform(s, r)
    rep.payload["rectangle"] = rect_json(r)
    rep.payload["distance"] = distance(s, out)
    rep.payload["switched"] = [r.x, r.u, r.z, r.y]
    emit_square(rep, out)
    rep.say(f"# transform by {r} (a={r.a}, b={r.b}); distance {rep.payload['distance']}")
    return rep


def cmd_autotopisms(args) -> Report:
    s = read_square(args.file)
    rep = Report("autotopisms", [s])
    autos = autotopisms(s, args.bound)
    rep.payload["group_order"] = len(autos)
    rep.payload["autotopisms"] = [triple_json(t) for t in autos]
    rep.say(f"order {s.n}: autotopism group of order {len(autos)}")
    for t in autos:
        rep.say(f"alpha={format_cycles(t.alpha)} beta={format_cycles(t.beta)} "
                f"gamma={format_cycles(t.gamma)}")
    return rep


def cmd_classes(args) -> Report:
    s = read_square(args.file)
    rep = Report("classes", [s])
    autos = autotopisms(s, args.bound)
    classes = equivalence_classes(s, autos=autos)
    rep.payload["group_order"] = len(autos)
    rep.payload["count"] = len(classes)
    rep.payload["classes"] = [[rect_json(r) for r in c] for c in classes]
    rep.say(f"{sum(map(len, classes))} rectangles in {len(classes)} classes "
            f"(autotopism group of order {len(autos)})")
    for i, c in enumerate(classes, 1):
        rep.say(f"{i}: " + " ".join(str(r) for r in c))
    return rep


def cmd_isotopic(args) -> Report:
    a, b = read_square(args.file_a), read_square(args.file_b)
    rep = Report("isotopic", [a, b])
    test = are_antiisotopic if args.anti else are_isotopic
    res = test(a, b, bound=args.bound, fast_reject=not args.no_fast_reject)
    rel = "antiisotopic" if args.anti else "isotopic"
    rep.payload.update({"relation": rel, "verdict": res.isotopic, "fast_reject": res.fast_reject,
                        "witness": triple_json(res.witness) if res.witness else None})
    if res.isotopic:
        w = res.witness
        rep.say(f"{rel}: alpha={format_cycles(w.alpha)} beta={format_cycles(w.beta)} "
                f"gamma={format_cycles(w.gamma)}")
    else:
        how = "rectangle invariants differ" if res.fast_reject else "exhaustive search"
        rep.say(f"not {rel} ({how})")
    return rep


def cmd_parastrophe(args) -> Report:
    s = read_square(args.file)
    rep = Report("parastrophe", [s])
    rep.payload["k"] = args.k
    emit_square(rep, parastrophe(s, args.k))
    return rep


def cmd_distance(args) -> Report:
    a, b = read_square(args.file_a), read_square(args.file_b)
    rep = Report("distance", [a, b])
    d = distance(a, b)
    rep.payload["distance"] = d
    rep.say(str(d))
    return rep


def cmd_gen(args) -> Report:
    rep = Report("gen")
    kind = args.kind
    if kind in FIXTURES:
        s = load_fixture(kind)
    elif kind == "klein":
        s = klein_group()
    elif args.size is None:
        raise InputError(f"gen {kind} needs a size")
    elif kind == "cyclic":
        s = cyclic_group(args.size)
    else:
        s = boolean_group(args.size)
    rep.payload["kind"] = kind
    emit_square(rep, s)
    return rep


def cmd_groupcheck(args) -> Report:
    s = read_square(args.file)
    rep = Report("groupcheck", [s])
    chk = check_group(s)
    rep.payload["group"] = chk.is_group
    rep.payload["identity"] = chk.identity
    n_rects = len(find_rectangles(s))
    rep.payload["rectangles"] = n_rects
    if chk.is_group:
        inv = sorted(involutions(s))
        rep.payload["involutions"] = inv
        rep.payload["has_rectangle"] = bool(inv)
        rep.payload["criterion_holds"] = bool(inv) == (n_rects > 0)
        rep.say(f"group: yes, identity {chk.identity}")
        rep.say(f"involutions: {{{', '.join(map(str, inv))}}}")
        rep.say(f"has rectangle: {'yes' if inv else 'no'} ({n_rects} found by search)")
    else:
        rep.payload["reason"] = chk.reason
        rep.payload["witness"] = list(chk.witness) if chk.witness else None
        extra = f", e.g. (x,y,z) = {chk.witness}" if chk.witness else ""
        rep.say(f"group: no ({chk.reason}{extra})")
    return rep


# -- argument parsing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", help="write the resulting square to this file")
    bound = argparse.ArgumentParser(add_help=False)
    bound.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                       help=f"largest order for exhaustive searches (default {DEFAULT_BOUND})")

    p = argparse.ArgumentParser(prog="latinrect",
                                description="Rectangles, autotopisms and isotopy of latin squares.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("rects", parents=[common], help="list all rectangles")
    c.add_argument("file")
    c.add_argument("--oracle", action="store_true", help="cross-check with a brute-force scan")
    c.add_argument("--cycles", action="store_true", help="show the products L_x L_z^-1")
    c.set_defaults(func=cmd_rects)

    c = sub.add_parser("transform", parents=[common, out], help="apply a rectangle transformation")
    c.add_argument("file")
    c.add_argument("rect", type=int, nargs=4, metavar=("X", "Y", "Z", "U"))
    c.set_defaults(func=cmd_transform)

    c = sub.add_parser("autotopisms", parents=[common, bound], help="enumerate autotopisms")
    c.add_argument("file")
    c.set_defaults(func=cmd_autotopisms)

    c = sub.add_parser("classes", parents=[common, bound],
                       help="rectangle classes under the autotopism group")
    c.add_argument("file")
    c.set_defaults(func=cmd_classes)

    c = sub.add_parser("isotopic", parents=[common, bound], help="decide isotopy of two squares")
    c.add_argument("file_a")
    c.add_argument("file_b")
    c.add_argument("--anti", action="store_true", help="test antiisotopy (against the transpose)")
    c.add_argument("--no-fast-reject", action="store_true",
                   help="always run the full search")
    c.set_defaults(func=cmd_isotopic)

    c = sub.add_parser("parastrophe", parents=[common, out], help="k-th parastrophe (0..5)")
    c.add_argument("file")
    c.add_argument("k", type=int, choices=range(6))
    c.set_defaults(func=cmd_parastrophe)

    c = sub.add_parser("distance", parents=[common], help="number of differing cells")
    c.add_argument("file_a")
    c.add_argument("file_b")
    c.set_defaults(func=cmd_distance)

    c = sub.add_parser("gen", parents=[common, out], help="generate a fixture square")
    c.add_argument("kind", choices=("cyclic", "boolean", "klein") + FIXTURES)
    c.add_argument("size", type=int, nargs="?",
                   help="order for cyclic, exponent k (order 2^k) for boolean")
    c.set_defaults(func=cmd_gen)

    c = sub.add_parser("groupcheck", parents=[common], help="group test and involutions")
    c.add_argument("file")
    c.set_defaults(func=cmd_groupcheck)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rep = args.func(args)
    except SearchBoundError as exc:
        return _fail(args, exc, EXIT_BOUND)
    except (LatinRectError, ValueError) as exc:
        return _fail(args, exc, EXIT_INPUT)
    except Exception as exc:  # noqa: BLE001
        return _fail(args, exc, EXIT_INTERNAL)

    output = getattr(args, "output", None)
    if rep.square is not None and output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(format_square(rep.square))
    if args.json:
        sys.stdout.write(dump_json(rep.to_dict()))
    elif rep.square is not None:
        # keep stdout a clean square file so commands can be piped
        if not output:
            sys.stdout.write(format_square(rep.square))
        for line in rep.lines:
            print(line, file=sys.stderr)
    else:
        sys.stdout.write("".join(line + "\n" for line in rep.lines))
    return EXIT_OK


def _fail(args, exc: Exception, code: int) -> int:
    message = f"{type(exc).__name__}: {exc}" if code == EXIT_INTERNAL else str(exc)
    if getattr(args, "json", False):
        rep = Report(args.command)
        sys.stdout.write(dump_json(rep.to_dict(status="error", message=message)))
    print(f"latinrect {args.command}: error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
