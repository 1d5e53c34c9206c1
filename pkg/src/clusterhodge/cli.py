"""Command-line front end.

Every subcommand reads one quiver in the JSON format
``{"n": int, "m": int, "matrix": [[...], ...], "labels": [...]}`` from a
file or stdin.  Exit status is 0 on success, 1 for bad input and 2 when the
variety falls in a case whose answer is not known (or does not exist).
"""

from __future__ import annotations

import argparse
import json
import sys

from .exceptions import ClusterHodgeError, NotLouiseError, UnsupportedCaseError
from .hodge import Case, Variant, classify, table_for
from .logforms import basis_for
from .pointcount import PrimeField, count_variety, verify_table
from .quiver import Seed, finite_type_check

EXIT_OK, EXIT_INPUT, EXIT_OPEN = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read_seed(path: str) -> Seed:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return Seed.from_json(text)


def _supported(seed: Seed):
    cls = classify(seed)
    if not cls.supported:
        raise UnsupportedCaseError(f"{cls.case}: {cls.reason}")
    return cls


def cmd_classify(seed, args):
    cls = classify(seed)
    if args.format == "json":
        return _dump(cls.to_json())
    if args.format == "csv":
        return "case,params\n" + f"{cls.case},{' '.join(map(str, cls.params))}"
    lines = [f"{cls.case} {tuple(cls.params)}"]
    if cls.roles and cls.case is not Case.TORUS:
        lines.append("roles: " + ", ".join(f"{r}={lab}" for r, lab in zip("xyz", cls.roles)))
    if cls.reason:
        lines.append(f"note: {cls.reason}")
    return "\n".join(lines)


def cmd_table(seed, args):
    cls = _supported(seed)
    t = table_for(cls, Variant.INTERSECTION_COHOMOLOGY if args.ih else Variant.COHOMOLOGY)
    if args.format == "json":
        return t.dumps()
    if args.format == "csv":
        return t.to_csv()
    return t.ascii()


def cmd_basis(seed, args):
    cls = _supported(seed)
    if cls.case is Case.THREE_MUTABLE_ACYCLIC:
        t = table_for(cls)
        note = "no explicit forms for this case; dimensions only"
        if args.format == "json":
            return _dump({"case": cls.case.value, "note": note,
                          "dimensions": [{"k": k, "p": p, "h": h} for (k, p), h in sorted(t.entries().items())]})
        return note + "\n" + t.ascii()
    basis = basis_for(cls, args.variant)
    items = sorted(basis.items())
    if args.format == "json":
        return _dump({"case": cls.case.value,
                      "basis": [{"k": k, "p": p, "forms": [f.to_json() for f in fs]} for (k, p), fs in items]})
    if args.format == "csv":
        return "k,p,form\n" + "\n".join(f"{k},{p},{f}" for (k, p), fs in items for f in fs)
    return "\n".join(
        f"H^{{{k},({p},{p})}}: " + (", ".join(str(f) for f in fs) if fs else "0")
        for (k, p), fs in items
    )


def cmd_count(seed, args):
    field = PrimeField(args.prime)
    n = count_variety(seed, field)
    if args.format == "json":
        return _dump({"prime": field.p, "count": n})
    if args.format == "csv":
        return f"prime,count\n{field.p},{n}"
    return f"#A(F_{field.p}) = {n}"


def cmd_verify(seed, args):
    primes = held = None
    if args.primes:
        primes = [int(p) for p in args.primes.split(",")]
        held = args.held_out
        if held is None:
            primes, held = primes[:-1], primes[-1]
    report = verify_table(seed, primes, held)
    if args.format == "json":
        return _dump(report.to_json())
    if args.format == "csv":
        return "case,verdict\n" + f"{report.case},{report.verdict}"
    return str(report)


def cmd_finite_type(seed, args):
    result = finite_type_check(seed)
    if args.format == "json":
        return _dump({"verdict": result.verdict.value, "mutations": list(result.mutations)})
    if args.format == "csv":
        return f"verdict\n{result.verdict.value}"
    return result.verdict.value


COMMANDS = {
    "classify": cmd_classify,
    "table": cmd_table,
    "basis": cmd_basis,
    "count": cmd_count,
    "verify": cmd_verify,
    "finite-type": cmd_finite_type,
}


class _Parser(argparse.ArgumentParser):
    # usage errors are bad input; exit 2 stays reserved for open cases
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="quiver JSON file (default: stdin)")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")

    parser = _Parser(
        prog="clusterhodge",
        description="Mixed Hodge numbers and point counts of small cluster varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("classify", parents=[common], help="identify the case of the variety")
    p = sub.add_parser("table", parents=[common], help="mixed Hodge numbers")
    p.add_argument("--ih", action="store_true", help="intersection cohomology instead")
    p = sub.add_parser("basis", parents=[common], help="log-form basis of the Deligne splitting")
    p.add_argument("--variant", choices=["statement", "eq21"], default="statement")
    p = sub.add_parser("count", parents=[common], help="number of points over F_p")
    p.add_argument("--prime", type=int, required=True)
    p = sub.add_parser("verify", parents=[common], help="check the table against point counts")
    p.add_argument("--primes", help="comma-separated primes; the last is held out unless --held-out")
    p.add_argument("--held-out", type=int)
    sub.add_parser("finite-type", parents=[common], help="finite type test for 3-vertex quivers")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        seed = _read_seed(args.input)
        out = COMMANDS[args.command](seed, args)
    except (UnsupportedCaseError, NotLouiseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OPEN
    except (ClusterHodgeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
