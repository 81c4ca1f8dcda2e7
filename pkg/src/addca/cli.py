"""Command-line front end for rule analysis and simulation.

Rule specifications are JSON documents::

    {"kind": "linear", "m": 2, "n": 1, "radius": 1,
     "matrices": [[[1]], [[0]], [[1]]],
     "initial": {"0": [1]}}

    {"kind": "additive", "group": [4, 2], "radius": 0,
     "matrices": [[[1, 2], [1, 1]]]}

``matrices`` lists one integer matrix per offset, ordered z = -r .. r.  The
optional ``initial`` object maps cell positions (JSON keys, so strings) to
cell vectors and is only needed by ``simulate``.

Verbs: ``analyze`` (property report), ``simulate`` (space-time grid),
``charpoly`` (characteristic polynomial with per-prime integrality verdicts)
and ``orbit`` (power-set shape under a step budget).  Exit codes: 0 success,
2 malformed specification, 3 budget exhausted where an exact answer exists.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .additive_ca import (
    AdditiveCaRule,
    AbelianGroup,
    GroupEndomorphism,
    MalformedEndomorphismError,
    decide_properties,
    simulate_additive,
)
from .lca import (
    FiniteConfiguration,
    LcaRule,
    analyze_rule,
    associated_matrix,
    render_trajectory,
    simulate,
)
from .modring import InvalidModulusError, factorize
from .polymat import char_poly
from .power_semigroup import decide_finite_powers, detect_orbit, sampled_degree_growth


class SpecError(ValueError):
    """A rule specification is malformed; the message names the bad field."""


@dataclass
class SpecDocument:
    kind: str
    rule: LcaRule | AdditiveCaRule
    initial: FiniteConfiguration | None


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise SpecError(message)


def _int_field(data: dict, name: str) -> int:
    _expect(name in data, f"missing required field \"{name}\"")
    value = data[name]
    _expect(isinstance(value, int) and not isinstance(value, bool),
            f"field \"{name}\" must be an integer, got {value!r}")
    return value


def _matrix_list(data: dict, radius: int) -> list:
    _expect("matrices" in data, "missing required field \"matrices\"")
    matrices = data["matrices"]
    expected = 2 * radius + 1
    _expect(isinstance(matrices, list) and len(matrices) == expected,
            f"field \"matrices\" must list {expected} matrices (offsets -r..r)")
    return matrices


def _int_matrix(raw, rank: int, where: str) -> tuple:
    _expect(isinstance(raw, list) and len(raw) == rank, f"{where} must be a {rank}x{rank} matrix")
    rows = []
    for i, row in enumerate(raw):
        _expect(isinstance(row, list) and len(row) == rank,
                f"{where} must be a {rank}x{rank} matrix (row {i} is not)")
        for j, entry in enumerate(row):
            _expect(isinstance(entry, int) and not isinstance(entry, bool),
                    f"{where} entry ({i},{j}) must be an integer, got {entry!r}")
        rows.append(tuple(row))
    return tuple(rows)


def _initial_config(data: dict, orders: tuple[int, ...]) -> FiniteConfiguration | None:
    if "initial" not in data:
        return None
    raw = data["initial"]
    _expect(isinstance(raw, dict), "field \"initial\" must map positions to cell vectors")
    cells = {}
    for key, vector in raw.items():
        try:
            position = int(key)
        except ValueError:
            raise SpecError(f"initial position {key!r} is not an integer") from None
        _expect(isinstance(vector, list) and len(vector) == len(orders),
                f"initial cell at {key} must be a vector of {len(orders)} integers")
        _expect(all(isinstance(v, int) and not isinstance(v, bool) for v in vector),
                f"initial cell at {key} must contain integers only")
        cells[position] = tuple(vector)
    return FiniteConfiguration(orders, cells)


def parse_spec(data: dict) -> SpecDocument:
    _expect(isinstance(data, dict), "specification must be a JSON object")
    kind = data.get("kind")
    _expect(kind in ("linear", "additive"),
            f"field \"kind\" must be \"linear\" or \"additive\", got {kind!r}")

    if kind == "linear":
        m = _int_field(data, "m")
        try:
            modulus = factorize(m)
        except InvalidModulusError as err:
            raise SpecError(f"field \"m\": {err}") from None
        n = _int_field(data, "n")
        _expect(n >= 1, f"field \"n\" must be >= 1, got {n}")
        radius = _int_field(data, "radius")
        _expect(radius >= 0, f"field \"radius\" must be >= 0, got {radius}")
        raw_matrices = _matrix_list(data, radius)
        matrices = tuple(_int_matrix(raw, n, f"matrices[{idx}] (offset {idx - radius})")
                         for idx, raw in enumerate(raw_matrices))
        rule: LcaRule | AdditiveCaRule = LcaRule(modulus, n, radius, matrices)
        orders = (m,) * n
    else:
        raw_group = data.get("group")
        _expect(isinstance(raw_group, list) and raw_group
                and all(isinstance(q, int) and not isinstance(q, bool) for q in raw_group),
                "field \"group\" must be a non-empty list of prime-power integers")
        try:
            group = AbelianGroup(tuple(raw_group))
        except ValueError as err:
            raise SpecError(f"field \"group\": {err}") from None
        if "n" in data:
            _expect(_int_field(data, "n") == group.rank,
                    f"field \"n\" disagrees with the group rank {group.rank}")
        radius = _int_field(data, "radius")
        _expect(radius >= 0, f"field \"radius\" must be >= 0, got {radius}")
        raw_matrices = _matrix_list(data, radius)
        endos = []
        for idx, raw in enumerate(raw_matrices):
            where = f"matrices[{idx}] (offset {idx - radius})"
            entries = _int_matrix(raw, group.rank, where)
            try:
                endos.append(GroupEndomorphism(group, entries))
            except MalformedEndomorphismError as err:
                raise SpecError(f"{where}: {err}") from None
        rule = AdditiveCaRule(group, radius, tuple(endos))
        orders = group.factors

    return SpecDocument(kind=kind, rule=rule, initial=_initial_config(data, orders))


def load_spec(path: str) -> SpecDocument:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as err:
        raise SpecError(f"cannot read {path}: {err}") from None
    except json.JSONDecodeError as err:
        raise SpecError(f"{path}:{err.lineno}:{err.colno}: {err.msg}") from None
    try:
        return parse_spec(data)
    except SpecError as err:
        raise SpecError(f"{path}: {err}") from None


def _describe(document: SpecDocument) -> str:
    rule = document.rule
    if document.kind == "linear":
        return f"linear over Z/{rule.modulus.m}, n={rule.n}, radius={rule.radius}"
    factors = " x ".join(f"Z/{q}" for q in rule.group.factors)
    return f"additive over {factors}, radius={rule.radius}"


def _emit_json(payload: dict, seed: int | None) -> None:
    if seed is not None:
        payload["seed"] = seed
    print(json.dumps(payload, indent=2))


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_analyze(document: SpecDocument, args: argparse.Namespace) -> int:
    if document.kind == "linear":
        report = analyze_rule(document.rule)
    else:
        report = decide_properties(document.rule)
    if args.format == "json":
        _emit_json({"kind": document.kind, "rule": _describe(document),
                    "report": report.to_dict()}, args.seed)
        return 0
    print(f"rule: {_describe(document)}")
    for name in ("sensitive", "equicontinuous", "injective", "surjective", "transitive"):
        print(f"{name}: {_yesno(getattr(report, name))}")
    if report.notes:
        print("notes:")
        for key, text in report.notes.items():
            print(f"  {key}: {text}")
    return 0


def cmd_simulate(document: SpecDocument, args: argparse.Namespace) -> int:
    if document.initial is None:
        raise SpecError("simulate needs an \"initial\" configuration in the spec")
    _expect(args.steps >= 0, "--steps must be >= 0")
    _expect(args.window >= 0, "--window must be >= 0")
    if document.kind == "linear":
        trajectory = simulate(document.rule, document.initial, args.steps)
    else:
        trajectory = simulate_additive(document.rule, document.initial, args.steps)
    grid = render_trajectory(trajectory, args.window)
    if args.format == "json":
        _emit_json({"kind": document.kind, "rule": _describe(document),
                    "window": args.window, "rows": grid.split("\n")}, args.seed)
        return 0
    print(grid)
    return 0


def cmd_charpoly(document: SpecDocument, args: argparse.Namespace) -> int:
    if document.kind != "linear":
        raise SpecError("charpoly needs a linear spec (additive rules: analyze instead)")
    matrix = associated_matrix(document.rule)
    poly = char_poly(matrix)
    verdict = decide_finite_powers(matrix)
    primes = document.rule.modulus.primes
    coefficients = []
    for index, coeff in enumerate(poly.coeffs):
        reductions = []
        for p in primes:
            reduced = coeff.reduce_mod_prime(p)
            reductions.append({"prime": p, "value": str(reduced),
                               "constant": reduced.is_constant()})
        coefficients.append({"index": index, "value": str(coeff), "reductions": reductions})
    if args.format == "json":
        _emit_json({"rule": _describe(document), "chi": str(poly),
                    "coefficients": coefficients,
                    "finite": verdict.finite, "reason": verdict.reason}, args.seed)
        return 0
    print(f"chi = {poly}")
    for entry in coefficients:
        print(f"a_{entry['index']} = {entry['value']}")
        for red in entry["reductions"]:
            flag = "constant" if red["constant"] else "NOT constant"
            print(f"  mod {red['prime']}: {red['value']} ({flag})")
    print(f"verdict: {'finite' if verdict.finite else 'infinite'} power set "
          f"({verdict.reason})")
    return 0


def cmd_orbit(document: SpecDocument, args: argparse.Namespace) -> int:
    if document.kind != "linear":
        raise SpecError("orbit needs a linear spec")
    _expect(args.budget >= 1, "--budget must be >= 1")
    matrix = associated_matrix(document.rule)
    verdict = decide_finite_powers(matrix)
    if verdict.finite:
        shape = detect_orbit(matrix, args.budget)
        if shape is not None:
            if args.format == "json":
                _emit_json({"rule": _describe(document), "finite": True,
                            "preperiod": shape.preperiod, "period": shape.period,
                            "size": shape.size, "budget": args.budget}, args.seed)
            else:
                print(f"preperiod {shape.preperiod}, period {shape.period}: "
                      f"power set has {shape.size} elements")
            return 0
        # An exact answer exists (the power set is finite) but the budget
        # ran out before the cycle closed.
        if args.format == "json":
            _emit_json({"rule": _describe(document), "finite": True,
                        "indeterminate": True, "budget": args.budget}, args.seed)
        else:
            print(f"indeterminate (budget {args.budget}); coefficient verdict: finite")
        return 3
    growth = sampled_degree_growth(matrix)
    if args.format == "json":
        _emit_json({"rule": _describe(document), "finite": False,
                    "indeterminate": True, "budget": args.budget,
                    "reason": verdict.reason, "degree_samples": growth}, args.seed)
    else:
        print(f"indeterminate (budget {args.budget}); coefficient verdict: infinite")
        print(f"  {verdict.reason}")
        print(f"  max entry degrees along doubled powers: {growth}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addca",
        description="Analyze and simulate linear and additive one-dimensional CA.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("spec", help="path to a JSON rule specification")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed to record in JSON reports")

    sub.add_parser("analyze", parents=[common],
                   help="decide sensitivity, injectivity, surjectivity, transitivity")

    p_sim = sub.add_parser("simulate", parents=[common],
                           help="print a space-time grid from the spec's initial configuration")
    p_sim.add_argument("--steps", type=int, default=8, help="number of updates (default: 8)")
    p_sim.add_argument("--window", type=int, default=10,
                       help="half-width of the printed window (default: 10)")

    sub.add_parser("charpoly", parents=[common],
                   help="characteristic polynomial with per-prime integrality verdicts")

    p_orb = sub.add_parser("orbit", parents=[common],
                           help="preperiod/period/size of the matrix power set")
    p_orb.add_argument("--budget", type=int, default=100_000,
                       help="max matrix multiplications before giving up (default: 100000)")
    return parser


_COMMANDS = {
    "analyze": cmd_analyze,
    "simulate": cmd_simulate,
    "charpoly": cmd_charpoly,
    "orbit": cmd_orbit,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        document = load_spec(args.spec)
        return _COMMANDS[args.command](document, args)
    except SpecError as err:
        print(f"spec error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
