"""Command-line entry point: ``barett-rsk <command> ...`` with JSON in and out.

Exit codes: 0 success, 1 malformed input, 2 domain precondition violated.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import jsonschema

from . import probability, qseries, rsk, schur
from .tableaux import Partition, Tabloid, complement, conjugate, is_young_tableau

COMMANDS = ("prob", "identity", "rsk", "schur", "count", "enumerate")
METHODS = ("barett", "bezout", "schur", "mc")
DEFAULT_SAMPLES = 1_000_000


class ConfigError(ValueError):
    """Input that does not match the job schema."""


_NUMBER = {
    "oneOf": [
        {"type": "number"},
        {"type": "string", "pattern": r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?(/\d+)?$"},
    ]
}
_POS_INT = {"type": "integer", "minimum": 1}

PAYLOAD_SCHEMAS: dict[str, dict] = {
    "prob": {
        "type": "object",
        "properties": {
            "chi": {"type": "array", "items": _NUMBER, "minItems": 1},
            "delta": {"type": "array", "items": _NUMBER, "minItems": 1},
        },
        "required": ["chi", "delta"],
        "additionalProperties": False,
    },
    "identity": {
        "type": "object",
        "properties": {
            "n": _POS_INT,
            "t": _NUMBER,
            "which": {
                "type": "array",
                "items": {"enum": ["qnewton", "lemma", "euler", "alpha"]},
                "uniqueItems": True,
            },
        },
        "required": ["n"],
        "additionalProperties": False,
    },
    "rsk": {
        "type": "object",
        "properties": {
            "matrix": {
                "type": "array",
                "minItems": 1,
                "items": {"type": "array", "items": {"enum": [0, 1]}},
            }
        },
        "required": ["matrix"],
        "additionalProperties": False,
    },
    "schur": {
        "type": "object",
        "properties": {"n": _POS_INT},
        "required": ["n"],
        "additionalProperties": False,
    },
    "count": {
        "type": "object",
        "properties": {"n": _POS_INT},
        "required": ["n"],
        "additionalProperties": False,
    },
    "enumerate": {
        "type": "object",
        "properties": {
            "shape": {"type": "array", "items": _POS_INT},
            "n": _POS_INT,
            "list": {"type": "boolean"},
            "tableau": {"type": "array", "items": {"type": "array", "items": _POS_INT}},
        },
        "required": ["shape", "n"],
        "additionalProperties": False,
    },
}

JOB_SCHEMA = {
    "type": "object",
    "properties": {
        "command": {"enum": list(COMMANDS)},
        "payload": {"type": "object"},
        "backend": {"enum": list(probability.BACKENDS)},
        "method": {"enum": list(METHODS)},
        "samples": _POS_INT,
        "seed": {"type": "integer", "minimum": 0},
    },
    "required": ["command", "payload"],
    "additionalProperties": False,
}


@dataclass
class JobConfig:
    command: str
    payload: dict[str, Any] = field(default_factory=dict)
    backend: str | None = None
    method: str | None = None
    samples: int | None = None
    seed: int | None = None

    @classmethod
    def from_json(cls, doc: Any) -> JobConfig:
        _validate(doc, JOB_SCHEMA)
        return cls(**doc)

    def validate(self) -> None:
        doc = {k: v for k, v in vars(self).items() if v is not None}
        _validate(doc, JOB_SCHEMA)
        _validate(self.payload, PAYLOAD_SCHEMAS[self.command])
        if self.command != "prob" and any(v is not None for v in (self.backend, self.method, self.samples, self.seed)):
            raise ConfigError(f"backend/method/samples/seed only apply to 'prob', not {self.command!r}")


def _validate(doc: Any, schema: dict) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"{where}: {exc.message}") from None


def fmt(x) -> str:
    """Exact values as ``p/q`` strings, floats with 15 significant digits."""
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    return f"{x:.15g}"


def _poly_json(p) -> list[int]:
    return [int(c) for c in p.coeffs]


# --- command handlers -------------------------------------------------------


def _prob(job: JobConfig) -> dict:
    method = job.method or "bezout"
    backend = job.backend or "exact"
    p = probability.VarianceProfile.parse(job.payload["chi"], job.payload["delta"], backend)
    out: dict[str, Any] = {"method": method, "backend": backend}
    if method == "barett":
        out["value"] = fmt(probability.barett_direct(p))
    elif method == "bezout":
        sol = probability.solve_bezout(p)
        out["value"] = fmt(sol.value)
        out["residual"] = fmt(sol.residual)
    elif method == "schur":
        f = schur.F_schur(p.n)
        denom = 1
        for c in p.chi:
            for d in p.delta:
                denom = denom * (c + d)
        out["value"] = fmt(f(p.chi, p.delta) / denom)
    else:
        res = probability.monte_carlo(p, job.samples or DEFAULT_SAMPLES, job.seed or 0)
        out["backend"] = "float"
        out["value"] = fmt(res.estimate)
        out["std_error"] = fmt(res.std_error)
        out["samples"] = res.samples
        out["seed"] = res.seed
        out["generator"] = res.generator
    return out


def _identity(job: JobConfig) -> dict:
    n = job.payload["n"]
    which = job.payload.get("which", ["qnewton", "lemma", "euler", "alpha"])
    out: dict[str, Any] = {"n": n}
    ok = True
    if "qnewton" in which:
        lhs, rhs = qseries.q_newton_check(n)
        out["qnewton"] = {"lhs": _poly_json(lhs), "rhs": _poly_json(rhs), "pass": lhs == rhs}
        ok &= lhs == rhs
    if "lemma" in which:
        t = Fraction(job.payload.get("t", 2))
        value = qseries.lemma_lid_eval(n, t)
        out["lemma"] = {"t": fmt(t), "value": fmt(value), "pass": value == Fraction(1, 2)}
        ok &= value == Fraction(1, 2)
    if "euler" in which:
        cleared = qseries.euler_sum_check(n)
        out["euler"] = {
            "numerator": _poly_json(cleared.numerator),
            "denominator": _poly_json(cleared.denominator),
            "pass": cleared.holds,
        }
        ok &= cleared.holds
    if "alpha" in which:
        a = qseries.alpha(n)
        at_one = schur.t_substitution_count(n, 1)
        out["alpha"] = {"formula": a, "t_substitution_at_1": fmt(at_one), "pass": at_one == a}
        ok &= at_one == a
    out["pass"] = bool(ok)
    return out


def _tableau_json(t) -> list[list[int]]:
    return t.to_json()


def _rsk(job: JobConfig) -> dict:
    m = rsk.ZeroOneMatrix(tuple(tuple(row) for row in job.payload["matrix"]))
    word = rsk.matrix_to_word(m)
    t1, t2 = rsk.knuth_forward(m)
    square = rsk.phi(m)
    w1, w2 = rsk.words_w1_w2(m)
    a1, a2 = rsk.alternate_phi(m)
    return {
        "n": m.n,
        "matrix": m.to_json(),
        "word": [list(pair) for pair in word.pairs],
        "T1": _tableau_json(t1),
        "T2": _tableau_json(t2),
        "T2_complement": _tableau_json(square.chi_tableau),
        "shapes": {
            "T1": list(t1.shape),
            "T2": list(t2.shape),
            "T2_complement": list(square.chi_tableau.shape),
        },
        "square": {
            "delta_tableau": _tableau_json(square.delta_tableau),
            "chi_tableau": _tableau_json(square.chi_tableau),
            "grid": square.grid(),
            "s1": square.satisfies_s1(),
        },
        "w1": list(w1),
        "w2": list(w2),
        "alternate": {"T1": _tableau_json(a1), "T2": _tableau_json(a2)},
        "symmetry": (a1, a2) == (square.delta_tableau, square.chi_tableau),
        "round_trip": rsk.phi_inverse(square) == m,
    }


def _schur(job: JobConfig) -> dict:
    n = job.payload["n"]
    f = schur.F_schur(n)
    sym, binom = schur.two_value_symmetrization(n)
    return {
        "n": n,
        "multiset_size": f.multiset_size,
        "distinct_size": f.distinct_size,
        "alpha": qseries.alpha(n),
        "monomials": [
            {"delta": list(mono.delta), "chi": list(mono.chi), "coeff": c} for mono, c in f.sorted_terms()
        ],
        "two_value": {
            "coefficients": schur.specialize_two_values(n),
            "symmetrized": sym,
            "binomial": binom,
            "pass": sym == binom,
        },
    }


def _count(job: JobConfig) -> dict:
    return schur.alpha_census(job.payload["n"])


def _enumerate(job: JobConfig) -> dict:
    shape = Partition(tuple(job.payload["shape"]))
    n = job.payload["n"]
    tableaux = list(schur.enumerate_tableaux(shape, n))
    out: dict[str, Any] = {
        "shape": list(shape),
        "shape_increasing": list(shape.increasing()),
        "n": n,
        "conjugate": list(conjugate(shape)),
    }
    if shape.fits_square(n):
        comp = complement(shape, n)
        out["complement"] = list(comp)
        out["complement_increasing"] = list(comp.increasing())
    out["count"] = len(tableaux)
    if job.payload.get("list", True):
        out["tableaux"] = [_tableau_json(t) for t in tableaux]
    if "tableau" in job.payload:
        t = Tabloid(tuple(tuple(r) for r in job.payload["tableau"]))
        out["tableau"] = {
            "rows": _tableau_json(t),
            "shape": list(t.shape),
            "is_young_tableau": is_young_tableau(t),
            "content": list(t.content(max(n, t.max_entry()))),
            "member": t.shape == shape and t.max_entry() <= n and is_young_tableau(t),
        }
    return out


HANDLERS = {
    "prob": _prob,
    "identity": _identity,
    "rsk": _rsk,
    "schur": _schur,
    "count": _count,
    "enumerate": _enumerate,
}


def run(job: JobConfig) -> tuple[dict, int]:
    """Validate and dispatch; returns the output document and the exit code."""
    try:
        job.validate()
    except ConfigError as exc:
        return {"error": "MalformedInput", "message": str(exc)}, 1
    try:
        return HANDLERS[job.command](job), 0
    except (ValueError, ArithmeticError) as exc:
        return {"error": type(exc).__name__, "message": str(exc)}, 2


_FLAT_ARRAY = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def dumps(doc: dict) -> str:
    """Indented JSON with arrays of numbers kept on one line."""
    text = json.dumps(doc, indent=2)
    text = _FLAT_ARRAY.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


# --- argument parsing -------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_json(text: str | None) -> Any:
    if text is None or text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="barett-rsk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("prob", help="P(U<V) for a variance profile")
    p.add_argument("profile", nargs="?", help='JSON {"chi": [...], "delta": [...]}; "-" or omitted reads stdin, "@file" reads a file')
    p.add_argument("--method", choices=METHODS, default="bezout")
    p.add_argument("--backend", choices=probability.BACKENDS, default="exact")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="Monte Carlo sample count")
    p.add_argument("--seed", type=int, default=0, help="Monte Carlo seed")

    p = sub.add_parser("identity", help="q-Newton, Lemma 1 sum, cleared Euler sum and alpha_N for a given n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", default=None, help='rational evaluation point for the 1/2 identity, e.g. "3/2" (default 2)')
    p.add_argument("--which", nargs="+", choices=["qnewton", "lemma", "euler", "alpha"])

    p = sub.add_parser("rsk", help="word, Knuth pair, Phi square and w1/w2 for a {0,1}-matrix")
    p.add_argument("matrix", nargs="?", help='JSON array of 0/1 rows; "-" or omitted reads stdin, "@file" reads a file')

    p = sub.add_parser("schur", help="monomials of F(chi, delta) for small n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("count", help="alpha_N: closed formula vs enumeration through Phi")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("enumerate", help="semistandard tableaux of a shape, conjugate and complement")
    p.add_argument("--shape", type=_int_list, required=True, help="weakly decreasing parts, e.g. 4,2,2")
    p.add_argument("--n", type=int, required=True, help="largest entry and side of the square")
    p.add_argument("--no-list", action="store_true", help="omit the tableau list")
    p.add_argument("--tableau", help="JSON rows (bottom row first) to check against the shape")

    p = sub.add_parser("run", help="execute a JobConfig JSON document")
    p.add_argument("config", nargs="?", help='JSON job; "-" or omitted reads stdin, "@file" reads a file')
    return parser


def job_from_args(args: argparse.Namespace) -> JobConfig:
    cmd = args.command
    if cmd == "run":
        return JobConfig.from_json(_read_json(args.config))
    if cmd == "prob":
        return JobConfig(
            "prob", _read_json(args.profile), backend=args.backend, method=args.method, samples=args.samples, seed=args.seed
        )
    if cmd == "identity":
        payload: dict[str, Any] = {"n": args.n}
        if args.t is not None:
            payload["t"] = args.t
        if args.which:
            payload["which"] = args.which
        return JobConfig("identity", payload)
    if cmd == "rsk":
        return JobConfig("rsk", {"matrix": _read_json(args.matrix)})
    if cmd in ("schur", "count"):
        return JobConfig(cmd, {"n": args.n})
    payload = {"shape": args.shape, "n": args.n}
    if args.no_list:
        payload["list"] = False
    if args.tableau:
        payload["tableau"] = _read_json(args.tableau)
    return JobConfig("enumerate", payload)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = job_from_args(args)
    except ConfigError as exc:
        doc, code = {"error": "MalformedInput", "message": str(exc)}, 1
    else:
        doc, code = run(job)
    (sys.stdout if code == 0 else sys.stderr).write(dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
