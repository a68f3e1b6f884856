"""Command-line front end.

Subcommands: ``jones``, ``trace``, ``simulate``, ``entangle``, ``verify``.
Jones values use the normalization where the 3-component unlink is ``d^2``.

Exit codes: 0 success, 1 verification failure, 2 braid parse error,
3 invalid parameter.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .ajl_sim import LABELS, build_rho_B, run_mixed_algorithm, run_pure_algorithm
from .braid import BraidWord, parse_braid, writhe_of_closure
from .entanglement import classify_bipartitions, rank_profile
from .errors import BraidParseError, KTooSmall, WordTooLong
from .jones import jones_at_root, jones_both_methods, jones_by_oracle
from .kauffman import MAX_WORD_LEN, bracket_scaled
from .linalg import Bipartition
from .pathmodel import make_params, markov_trace
from . import verify as _verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_PARAM = 3
MAX_SEED = 2**64 - 1


class ParamError(Exception):
    pass


def _num(x: float) -> float:
    # 15 significant digits; + 0.0 folds -0.0 into 0.0
    return float(f"{x:.15g}") + 0.0


def cnum(z: complex) -> list[float]:
    z = complex(z)
    return [_num(z.real), _num(z.imag)]


def _word_input(args, w: BraidWord) -> dict[str, Any]:
    return {"braid": args.braid, "word": str(w), "length": len(w)}


def cmd_jones(args) -> tuple[dict, dict, int]:
    w = parse_braid(args.braid)
    params = make_params(args.k)
    result: dict[str, Any] = {"writhe": writhe_of_closure(w), "t": cnum(params.t)}
    if args.method == "both":
        path, oracle, diff = jones_both_methods(w, args.k)
        result.update(value=cnum(path.value), path=cnum(path.value), bracket=cnum(oracle.value), diff=_num(diff))
    elif args.method == "bracket":
        result["value"] = cnum(jones_by_oracle(w, args.k).value)
    else:
        result["value"] = cnum(jones_at_root(w, args.k).value)
    result["method"] = args.method
    return _word_input(args, w), result, EXIT_OK


def cmd_trace(args) -> tuple[dict, dict, int]:
    w = parse_braid(args.braid)
    params = make_params(args.k)
    tr = markov_trace(w, params)
    result: dict[str, Any] = {"method": args.method}
    if args.method == "path":
        result["trace"] = cnum(tr)
    else:
        if len(w) > MAX_WORD_LEN:
            raise WordTooLong(f"bracket method limited to {MAX_WORD_LEN} crossings")
        via_bracket = bracket_scaled(w, params) / params.d**2
        result["trace"] = cnum(tr if args.method == "both" else via_bracket)
        if args.method == "both":
            result.update(path=cnum(tr), bracket=cnum(via_bracket), diff=_num(abs(tr - via_bracket)))
    return _word_input(args, w), result, EXIT_OK


def cmd_simulate(args) -> tuple[dict, dict, int]:
    w = parse_braid(args.braid)
    make_params(args.k)
    if args.samples < 1:
        raise ParamError("--samples must be >= 1")
    if not 0 <= args.seed <= MAX_SEED:
        raise ParamError("--seed must be a 64-bit unsigned integer")
    run = run_pure_algorithm if args.algorithm == "pure" else run_mixed_algorithm
    res = run(w, args.k, args.samples, args.seed)
    result = {
        "algorithm": res.algorithm,
        "r": cnum(res.estimate.r),
        "stderrBound": _num(res.estimate.stderr_bound),
        "output": cnum(res.output),
        "exactTrace": cnum(res.exact_trace),
        "exactOutput": cnum(res.exact_output),
        "expectedX": _num(res.expected_x),
        "expectedY": _num(res.expected_y),
        "error": _num(res.error),
    }
    inp = _word_input(args, w) | {"samples": args.samples, "seed": args.seed}
    return inp, result, EXIT_OK


def cmd_entangle(args) -> tuple[dict, dict, int]:
    w = parse_braid(args.braid)
    params = make_params(args.k)
    report = classify_bipartitions(w, args.k)
    per = {}
    for cut, r in report.per_bipartition.items():
        per[str(Bipartition.of(LABELS, [cut]))] = {
            "classification": r.classification.value,
            "pptMinEigenvalue": _num(r.ppt_min_eigenvalue),
            "ppt": r.ppt,
        }
    profile = rank_profile(build_rho_B(w, params))
    ranks = {
        "rho": profile.total,
        **{
            "{" + ",".join(sorted(kept, key=lambda s: (s != "c", s))) + "}": n
            for kept, n in sorted(profile.reduced.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        },
    }
    result = {
        "uCoefficients": [cnum(u) for u in report.u_coefficients],
        "perBipartition": per,
        "allSeparable": report.is_all_separable(),
        "ranks": ranks,
    }
    return _word_input(args, w), result, EXIT_OK


def _k_values(text: str) -> list[int]:
    try:
        ks = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ParamError(f"bad --k-values {text!r}") from exc
    if not ks:
        raise ParamError("--k-values is empty")
    return ks


def cmd_verify(args) -> tuple[dict, dict, int]:
    ks = _k_values(args.k_values)
    if args.max_len < 0:
        raise ParamError("--max-len must be >= 0")
    suites = _verify.run_all(args.max_len, ks)
    ok = all(s.passed for s in suites)
    result = {
        "passed": ok,
        "suites": [
            {"name": s.name, "checked": s.checked, "failed": s.failed, "firstFailure": s.first_failure}
            for s in suites
        ],
    }
    inp = {"maxLen": args.max_len, "kValues": ks}
    return inp, result, EXIT_OK if ok else EXIT_VERIFY_FAILED


COMMANDS = {
    "jones": cmd_jones,
    "trace": cmd_trace,
    "simulate": cmd_simulate,
    "entangle": cmd_entangle,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    fmt_opts = argparse.ArgumentParser(add_help=False)
    fmt_opts.add_argument("--format", choices=("text", "json"), default="text")
    common = argparse.ArgumentParser(add_help=False, parents=[fmt_opts])
    common.add_argument("--k", type=int, default=5, help="root-of-unity order, k >= 5 (default 5)")

    braid_opts = argparse.ArgumentParser(add_help=False)
    braid_opts.add_argument(
        "--braid", default="", help='braid word, e.g. "2 1 1 2" or "s1 S2" (default: identity)'
    )

    method_opts = argparse.ArgumentParser(add_help=False)
    method_opts.add_argument("--method", choices=("path", "bracket", "both"), default="path")

    ap = argparse.ArgumentParser(prog="ajl3", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser(
        "jones", parents=[common, braid_opts, method_opts],
        help="Jones value of the trace closure at t = exp(2 pi i / k)",
    )
    sub.add_parser(
        "trace", parents=[common, braid_opts, method_opts], help="Markov trace of the braid image"
    )
    sim = sub.add_parser("simulate", parents=[common, braid_opts], help="Monte Carlo Hadamard-test run")
    sim.add_argument("--samples", type=int, default=10000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--algorithm", choices=("pure", "mixed"), default="pure")
    sub.add_parser(
        "entangle", parents=[common, braid_opts], help="bipartite entanglement of the pre-measurement state"
    )
    ver = sub.add_parser("verify", parents=[fmt_opts], help="run the property suites")
    ver.add_argument("--max-len", type=int, default=_verify.DEFAULT_MAX_LEN)
    ver.add_argument(
        "--k-values", default=",".join(str(k) for k in _verify.DEFAULT_KS),
        help="comma-separated k values (default 5,6)",
    )
    return ap


def _fmt_complex(pair: list[float]) -> str:
    re_, im = pair
    return f"{re_:.15g} {'+' if im >= 0 else '-'} {abs(im):.15g}i"


def _is_cpair(obj: Any) -> bool:
    return isinstance(obj, list) and len(obj) == 2 and all(isinstance(x, float) for x in obj)


def _text_lines(prefix: str, obj: Any) -> list[str]:
    if isinstance(obj, dict):
        out = []
        for key, val in obj.items():
            out += _text_lines(f"{prefix}.{key}" if prefix else str(key), val)
        return out
    if isinstance(obj, list) and obj and all(isinstance(x, dict) for x in obj):
        out = []
        for item in obj:
            name = item.get("name", "")
            out += _text_lines(f"{prefix}.{name}", {k: v for k, v in item.items() if k != "name"})
        return out
    if _is_cpair(obj):
        return [f"{prefix}: {_fmt_complex(obj)}"]
    if isinstance(obj, list) and obj and all(_is_cpair(x) for x in obj):
        return [f"{prefix}: " + ", ".join(_fmt_complex(x) for x in obj)]
    return [f"{prefix}: {obj}"]


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    lines = [f"command: {payload['command']}"]
    if payload["k"] is not None:
        lines.append(f"k: {payload['k']}")
    lines += _text_lines("input", payload["input"])
    lines += _text_lines("", payload["result"])
    lines += _text_lines("diagnostics", payload["diagnostics"])
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inp, result, code = COMMANDS[args.command](args)
    except BraidParseError as exc:
        print(f"ajl3: braid parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (KTooSmall, ParamError, WordTooLong) as exc:
        print(f"ajl3: invalid parameter: {exc}", file=sys.stderr)
        return EXIT_PARAM
    k = None if args.command == "verify" else args.k
    diagnostics = {"normalization": "3-component unlink = d^2", "version": __version__}
    if k is not None:
        params = make_params(k)
        diagnostics |= {"d": _num(params.d), "A": cnum(params.A)}
    payload = {
        "command": args.command,
        "input": inp,
        "k": k,
        "result": result,
        "diagnostics": diagnostics,
    }
    print(render(payload, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
