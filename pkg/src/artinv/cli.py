"""Command line interface.

Commands take a presentation file (see the presentation module for the
format) and print a deterministic report; `--json` switches to a JSON
form that validates against data/report.schema.json. Exit codes: 0
success, 1 input error, 2 enumeration cap exceeded, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from typing import Callable, Dict, List, Optional, Tuple

from . import invariants as inv
from .algebra import ArtinianAlgebra, Ideal, is_complete_intersection
from .errors import (
    ArtinvError,
    CapExceededError,
    InputError,
    InternalInvariantError,
    NotArtinianError,
)
from .hilbert import OSequence, macaulay_bound
from .presentation import (
    Presentation,
    build_algebra,
    build_registered_ideals,
    load_presentation,
    lookup_ideal,
)

Payload = Dict[str, object]
Lines = List[str]


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _poly(algebra: ArtinianAlgebra, vec) -> str:
    return str(algebra.polynomial_from_element(vec))


def _space_polys(algebra: ArtinianAlgebra, space) -> List[str]:
    return [_poly(algebra, row) for row in space.rows]


def _hf_str(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


# ---------------------------------------------------------------------------
# payload builders and their text renderings

def _hilbert_payload(algebra: ArtinianAlgebra) -> Payload:
    hf = algebra.hilbert_function()
    return {
        "values": list(hf.values),
        "length": hf.length,
        "socle_degree": hf.socle_degree,
        "admissible": hf.is_admissible(),
        "unimodal": hf.is_unimodal(),
        "symmetric": hf.is_symmetric(),
        "tags": list(hf.shape_tags()),
    }


def _hilbert_lines(p: Payload) -> Lines:
    return [
        f"hilbert function: {_hf_str(p['values'])}",
        f"length: {p['length']}",
        f"socle degree: {p['socle_degree']}",
        f"admissible: {_yes(p['admissible'])}",
        f"unimodal: {_yes(p['unimodal'])}",
        f"symmetric: {_yes(p['symmetric'])}",
        "tags: " + (", ".join(p["tags"]) if p["tags"] else "none"),
    ]


def _rees_payload(algebra: ArtinianAlgebra, mode: Optional[str],
                  cap: Optional[int]) -> Payload:
    result = inv.rees_number(algebra, mode, cap)
    return {"value": result.value, "mode": result.mode,
            "witness": _poly(algebra, result.witness)}


def _rees_lines(p: Payload) -> Lines:
    return [f"rees number: {p['value']}", f"mode: {p['mode']}",
            f"witness: {p['witness']}"]


def _dilworth_payload(algebra: ArtinianAlgebra, mode: Optional[str],
                      cap: Optional[int], registered) -> Payload:
    # the oracle is the exhaustive strategy; any other mode, or an algebra
    # it cannot enumerate, falls back to the two-sided bounds
    use_oracle = mode == "exhaustive"
    if mode is None:
        try:
            use_oracle = inv.best_rees_mode(algebra, cap) == "exhaustive"
        except (ArtinvError, ValueError):
            use_oracle = False
    if use_oracle:
        result = inv.dilworth_oracle(algebra, cap)
        return {
            "kind": "oracle",
            "value": result.value,
            "ideal_count": result.ideal_count,
            "maximizers": [_space_polys(algebra, ideal.space)
                           for ideal in result.maximizers],
        }
    lower, upper = inv.dilworth_bounds(algebra, registered, cap)
    return {"kind": "bounds", "lower": lower, "upper": upper}


def _dilworth_lines(p: Payload) -> Lines:
    if p["kind"] == "oracle":
        lines = [f"dilworth number: {p['value']}",
                 f"ideals enumerated: {p['ideal_count']}",
                 f"maximizers: {len(p['maximizers'])}"]
        lines += [f"maximizer basis: {', '.join(basis)}"
                  for basis in p["maximizers"]]
        return lines
    return [f"dilworth bounds: {p['lower']} <= D <= {p['upper']}"]


def _socle_payload(algebra: ArtinianAlgebra) -> Payload:
    socle = algebra.socle().space
    return {"dimension": socle.dim, "basis": _space_polys(algebra, socle)}


def _socle_lines(p: Payload) -> Lines:
    basis = ", ".join(p["basis"]) if p["basis"] else "none"
    return [f"socle dimension: {p['dimension']}", f"basis: {basis}"]


def _mu_payload(algebra: ArtinianAlgebra, ideals: Dict[str, Ideal],
                name: str) -> Payload:
    ideal = lookup_ideal(ideals, name)
    return {"ideal": name, "value": inv.mu(algebra, ideal),
            "ideal_dimension": ideal.space.dim}


def _mu_lines(p: Payload) -> Lines:
    return [f"ideal: {p['ideal']}", f"ideal dimension: {p['ideal_dimension']}",
            f"minimal generators: {p['value']}"]


def _annihilator_payload(algebra: ArtinianAlgebra, source: str) -> Payload:
    element = algebra.parse_element(source)
    space = algebra.annihilator(element).space
    return {"element": _poly(algebra, element), "dimension": space.dim,
            "basis": _space_polys(algebra, space)}


def _annihilator_lines(p: Payload) -> Lines:
    basis = ", ".join(p["basis"]) if p["basis"] else "none"
    return [f"element: {p['element']}", f"dimension: {p['dimension']}",
            f"basis: {basis}"]


def _lefschetz_payload(algebra: ArtinianAlgebra, source: str) -> Payload:
    report = inv.weak_lefschetz(algebra, algebra.parse_element(source))
    return {
        "element": _poly(algebra, report.element),
        "holds": report.holds,
        "steps": [{"degree": s.degree, "source_dim": s.source_dim,
                   "target_dim": s.target_dim, "rank": s.rank,
                   "maximal": s.maximal} for s in report.steps],
    }


def _lefschetz_lines(p: Payload) -> Lines:
    lines = [f"element: {p['element']}"]
    for s in p["steps"]:
        best = min(s["source_dim"], s["target_dim"])
        tail = "maximal" if s["maximal"] else f"below {best}"
        lines.append(f"degree {s['degree']}: {s['source_dim']} -> "
                     f"{s['target_dim']}, rank {s['rank']}, {tail}")
    lines.append(f"weak lefschetz: {_yes(p['holds'])}")
    return lines


def _certificate_payload(algebra: ArtinianAlgebra, cert) -> Payload:
    if isinstance(cert, inv.ElementWitness):
        return {"kind": "element", "element": _poly(algebra, cert.element)}
    if isinstance(cert, inv.IdealWitness):
        return {"kind": "ideal",
                "basis": _space_polys(algebra, cert.ideal.space),
                "element": _poly(algebra, cert.element)}
    if isinstance(cert, inv.MonomialCriterionFailure):
        return {"kind": "monomial_criterion", "deficit": cert.deficit}
    return {"kind": "enumeration", "ideal_count": cert.ideal_count,
            "maximizer_basis": _space_polys(algebra, cert.maximizer.space),
            "element": _poly(algebra, cert.element)}


def _certificate_lines(p: Payload) -> Lines:
    kind = p["kind"]
    if kind == "element":
        return ["certificate: element witness", f"element: {p['element']}"]
    if kind == "ideal":
        return ["certificate: ideal witness",
                f"ideal basis: {', '.join(p['basis'])}",
                f"element: {p['element']}"]
    if kind == "monomial_criterion":
        return ["certificate: monomial criterion failure",
                f"deficit: {p['deficit']}"]
    return ["certificate: exhaustive enumeration",
            f"ideals enumerated: {p['ideal_count']}",
            f"maximizer basis: {', '.join(p['maximizer_basis'])}",
            f"element: {p['element']}"]


def _verdict_payload(algebra: ArtinianAlgebra, verdict) -> Payload:
    if isinstance(verdict, inv.Exact):
        return {"kind": "exact", "value": verdict.value,
                "certificate": _certificate_payload(algebra, verdict.witness)}
    if isinstance(verdict, inv.NotExact):
        return {"kind": "not_exact", "dilworth": verdict.dilworth,
                "rees": verdict.rees,
                "certificate": _certificate_payload(algebra, verdict.evidence)}
    return {"kind": "unknown", "lower": verdict.lower, "upper": verdict.upper}


def _verdict_lines(p: Payload) -> Lines:
    if p["kind"] == "exact":
        return ["verdict: exact", f"value: {p['value']}"] + \
            _certificate_lines(p["certificate"])
    if p["kind"] == "not_exact":
        dilworth = "unknown" if p["dilworth"] is None else str(p["dilworth"])
        return ["verdict: not exact", f"dilworth: {dilworth}",
                f"rees: {p['rees']}"] + _certificate_lines(p["certificate"])
    return ["verdict: unknown",
            f"bounds: {p['lower']} <= D <= {p['upper']}"]


def _exactness_payload(algebra: ArtinianAlgebra, cap: Optional[int],
                       registered) -> Payload:
    return _verdict_payload(algebra, inv.exactness(algebra, cap, registered))


def _quotient_payload(algebra: ArtinianAlgebra, sources) -> Payload:
    elements = [algebra.parse_element(s) for s in sources]
    return {"elements": [_poly(algebra, e) for e in elements],
            "value": algebra.quotient_length(elements)}


def _quotient_lines(p: Payload) -> Lines:
    return [f"elements: {', '.join(p['elements'])}",
            f"quotient length: {p['value']}"]


def _report_payload(algebra: ArtinianAlgebra, cap: Optional[int],
                    ideals: Dict[str, Ideal]) -> Payload:
    registered = list(ideals.values())
    return {
        "length": algebra.dim,
        "local": algebra.is_local(),
        "hilbert_function": list(algebra.hilbert_function().values),
        "socle_dimension": algebra.socle().space.dim,
        "gorenstein": algebra.is_gorenstein(),
        "complete_intersection": is_complete_intersection(algebra),
        "rees": _rees_payload(algebra, None, cap),
        "dilworth": _dilworth_payload(algebra, None, cap, registered),
        "exactness": _exactness_payload(algebra, cap, registered),
    }


def _report_lines(p: Payload) -> Lines:
    rees = p["rees"]
    lines = [
        f"length: {p['length']}",
        f"local: {_yes(p['local'])}",
        f"hilbert function: {_hf_str(p['hilbert_function'])}",
        f"socle dimension: {p['socle_dimension']}",
        f"gorenstein: {_yes(p['gorenstein'])}",
        f"complete intersection: {_yes(p['complete_intersection'])}",
        f"rees number: {rees['value']} [{rees['mode']}]",
        f"rees witness: {rees['witness']}",
    ]
    dilworth = p["dilworth"]
    if dilworth["kind"] == "oracle":
        lines.append(f"dilworth number: {dilworth['value']} "
                     f"[oracle over {dilworth['ideal_count']} ideals]")
    else:
        lines.append(f"dilworth bounds: {dilworth['lower']} <= D <= "
                     f"{dilworth['upper']}")
    return lines + _verdict_lines(p["exactness"])


def _macaulay_payload(sequence: Tuple[int, ...]) -> Payload:
    try:
        seq = OSequence(sequence)
        valid = True
    except InputError:
        seq = None
        valid = False
    steps = []
    if valid:
        for i in range(1, len(seq.values) - 1):
            bound = macaulay_bound(seq.values[i], i)
            steps.append({"degree": i, "value": seq.values[i],
                          "next": seq.values[i + 1], "bound": bound,
                          "ok": seq.values[i + 1] <= bound})
    return {
        "sequence": list(sequence),
        "valid_shape": valid,
        "admissible": valid and seq.is_admissible(),
        "tags": list(seq.shape_tags()) if valid else [],
        "steps": steps,
    }


def _macaulay_lines(p: Payload) -> Lines:
    lines = [f"sequence: {_hf_str(p['sequence'])}",
             f"valid shape: {_yes(p['valid_shape'])}"]
    for s in p["steps"]:
        state = "ok" if s["ok"] else "violated"
        lines.append(f"step {s['degree']}: {s['value']} -> {s['next']}, "
                     f"bound {s['bound']}, {state}")
    lines.append(f"admissible: {_yes(p['admissible'])}")
    if p["valid_shape"]:
        lines.append("tags: " + (", ".join(p["tags"]) if p["tags"] else "none"))
    return lines


def _fixtures_payload() -> Payload:
    from .fixtures import run_fixtures
    results = run_fixtures()
    return {
        "passed": sum(1 for r in results if r.passed),
        "failed": sum(1 for r in results if not r.passed),
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                   for r in results],
    }


def _fixtures_lines(p: Payload) -> Lines:
    width = max(len(c["name"]) for c in p["checks"])
    lines = [("PASS" if c["passed"] else "FAIL")
             + f" {c['name']:<{width}}  {c['detail']}"
             for c in p["checks"]]
    lines.append(f"{p['passed']} passed, {p['failed']} failed")
    return lines


# ---------------------------------------------------------------------------
# dispatch

def _run_invariant(command: str, algebra: ArtinianAlgebra,
                   ideals: Dict[str, Ideal], args) -> Tuple[Payload, Lines]:
    if command == "hilbert":
        payload = _hilbert_payload(algebra)
        return payload, _hilbert_lines(payload)
    if command == "rees":
        payload = _rees_payload(algebra, args.mode, args.cap)
        return payload, _rees_lines(payload)
    if command == "dilworth":
        payload = _dilworth_payload(algebra, args.mode, args.cap,
                                    list(ideals.values()))
        return payload, _dilworth_lines(payload)
    if command == "socle":
        payload = _socle_payload(algebra)
        return payload, _socle_lines(payload)
    if command == "mu":
        payload = _mu_payload(algebra, ideals, args.ideal)
        return payload, _mu_lines(payload)
    if command == "annihilator":
        payload = _annihilator_payload(algebra, args.element)
        return payload, _annihilator_lines(payload)
    if command == "lefschetz":
        payload = _lefschetz_payload(algebra, args.element)
        return payload, _lefschetz_lines(payload)
    if command == "exactness":
        payload = _exactness_payload(algebra, args.cap, list(ideals.values()))
        return payload, _verdict_lines(payload)
    if command == "quotient-length":
        payload = _quotient_payload(algebra, args.elements)
        return payload, _quotient_lines(payload)
    raise InputError(f"unknown command {command!r}")


def _presentation_line(presentation: Presentation) -> str:
    vars_part = ",".join(presentation.var_names)
    count = len(presentation.ideal)
    plural = "" if count == 1 else "s"
    return (f"presentation: {presentation.digest()} "
            f"{presentation.field_name}[{vars_part}] ({count} relation{plural})")


class _Stage(Exception):
    """Wraps an error with the pipeline stage it occurred in."""

    def __init__(self, stage: str, code: int, message: str):
        super().__init__(message)
        self.stage = stage
        self.code = code


def _stage_of(exc: ArtinvError, building: bool) -> Tuple[str, int]:
    if isinstance(exc, CapExceededError):
        return "cap", 2
    if isinstance(exc, InternalInvariantError):
        return "internal", 3
    if isinstance(exc, NotArtinianError):
        return "not-artinian", 1
    if isinstance(exc, InputError):
        return ("parse", 1) if building else ("input", 1)
    return "internal", 3


def _build(presentation: Presentation):
    try:
        algebra = build_algebra(presentation)
        ideals = build_registered_ideals(presentation, algebra)
    except ArtinvError as exc:
        stage, code = _stage_of(exc, building=True)
        raise _Stage(stage, code, str(exc)) from exc
    return algebra, ideals


def _compute(fn: Callable[[], Tuple[Payload, Lines]]) -> Tuple[Payload, Lines]:
    try:
        return fn()
    except ArtinvError as exc:
        stage, code = _stage_of(exc, building=False)
        raise _Stage(stage, code, str(exc)) from exc


def _parse_sequence(text: str) -> Tuple[int, ...]:
    cleaned = text.strip().strip("()[]")
    parts = [p for chunk in cleaned.split(",") for p in chunk.split()]
    if not parts:
        raise InputError(f"empty Hilbert sequence {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"cannot parse sequence {text!r}") from exc


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage; 2 means cap-exceeded here,
    # so route usage problems through the normal input-error path instead
    def error(self, message):
        raise InputError(f"usage: {message}")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="artinv",
                     description="invariants of artinian local algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def file_command(name: str, help_text: str, compare: bool = True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="presentation file")
        p.add_argument("--json", action="store_true", dest="as_json")
        p.add_argument("--cap", type=int, default=None,
                       help="enumeration cap (default 256, env ARTINV_CAP)")
        if compare:
            p.add_argument("--char-compare", type=int, default=None,
                           metavar="P", dest="char_compare",
                           help="rerun over the prime field F_P and diff")
        return p

    file_command("report", "full invariant report", compare=False)
    file_command("hilbert", "Hilbert function and shape tags")
    rees = file_command("rees", "minimal principal quotient length")
    rees.add_argument("--mode", choices=("exhaustive", "degree1", "generic"),
                      default=None)
    dilworth = file_command("dilworth", "maximal minimal-generator count")
    dilworth.add_argument("--mode",
                          choices=("exhaustive", "degree1", "generic"),
                          default=None)
    file_command("socle", "socle dimension and basis")
    mu = file_command("mu", "minimal generators of a registered ideal")
    mu.add_argument("ideal", help="registered ideal name")
    ann = file_command("annihilator", "annihilator of an element")
    ann.add_argument("element", help="element source string")
    lef = file_command("lefschetz", "weak Lefschetz check for an element")
    lef.add_argument("element", help="degree-one element source string")
    file_command("exactness", "exactness verdict with certificate")
    quot = file_command("quotient-length", "length of A/(a_1,...,a_k)A")
    quot.add_argument("elements", nargs="+", help="element source strings")

    mac = sub.add_parser("macaulay", help="admissibility of a Hilbert sequence")
    mac.add_argument("sequence", help="comma-separated values, e.g. 1,3,1,2")
    mac.add_argument("--json", action="store_true", dest="as_json")

    fix = sub.add_parser("fixtures", help="run the built-in example suite")
    fix.add_argument("--json", action="store_true", dest="as_json")
    return parser


def _emit(command: str, argv: List[str], payload: Payload, lines: Lines,
          seconds: float, as_json: bool,
          presentation: Optional[Presentation] = None,
          out=None) -> None:
    out = out or sys.stdout
    if as_json:
        envelope: Dict[str, object] = {
            "command": command,
            "argv": argv,
            "results": payload,
            "timing": {"seconds": round(seconds, 6)},
        }
        if presentation is not None:
            envelope["digest"] = presentation.digest()
        print(json.dumps(envelope, indent=2, sort_keys=True), file=out)
        return
    print(f"command: {' '.join(argv)}", file=out)
    if presentation is not None:
        print(_presentation_line(presentation), file=out)
    for line in lines:
        print(line, file=out)
    print(f"time: {seconds:.3f}s", file=out)


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    started = time.perf_counter()
    try:
        try:
            args = _build_parser().parse_args(argv)
        except InputError as exc:
            raise _Stage("input", 1, str(exc)) from exc

        if args.command == "macaulay":
            payload = _compute(
                lambda: (_macaulay_payload(_parse_sequence(args.sequence)),
                         []))[0]
            lines = _macaulay_lines(payload)
            _emit("macaulay", argv, payload, lines,
                  time.perf_counter() - started, args.as_json)
            return 0

        if args.command == "fixtures":
            payload = _fixtures_payload()
            lines = _fixtures_lines(payload)
            _emit("fixtures", argv, payload, lines,
                  time.perf_counter() - started, args.as_json)
            return 0 if payload["failed"] == 0 else 1

        try:
            presentation = load_presentation(args.file)
        except InputError as exc:
            raise _Stage("parse", 1, str(exc)) from exc
        algebra, ideals = _build(presentation)

        if args.command == "report":
            payload, lines = _compute(
                lambda: ((lambda p: (p, _report_lines(p)))(
                    _report_payload(algebra, args.cap, ideals))))
        else:
            payload, lines = _compute(
                lambda: _run_invariant(args.command, algebra, ideals, args))
            prime = getattr(args, "char_compare", None)
            if prime is not None:
                other = dataclasses.replace(presentation,
                                            field_name=f"F{prime}")
                other_algebra, other_ideals = _build(other)
                other_payload, other_lines = _compute(
                    lambda: _run_invariant(args.command, other_algebra,
                                           other_ideals, args))
                payload = {"base": payload,
                           "compare": {"field": f"F{prime}",
                                       "results": other_payload},
                           "differs": payload != other_payload}
                lines = (lines + [f"compare field: F{prime}"] + other_lines
                         + [f"differs: {_yes(payload['differs'])}"])

        _emit(args.command, argv, payload, lines,
              time.perf_counter() - started, args.as_json, presentation)
        return 0
    except _Stage as exc:
        print(f"artinv: {exc.stage}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
