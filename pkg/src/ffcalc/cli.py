"""Batch command-line front end.

Reads newline-delimited JSON requests {"command": ..., "payload": ...} from
stdin (or a file), evaluates them in order, and writes one JSON response
per line: {"ok":true,"result":...} or {"ok":false,"error":{...}}.  A single
request can instead be passed with --command/--payload.  Output is
deterministic: fixed key order, compact separators, no timestamps.

Exit status: 0 if every line succeeded, 1 if any request failed a domain
precondition, 2 if any line failed to parse as a request.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Union

from . import __version__
from . import banach_colmez as bc
from . import bundles, codec, moduli, selftest, weyl

PARSE_ERROR = 2
DOMAIN_ERROR = 1


@dataclass(frozen=True)
class Request:
    command: str
    payload: Any
    lineno: Optional[int] = None


@dataclass(frozen=True)
class ParseFailure:
    message: str
    lineno: Optional[int] = None


@dataclass(frozen=True)
class Response:
    ok: bool
    result: Any = None
    error: Optional[dict] = None
    exit_code: int = 0

    def to_json(self) -> dict:
        if self.ok:
            return {"ok": True, "result": self.result}
        return {"ok": False, "error": self.error}


def _ok(result: Any) -> Response:
    return Response(ok=True, result=result)


def _fail(code: int, message: str, location: str) -> Response:
    return Response(
        ok=False,
        error={"code": code, "message": message, "location": location},
        exit_code=code,
    )


# ------------------------------------------------------------ dispatchers


def _dim_result(value: int) -> dict:
    return {"dim": value}


def _handle_bundle_info(payload: Any) -> Any:
    e = codec.decode_bundle(payload)
    return {
        "rank": bundles.rank(e),
        "degree": bundles.degree(e),
        "polygon": codec.encode_polygon(bundles.hn_polygon(e)),
    }


def _handle_h0(payload: Any) -> Any:
    return codec.encode_smooth_dim(bc.h0_dim(codec.decode_bundle(payload)))


def _handle_h1(payload: Any) -> Any:
    return codec.encode_smooth_dim(bc.h1_dim(codec.decode_bundle(payload)))


def _handle_complex_dims(payload: Any) -> Any:
    return codec.encode_complex_dims(bc.complex_h_dims(codec.decode_complex(payload)))


def _handle_picard(payload: Any) -> Any:
    return codec.encode_smooth_dim(bc.picard_dim(codec.decode_complex(payload)))


def _handle_smooth_check(payload: Any) -> Any:
    return bc.section_is_smooth_point(codec.decode_complex(payload))


def _handle_torsion(payload: Any) -> Any:
    obj = codec._as_object(payload, "payload")
    op = codec._field(obj, "op", "payload")
    if op == "h0":
        q = codec.decode_torsion(codec._field(obj, "q", "payload"), "payload.q")
        return codec.encode_smooth_dim(bc.torsion_h0_dim(q))
    if op == "ext1-bundle":
        q = codec.decode_torsion(codec._field(obj, "q", "payload"), "payload.q")
        g = codec.decode_bundle(codec._field(obj, "g", "payload"), "payload.g")
        return codec.encode_smooth_dim(bc.ext1_torsion_bundle_dim(q, g))
    if op == "hom-ext":
        q1 = codec.decode_torsion(codec._field(obj, "q1", "payload"), "payload.q1")
        q2 = codec.decode_torsion(codec._field(obj, "q2", "payload"), "payload.q2")
        return codec.encode_hom_ext_dims(bc.torsion_hom_ext_dims(q1, q2))
    raise codec.CodecError(
        f"unknown torsion op {op!r}; expected h0, ext1-bundle, or hom-ext",
        "payload.op",
    )


def _composition_pair(payload: Any) -> tuple:
    obj = codec._as_object(payload, "payload")
    h = codec.decode_int_vector(codec._field(obj, "h", "payload"), "payload.h")
    d = codec.decode_int_vector(codec._field(obj, "d", "payload"), "payload.d")
    return h, d


def _handle_bunp_dim(payload: Any) -> Any:
    h, d = _composition_pair(payload)
    return _dim_result(moduli.bun_p_stratum_dim(h, d))


def _handle_laumon_dim(payload: Any) -> Any:
    h, d = _composition_pair(payload)
    return _dim_result(moduli.laumon_stratum_dim(h, d))


def _handle_bung_dim(payload: Any) -> Any:
    return _dim_result(moduli.bun_g_dim(codec.decode_bundle(payload)))


def _handle_relpos_dim(payload: Any) -> Any:
    b = codec.decode_bifiltration(payload)
    return _dim_result(moduli.relpos_stratum_dim(b))


def _handle_polygon_dominates(payload: Any) -> Any:
    obj = codec._as_object(payload, "payload")
    a = codec.decode_bundle(codec._field(obj, "a", "payload"), "payload.a")
    b = codec.decode_bundle(codec._field(obj, "b", "payload"), "payload.b")
    return bundles.dominates(a, b)


def _young(value: Any, path: str) -> weyl.YoungSubgroup:
    parts = codec.decode_int_vector(value, path)
    try:
        return weyl.YoungSubgroup(moduli.Composition(parts))
    except ValueError as exc:
        raise codec.CodecError(str(exc), path) from exc


def _handle_weyl_reps(payload: Any) -> Any:
    obj = codec._as_object(payload, "payload")
    n = codec._as_int(codec._field(obj, "n", "payload"), "payload.n")
    left = _young(codec._field(obj, "left", "payload"), "payload.left")
    right = _young(codec._field(obj, "right", "payload"), "payload.right")
    reps = weyl.min_double_coset_reps(n, left, right)
    return {"count": len(reps), "reps": [codec.encode_weyl_element(w) for w in reps]}


def _handle_weyl_bruhat(payload: Any) -> Any:
    obj = codec._as_object(payload, "payload")
    u = codec.decode_weyl_element(codec._field(obj, "u", "payload"), "payload.u")
    w = codec.decode_weyl_element(codec._field(obj, "w", "payload"), "payload.w")
    return weyl.bruhat_leq(u, w)


def _handle_weyl_matrix(payload: Any) -> Any:
    obj = codec._as_object(payload, "payload")
    direction = codec._field(obj, "direction", "payload")
    if direction == "from-matrix":
        h = codec.decode_int_matrix(codec._field(obj, "h", "payload"), "payload.h")
        return codec.encode_weyl_element(weyl.coset_rep_from_matrix(h))
    if direction == "to-matrix":
        w = codec.decode_weyl_element(codec._field(obj, "w", "payload"), "payload.w")
        left = _young(codec._field(obj, "left", "payload"), "payload.left")
        right = _young(codec._field(obj, "right", "payload"), "payload.right")
        return [list(row) for row in weyl.matrix_from_rep(w, left, right)]
    raise codec.CodecError(
        f"unknown direction {direction!r}; expected from-matrix or to-matrix",
        "payload.direction",
    )


def _handle_selftest(payload: Any) -> Any:
    obj = codec._as_object(payload, "payload") if payload is not None else {}
    seed = obj.get("seed", 0)
    budget = obj.get("budget", 1000)
    seed = codec._as_int(seed, "payload.seed")
    budget = codec._as_int(budget, "payload.budget")
    if budget < 0:
        raise codec.CodecError("budget must be >= 0", "payload.budget")
    return selftest.run_selftest(seed=seed, budget=budget)


HANDLERS = {
    "bundle-info": _handle_bundle_info,
    "h0": _handle_h0,
    "h1": _handle_h1,
    "complex-dims": _handle_complex_dims,
    "picard": _handle_picard,
    "smooth-check": _handle_smooth_check,
    "torsion": _handle_torsion,
    "bunp-dim": _handle_bunp_dim,
    "laumon-dim": _handle_laumon_dim,
    "bung-dim": _handle_bung_dim,
    "relpos-dim": _handle_relpos_dim,
    "weyl-reps": _handle_weyl_reps,
    "weyl-bruhat": _handle_weyl_bruhat,
    "weyl-matrix": _handle_weyl_matrix,
    "polygon-dominates": _handle_polygon_dominates,
    "selftest": _handle_selftest,
}


def run(request: Request) -> Response:
    """Dispatch one request; domain failures come back as error responses,
    never exceptions."""
    handler = HANDLERS[request.command]
    location = "payload" if request.lineno is None else f"line {request.lineno}"
    try:
        return _ok(handler(request.payload))
    except codec.CodecError as exc:
        return _fail(DOMAIN_ERROR, exc.message, exc.path)
    except (ValueError, TypeError) as exc:
        return _fail(DOMAIN_ERROR, str(exc), location)


def parse_request(obj: Any, lineno: Optional[int] = None) -> Union[Request, ParseFailure]:
    if not isinstance(obj, dict):
        return ParseFailure("request must be a JSON object", lineno)
    command = obj.get("command")
    if not isinstance(command, str) or command not in HANDLERS:
        return ParseFailure(
            f"unknown command {command!r}; expected one of {sorted(HANDLERS)}", lineno
        )
    if command != "selftest" and "payload" not in obj:
        return ParseFailure(f"command {command!r} requires a payload", lineno)
    return Request(command=command, payload=obj.get("payload"), lineno=lineno)


def read_requests(stream: Iterable[str]) -> list:
    """One request per nonempty line; malformed lines become ParseFailure
    entries (with their line number) and processing continues."""
    out: list[Union[Request, ParseFailure]] = []
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            out.append(ParseFailure(f"invalid JSON: {exc.msg}", lineno))
            continue
        out.append(parse_request(obj, lineno))
    return out


def _emit(response: Response, pretty: bool, out) -> None:
    if pretty:
        text = json.dumps(response.to_json(), indent=2)
    else:
        text = json.dumps(response.to_json(), separators=(",", ":"))
    out.write(text + "\n")


def main(argv: Optional[list] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="ffcalc",
        description="Exact slope-calculus calculator: newline-delimited JSON in, "
        "newline-delimited JSON out.",
    )
    parser.add_argument("infile", nargs="?", help="requests file (default: stdin)")
    parser.add_argument("--command", help="run a single command instead of reading stdin")
    parser.add_argument("--payload", help="JSON payload for --command")
    parser.add_argument("--seed", type=int, default=0, help="selftest seed")
    parser.add_argument("--budget", type=int, default=1000, help="selftest case budget")
    parser.add_argument("--pretty", action="store_true", help="indent output JSON")
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    args = parser.parse_args(argv)
    out = sys.stdout

    if args.command is not None:
        if args.command == "selftest" and args.payload is None:
            payload: Any = {"seed": args.seed, "budget": args.budget}
        elif args.payload is None:
            _emit(_fail(PARSE_ERROR, "--command requires --payload", "arguments"),
                  args.pretty, out)
            return PARSE_ERROR
        else:
            try:
                payload = json.loads(args.payload)
            except json.JSONDecodeError as exc:
                _emit(_fail(PARSE_ERROR, f"invalid JSON payload: {exc.msg}", "arguments"),
                      args.pretty, out)
                return PARSE_ERROR
        parsed = parse_request({"command": args.command, "payload": payload})
        if isinstance(parsed, ParseFailure):
            _emit(_fail(PARSE_ERROR, parsed.message, "arguments"), args.pretty, out)
            return PARSE_ERROR
        response = run(parsed)
        _emit(response, args.pretty, out)
        return response.exit_code

    if args.infile:
        with open(args.infile, "r", encoding="utf-8", errors="replace") as handle:
            lines = handle.read().splitlines()
    else:
        # bytes in, replacement chars out: arbitrary input must never crash
        lines = sys.stdin.buffer.read().decode("utf-8", errors="replace").splitlines()

    exit_code = 0
    for item in read_requests(lines):
        if isinstance(item, ParseFailure):
            location = "input" if item.lineno is None else f"line {item.lineno}"
            response = _fail(PARSE_ERROR, item.message, location)
        else:
            response = run(item)
        _emit(response, args.pretty, out)
        exit_code = max(exit_code, response.exit_code)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
