"""Canonical JSON encodings of the domain types.

Rationals are always two-element integer arrays [numerator, denominator],
never floats.  Encoders emit canonical forms (bundle summands by decreasing
slope, stalk points ascending, fixed key order); decoders are lenient about
ordering but strict about value constraints, and report the JSON path of
the offending element.
"""

from __future__ import annotations

import math
from typing import Any

from .banach_colmez import ComplexDims, HomExtDims, SmoothDim, TwoTermComplex
from .bundles import Bundle, HNPolygon, Slope, TorsionSheaf
from .moduli import BifiltrationData, MarginalViolation
from .weyl import WeylElement


class CodecError(ValueError):
    """A malformed or out-of-contract JSON value, with its path."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{path}: {message}")
        self.message = message
        self.path = path


def _require(cond: bool, message: str, path: str) -> None:
    if not cond:
        raise CodecError(message, path)


def _as_int(value: Any, path: str) -> int:
    # bool is an int subclass but never a valid integer payload here
    _require(isinstance(value, int) and not isinstance(value, bool),
             f"expected an integer, got {value!r}", path)
    return value


def _as_list(value: Any, path: str) -> list:
    _require(isinstance(value, list), f"expected an array, got {value!r}", path)
    return value


def _as_object(value: Any, path: str) -> dict:
    _require(isinstance(value, dict), f"expected an object, got {value!r}", path)
    return value


def _field(obj: dict, key: str, path: str) -> Any:
    _require(key in obj, f"missing field {key!r}", path)
    return obj[key]


# ---------------------------------------------------------------- slopes


def decode_slope(value: Any, path: str) -> Slope:
    pair = _as_list(value, path)
    _require(len(pair) == 2, "slope must be a [numerator, denominator] pair", path)
    s = _as_int(pair[0], f"{path}[0]")
    r = _as_int(pair[1], f"{path}[1]")
    _require(r >= 1, f"slope denominator must be >= 1, got {r}", path)
    _require(math.gcd(abs(s), r) == 1, f"slope {s}/{r} is not in lowest terms", path)
    return Slope(s, r)


def encode_slope(slope: Slope) -> list:
    return [slope.numerator, slope.denominator]


# --------------------------------------------------------------- bundles


def decode_bundle(value: Any, path: str = "payload") -> Bundle:
    obj = _as_object(value, path)
    entries = _as_list(_field(obj, "summands", path), f"{path}.summands")
    pairs = []
    for k, entry in enumerate(entries):
        epath = f"{path}.summands[{k}]"
        eobj = _as_object(entry, epath)
        slope = decode_slope(_field(eobj, "slope", epath), f"{epath}.slope")
        mult = _as_int(_field(eobj, "mult", epath), f"{epath}.mult")
        _require(mult >= 1, f"multiplicity must be >= 1, got {mult}", f"{epath}.mult")
        pairs.append((slope, mult))
    return Bundle(tuple(pairs))


def encode_bundle(e: Bundle) -> dict:
    return {
        "summands": [
            {"slope": encode_slope(s), "mult": m} for s, m in e.summands
        ]
    }


def decode_torsion(value: Any, path: str = "payload") -> TorsionSheaf:
    obj = _as_object(value, path)
    entries = _as_list(_field(obj, "stalks", path), f"{path}.stalks")
    stalks = []
    for k, entry in enumerate(entries):
        epath = f"{path}.stalks[{k}]"
        eobj = _as_object(entry, epath)
        point = _field(eobj, "point", epath)
        _require(isinstance(point, str), "support point must be a string", f"{epath}.point")
        lengths = _as_list(_field(eobj, "lengths", epath), f"{epath}.lengths")
        out = []
        for m, n in enumerate(lengths):
            np = f"{epath}.lengths[{m}]"
            n = _as_int(n, np)
            _require(n >= 1, f"stalk length must be >= 1, got {n}", np)
            out.append(n)
        stalks.append((point, tuple(out)))
    return TorsionSheaf(tuple(stalks))


def encode_torsion(q: TorsionSheaf) -> dict:
    return {
        "stalks": [
            {"point": point, "lengths": list(lengths)} for point, lengths in q.stalks
        ]
    }


# -------------------------------------------------------------- complexes


def decode_complex(value: Any, path: str = "payload") -> TwoTermComplex:
    obj = _as_object(value, path)
    return TwoTermComplex(
        e_minus1=decode_bundle(_field(obj, "e_minus1", path), f"{path}.e_minus1"),
        e_zero=decode_bundle(_field(obj, "e_zero", path), f"{path}.e_zero"),
    )


def encode_complex(c: TwoTermComplex) -> dict:
    return {"e_minus1": encode_bundle(c.e_minus1), "e_zero": encode_bundle(c.e_zero)}


def encode_smooth_dim(sd: SmoothDim) -> dict:
    return {"smooth": sd.smooth, "dim": sd.dim}


def encode_complex_dims(dims: ComplexDims) -> dict:
    return {
        "hminus1": encode_smooth_dim(dims.hminus1),
        "h0": encode_smooth_dim(dims.h0),
        "h1": encode_smooth_dim(dims.h1),
    }


def encode_hom_ext_dims(dims: HomExtDims) -> dict:
    return {"hom": encode_smooth_dim(dims.hom), "ext": encode_smooth_dim(dims.ext)}


# ----------------------------------------------------- integer tuple data


def decode_int_vector(value: Any, path: str) -> tuple:
    return tuple(_as_int(x, f"{path}[{k}]") for k, x in enumerate(_as_list(value, path)))


def decode_int_matrix(value: Any, path: str) -> tuple:
    rows = _as_list(value, path)
    return tuple(decode_int_vector(row, f"{path}[{k}]") for k, row in enumerate(rows))


def decode_bifiltration(value: Any, path: str = "payload") -> BifiltrationData:
    obj = _as_object(value, path)
    fields = {}
    for key in ("h", "d"):
        fields[key] = decode_int_matrix(_field(obj, key, path), f"{path}.{key}")
    for key in ("row_ranks", "col_ranks", "row_degs", "col_degs"):
        fields[key] = decode_int_vector(_field(obj, key, path), f"{path}.{key}")
    try:
        return BifiltrationData(**fields)
    except ValueError as exc:
        raise CodecError(str(exc), path) from exc


def encode_bifiltration(b: BifiltrationData) -> dict:
    return {
        "h": [list(row) for row in b.h],
        "d": [list(row) for row in b.d],
        "row_ranks": list(b.row_ranks),
        "col_ranks": list(b.col_ranks),
        "row_degs": list(b.row_degs),
        "col_degs": list(b.col_degs),
    }


def encode_violation(v: MarginalViolation) -> dict:
    return {"kind": v.kind, "index": v.index, "expected": v.expected, "actual": v.actual}


# ----------------------------------------------------------- weyl elements


def decode_weyl_element(value: Any, path: str = "payload") -> WeylElement:
    line = decode_int_vector(value, path)
    try:
        return WeylElement(line)
    except ValueError as exc:
        raise CodecError(str(exc), path) from exc


def encode_weyl_element(w: WeylElement) -> list:
    return list(w.one_line)


def encode_polygon(p: HNPolygon) -> list:
    return [[x, y] for x, y in p.vertices]
