"""JSON and CSV serialisation.

Floats are always written with 17 significant digits, so a write/read cycle
is bit-exact and identical inputs give byte-identical output. Non-finite
floats become ``null``.
"""

from __future__ import annotations

import csv
import json
import math
import sys
from typing import IO, Iterable

import numpy as np

from . import errors
from .surface import BartnikData, RadialProfile

__all__ = [
    "FORMAT_TYPE",
    "PARAMETERIZATION",
    "format_float",
    "dumps",
    "data_to_dict",
    "data_from_dict",
    "write_data",
    "read_data",
    "write_csv",
]

FORMAT_TYPE = "bartnik_data"
PARAMETERIZATION = "revolution"


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        return "null"
    s = format(x, ".17g")
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def _encode(obj, indent, level, out):
    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    end = "" if indent is None else "\n" + " " * (indent * level)
    if isinstance(obj, (bool, np.bool_)) or obj is None:
        out.append(json.dumps(None if obj is None else bool(obj)))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(pad + json.dumps(str(k)) + ": ")
            _encode(v, indent, level + 1, out)
        out.append(end + "}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        items = obj.tolist() if isinstance(obj, np.ndarray) else obj
        # numeric arrays stay on one line
        out.append("[")
        for i, v in enumerate(items):
            if i:
                out.append(", ")
            _encode(v, None, level + 1, out)
        out.append("]")
    else:
        raise TypeError("cannot serialise %r" % type(obj).__name__)


def dumps(obj, indent=None) -> str:
    """JSON text with every float at 17 significant digits."""
    out = []
    _encode(obj, indent, 0, out)
    return "".join(out)


def data_to_dict(data: BartnikData) -> dict:
    p = data.profile
    return {
        "type": FORMAT_TYPE,
        "parameterization": PARAMETERIZATION,
        "label": data.label,
        "provenance": data.provenance,
        "t": p.t_grid,
        "alpha": p.alpha,
        "beta": p.beta,
        "H": p.H,
    }


def data_from_dict(doc) -> BartnikData:
    if not isinstance(doc, dict):
        raise errors.InvalidProfile("expected a JSON object")
    if doc.get("type", FORMAT_TYPE) != FORMAT_TYPE:
        raise errors.InvalidProfile("unsupported type %r" % doc.get("type"))
    if doc.get("parameterization", PARAMETERIZATION) != PARAMETERIZATION:
        raise errors.InvalidProfile("unsupported parameterization %r" % doc.get("parameterization"))
    try:
        cols = [np.asarray(doc[k], dtype=float) for k in ("t", "alpha", "beta", "H")]
    except KeyError as exc:
        raise errors.InvalidProfile("missing field %s" % exc) from None
    except (TypeError, ValueError):
        raise errors.InvalidProfile("profile fields must be numeric arrays (null is not allowed)") from None
    return BartnikData(RadialProfile(*cols), str(doc.get("label", "")),
                       str(doc.get("provenance", "file")))


def write_data(data: BartnikData, stream: IO[str]) -> None:
    stream.write(dumps(data_to_dict(data), indent=1))
    stream.write("\n")


def read_data(path: str) -> BartnikData:
    """Read Bartnik data from a JSON file; ``-`` means standard input."""
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
    except OSError as exc:
        raise errors.InvalidProfile("cannot read %s: %s" % (path, exc.strerror)) from None
    except json.JSONDecodeError as exc:
        raise errors.InvalidProfile("%s is not valid JSON: %s" % (path, exc)) from None
    return data_from_dict(doc)


def write_csv(rows: Iterable, stream: IO[str]) -> None:
    """CSV with floats at 17 significant digits; the first row is the header."""
    writer = csv.writer(stream, lineterminator="\n")
    for row in rows:
        writer.writerow([format_float(v) if isinstance(v, (float, np.floating)) else v
                         for v in row])
