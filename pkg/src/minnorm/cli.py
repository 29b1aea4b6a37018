"""Command-line front end: ``minnorm {project,traces,verify,gen}``.

Tensor files are JSON documents with keys ``order``, ``dim``, ``data``
(flat, row-major) and ``metadata`` (string map).  Floats are written with
17 significant digits so a write/read cycle is exact.

Exit codes: 0 success, 1 verification failure, 2 parse/I-O error,
3 dimension or shape error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .exceptions import DimTooSmall, LengthMismatch, MinNormError, NumericalFailure, ShapeMismatch
from .geometry import gen_cotton_input, random_algebraic_curvature
from .lsq_oracle import verify
from .min_norm3 import norm_formula3, project3
from .min_norm4 import norm_formula4, project4
from .tensor_core import new_tensor, traces3, traces4

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_PARSE, EXIT_DIM = 0, 1, 2, 3
VERIFY_THRESHOLD = 1e-8


class ParseError(MinNormError):
    pass


@dataclass
class TensorFile:
    order: int
    dim: int
    data: np.ndarray
    metadata: dict[str, str] = field(default_factory=dict)

    @property
    def tensor(self) -> np.ndarray:
        return new_tensor(self.order, self.dim, self.data)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _float_list(values) -> str:
    return "[" + ", ".join(_fmt(x) for x in np.ravel(values)) + "]"


def dumps_tensor(tf: TensorFile) -> str:
    data = np.asarray(tf.data, dtype=float).ravel()
    if not np.all(np.isfinite(data)):
        raise ValueError("tensor data must be finite")
    meta = json.dumps({str(k): str(v) for k, v in tf.metadata.items()}, sort_keys=True)
    return (
        "{\n"
        f'  "order": {int(tf.order)},\n'
        f'  "dim": {int(tf.dim)},\n'
        f'  "data": {_float_list(data)},\n'
        f'  "metadata": {meta}\n'
        "}\n"
    )


def loads_tensor(text: str) -> TensorFile:
    """Parse a tensor document; structural problems raise :class:`ParseError`,
    size/dimension problems the tensor_core errors."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    missing = {"order", "dim", "data"} - doc.keys()
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    order, dim, data = doc["order"], doc["dim"], doc["data"]
    if not isinstance(order, int) or not isinstance(dim, int) or isinstance(order, bool):
        raise ParseError("order and dim must be integers")
    if not isinstance(data, list) or not all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in data
    ):
        raise ParseError("data must be a flat list of numbers")
    arr = np.array(data, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ParseError("data contains non-finite values")
    meta = doc.get("metadata") or {}
    if not isinstance(meta, dict):
        raise ParseError("metadata must be an object")
    if order not in (3, 4) or dim < 1:
        raise ShapeMismatch(f"unsupported order/dim: {order}/{dim}")
    if arr.size != dim**order:
        raise LengthMismatch(f"expected {dim**order} values, got {arr.size}")
    return TensorFile(order, dim, arr, {str(k): str(v) for k, v in meta.items()})


def read_tensor_file(path) -> TensorFile:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads_tensor(text)


def write_tensor_file(path, tf: TensorFile) -> None:
    Path(path).write_text(dumps_tensor(tf))


def traces_report(T: np.ndarray) -> dict:
    if T.ndim == 3:
        ts = traces3(T)
        return {"t1": ts.t1.tolist(), "t2": ts.t2.tolist(), "t3": ts.t3.tolist()}
    ts = traces4(T)
    out = {f"m{p}": m.tolist() for p, m in ts.matrices().items()}
    out.update(d1234=ts.d1234, d1324=ts.d1324, d1423=ts.d1423)
    return out


def _finite_or_none(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


# --- commands -------------------------------------------------------------


def cmd_project(args) -> int:
    tf = read_tensor_file(args.inp)
    T = tf.tensor
    if T.ndim == 3:
        F, value = project3(T), norm_formula3(T)
    else:
        F, value = project4(T), norm_formula4(T)
    meta = dict(tf.metadata, projected="true")
    if args.out:
        write_tensor_file(args.out, TensorFile(tf.order, tf.dim, F.ravel(), meta))
    print(_fmt(value))
    return EXIT_OK


def cmd_traces(args) -> int:
    tf = read_tensor_file(args.inp)
    print(json.dumps(traces_report(tf.tensor), indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    tf = read_tensor_file(args.inp)
    report = verify(tf.tensor)
    doc = {k: _finite_or_none(v) for k, v in report.to_dict().items()}
    doc["min_norm"] = report.norm_closed
    doc["threshold"] = VERIFY_THRESHOLD
    doc["passed"] = bool(report.proj_residual <= VERIFY_THRESHOLD)
    text = json.dumps(doc, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK if doc["passed"] else EXIT_VERIFY_FAILED


def cmd_gen(args) -> int:
    n, seed = args.dim, args.seed
    meta = {"kind": args.kind, "seed": str(seed)}
    if args.kind == "curvature":
        T = random_algebraic_curvature(n, seed).tensor
    elif args.kind == "cotton":
        inp = gen_cotton_input(n, seed)
        T = inp.t
        meta["r"] = _float_list(inp.r)
    else:
        order = args.order or 4
        if order not in (3, 4):
            raise ShapeMismatch(f"order must be 3 or 4, got {order}")
        T = np.random.default_rng(seed).standard_normal((n,) * order)
    tf = TensorFile(T.ndim, n, T.ravel(), meta)
    new_tensor(tf.order, n, tf.data)  # rejects dims the closed forms cannot handle
    write_tensor_file(args.out, tf)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minnorm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", help="write the minimal-norm trace-free projection")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("traces", help="print all traces of a tensor")
    p.add_argument("--in", dest="inp", required=True)
    p.set_defaults(func=cmd_traces)

    p = sub.add_parser("verify", help="compare closed form against the least-squares oracle")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a test tensor")
    p.add_argument("--kind", choices=["curvature", "cotton", "random"], required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", type=int, help="tensor order for --kind random (default 4)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        return args.func(args)
    except (DimTooSmall, LengthMismatch, ShapeMismatch) as exc:
        print(f"minnorm: dimension error: {exc}", file=sys.stderr)
        return EXIT_DIM
    except NumericalFailure as exc:
        print(f"minnorm: numerical failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except (ParseError, OSError, ValueError) as exc:
        print(f"minnorm: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
