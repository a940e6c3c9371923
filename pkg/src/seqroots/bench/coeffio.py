"""Flat-file formats: coefficient files, result documents, trace CSV."""

from __future__ import annotations

import csv
import io
import json
import math
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import ParameterError
from ..metrics import summarize
from ..poly import Polynomial
from ..solver import SolveResult, Trace

LOG10_ZERO = -400.0
BUILTIN_PREFIX = "builtin:"


class CoeffFileError(ParameterError):
    def __init__(self, msg, lineno=None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno is not None else msg)


def parse_points(text: str) -> list[complex]:
    """Parse ``re im`` lines; ``#`` lines and blank lines are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise CoeffFileError(f"expected 're im', got {s!r}", lineno)
        try:
            re, im = float(parts[0]), float(parts[1])
        except ValueError:
            raise CoeffFileError(f"not a decimal pair: {s!r}", lineno) from None
        if not (math.isfinite(re) and math.isfinite(im)):
            raise CoeffFileError(f"non-finite value: {s!r}", lineno)
        out.append(complex(re, im))
    if not out:
        raise CoeffFileError("no coefficients found")
    return out


def parse_coeff_file(text: str) -> Polynomial:
    """Monic polynomial from file text, constant term ``a_0`` on the first line."""
    return Polynomial(parse_points(text))


def format_points(values: Iterable[complex], header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [f"{z.real:.17g} {z.imag:.17g}" for z in map(complex, values)]
    return "\n".join(lines) + "\n"


def format_coeff_file(p: Polynomial, header: Sequence[str] = ()) -> str:
    return format_points(p.coeffs, header)


def read_text(path: str | Path) -> str:
    """Read a file, or a bundled data file named ``builtin:<stem>``."""
    path = str(path)
    if path.startswith(BUILTIN_PREFIX):
        name = path[len(BUILTIN_PREFIX):]
        res = resources.files("seqroots.data").joinpath(f"{name}.txt")
        if not res.is_file():
            raise ParameterError(f"no bundled coefficient file {name!r}")
        return res.read_text()
    return Path(path).read_text()


def load_coeffs(path: str | Path) -> Polynomial:
    return parse_coeff_file(read_text(path))


def _num(x: float):
    return x if math.isfinite(x) else None


def result_document(p: Polynomial, result: SolveResult, *, init: str, mode: str,
                    tol: float, steps: int, max_rounds: int) -> dict:
    """Everything needed to diff two runs; contains no timestamps."""
    rep = summarize(p, result.roots)
    return {
        "method": result.method,
        "degree": p.degree,
        "init": init,
        "mode": mode,
        "tol": tol,
        "N": steps,
        "J": max_rounds,
        "J_used": result.rounds_used,
        "K": result.total_steps,
        "converged": result.converged,
        "roots": [
            {"re": z.real, "im": z.imag, "residual": r}
            for z, r in zip(result.roots, result.residuals)
        ],
        "residual_min": rep.min,
        "residual_max": rep.max,
        "residual_mean": rep.mean,
        "global_sum_measure": rep.global_sum_measure,
        "global_product_measure": _num(rep.global_product_measure),
        "product_overflow": rep.product_overflow,
    }


def dump_json(doc, path=None) -> str:
    text = json.dumps(doc, indent=2, allow_nan=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def export_trace(trace: Trace, path) -> None:
    """Write one CSV row per iteration step, in execution order."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["round", "root_index", "step", "residual", "log10_residual"])
    for e in trace:
        lg = math.log10(e.residual) if e.residual > 0 else LOG10_ZERO
        w.writerow([e.round, e.root_index, e.step, repr(e.residual), repr(lg)])
    Path(path).write_text(buf.getvalue())


def read_trace(path) -> list[dict]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [
        {
            "round": int(r["round"]),
            "root_index": int(r["root_index"]),
            "step": int(r["step"]),
            "residual": float(r["residual"]),
            "log10_residual": float(r["log10_residual"]),
        }
        for r in rows
    ]


def write_table(rows: list[dict], path=None) -> str:
    """CSV table with the union of row keys as header, first-seen order."""
    fields = []
    for r in rows:
        for k in r:
            if k not in fields:
                fields.append(k)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if r.get(k) is None else r.get(k)) for k in fields})
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text)
    return text
