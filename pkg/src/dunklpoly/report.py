"""Uniform machine-readable result records for every verification.

Each check run anywhere in the package reduces to one flat
``VerificationRecord``: which suite produced it, which family/operator it
targeted, the full parameter tuple (exact rationals as ``p/q`` strings, for
reproducibility), the degree range covered, the outcome, a residual summary,
the tolerance used, and the wall time.  ``emit`` serializes a record list to
JSON (an array of flat objects) or CSV (header plus one row per record) with
the stable field names ``suite, target, params, degrees, outcome, residual,
tolerance, millis``; ``parse`` inverts it field-for-field.

Outcome vocabulary and the invariants enforced at construction:

* ``exact_pass``  -- a rational-arithmetic identity held literally; the
  residual is the string ``"0"`` and the tolerance is ``"exact"``.
* ``float_pass``  -- a floating-point residual was at or below the stated
  tolerance (both serialized losslessly via ``repr``).
* ``fail``        -- anything else; residual and tolerance record what was
  measured against what.

Rationals are serialized as canonical ``p/q`` strings, never floats, so the
audit trail of exact suites is lossless.  Collection is append-only behind a
single writer (the caller); ``emit``/``parse`` themselves are pure.
"""

from __future__ import annotations

import csv
import io
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

OUTCOMES = ("exact_pass", "float_pass", "fail")

FIELD_NAMES = ("suite", "target", "params", "degrees", "outcome",
               "residual", "tolerance", "millis")


def rational_str(value: Union[Fraction, int]) -> str:
    """Canonical lossless ``p/q`` form (plain ``p`` for integers)."""
    return str(Fraction(value))


def format_params(pairs: Sequence[Tuple[str, Union[Fraction, int]]]) -> str:
    """``name=p/q`` pairs joined by commas; the canonical params field."""
    return ",".join(f"{name}={rational_str(value)}" for name, value in pairs)


@dataclass(frozen=True)
class VerificationRecord:
    """One verification outcome, flat and serializable."""

    suite: str
    target: str
    params: str
    degrees: str
    outcome: str
    residual: str
    tolerance: str
    millis: float

    def __post_init__(self) -> None:
        if self.outcome not in OUTCOMES:
            raise ValueError(f"unknown outcome {self.outcome!r}")
        if self.millis < 0:
            raise ValueError("wall time must be nonnegative")
        if self.outcome == "exact_pass":
            if self.residual != "0":
                raise ValueError("exact_pass requires a literal zero residual")
            if self.tolerance != "exact":
                raise ValueError('exact_pass requires tolerance "exact"')
        if self.outcome == "float_pass":
            if float(self.residual) > float(self.tolerance):
                raise ValueError("float_pass requires residual <= tolerance")


def exact_record(suite: str, target: str, params: str, degrees: str,
                 millis: float = 0.0, passed: bool = True,
                 residual: str = "0") -> VerificationRecord:
    """Record of an exact rational check (outcome fail if ``passed`` False)."""
    if passed:
        return VerificationRecord(suite, target, params, degrees,
                                  "exact_pass", "0", "exact", millis)
    return VerificationRecord(suite, target, params, degrees,
                              "fail", residual, "exact", millis)


def float_record(suite: str, target: str, params: str, degrees: str,
                 residual: float, tolerance: float,
                 millis: float = 0.0) -> VerificationRecord:
    """Record of a float check; outcome follows residual vs tolerance."""
    outcome = "float_pass" if residual <= tolerance else "fail"
    return VerificationRecord(suite, target, params, degrees, outcome,
                              repr(float(residual)), repr(float(tolerance)),
                              millis)


@contextmanager
def stopwatch() -> Iterator[List[float]]:
    """Context manager yielding a one-slot list that receives the millis."""
    box = [0.0]
    start = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = (time.perf_counter() - start) * 1e3


def _as_row(record: VerificationRecord) -> dict:
    return {name: getattr(record, name) for name in FIELD_NAMES}


def emit(records: Iterable[VerificationRecord], format: str = "json") -> bytes:
    """Serialize records to a JSON or CSV byte stream with stable fields."""
    records = list(records)
    if format == "json":
        return json.dumps([_as_row(r) for r in records], indent=2).encode()
    if format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FIELD_NAMES, lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow(_as_row(record))
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {format!r}")


def parse(blob: Union[bytes, str], format: str = "json") -> List[VerificationRecord]:
    """Inverse of ``emit``; reproduces the record list field-for-field."""
    text = blob.decode() if isinstance(blob, bytes) else blob
    if format == "json":
        rows = json.loads(text)
    elif format == "csv":
        rows = list(csv.DictReader(io.StringIO(text)))
    else:
        raise ValueError(f"unknown format {format!r}")
    out = []
    for row in rows:
        kwargs = {name: row[name] for name in FIELD_NAMES}
        kwargs["millis"] = float(kwargs["millis"])
        out.append(VerificationRecord(**kwargs))
    return out


def worst_outcome(records: Iterable[VerificationRecord]) -> str:
    """``fail`` if any record failed, else the weakest pass seen."""
    ranking = {"exact_pass": 0, "float_pass": 1, "fail": 2}
    worst = "exact_pass"
    for record in records:
        if ranking[record.outcome] > ranking[worst]:
            worst = record.outcome
    return worst


assert tuple(f.name for f in fields(VerificationRecord)) == FIELD_NAMES
