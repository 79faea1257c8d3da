"""JSON algebra files and structured reports.

Rationals are serialized as strings ("3/4", "-2"), never floating point,
so files round-trip bit-exactly.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algcore import Algebra, make_algebra
from .errors import ParseError

__all__ = [
    "AlgebraFile",
    "Report",
    "parse_rational",
    "format_rational",
    "parse_algebra_file",
    "serialize_algebra",
    "atomic_write",
]


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"rational must be a string or integer, got {type(s).__name__}")
    if "." in s or "e" in s.lower():
        raise ParseError(f"decimal notation is not allowed, use p/q: {s!r}")
    try:
        q = Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}: {exc}") from None
    return q


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass
class AlgebraFile:
    """On-disk form of an algebra: name, table, axes, optional generators."""

    name: str
    algebra: Algebra
    generators: Optional[list[tuple[Fraction, ...]]] = None

    @classmethod
    def from_algebra(cls, name: str, algebra: Algebra,
                     generators: Optional[Sequence[Sequence[Fraction]]] = None
                     ) -> "AlgebraFile":
        gens = [tuple(g) for g in generators] if generators is not None else None
        return cls(name=name, algebra=algebra, generators=gens)

    def to_dict(self) -> dict:
        A = self.algebra
        out = {
            "name": self.name,
            "dimension": A.dim,
            "basis": list(A.basis_names),
            "table": [[[format_rational(c) for c in A.structure[i][j]]
                       for j in range(A.dim)] for i in range(A.dim)],
            "axes": [[format_rational(c) for c in a.coords] for a in A.designated_axes],
        }
        if self.generators is not None:
            out["generators"] = [[format_rational(c) for c in g] for g in self.generators]
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "AlgebraFile":
        try:
            name = d["name"]
            dim = d["dimension"]
            basis = d["basis"]
            table = d["table"]
            axes = d.get("axes", [])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"missing field: {exc}") from None
        if not isinstance(dim, int) or dim < 0:
            raise ParseError("dimension must be a nonnegative integer")
        if len(basis) != dim:
            raise ParseError("basis name count != dimension")
        if len(table) != dim or any(len(row) != dim for row in table) \
                or any(len(cell) != dim for row in table for cell in row):
            raise ParseError("table must be a dim x dim grid of dim-vectors")
        structure = [[[parse_rational(c) for c in cell] for cell in row] for row in table]
        axes_q = [[parse_rational(c) for c in a] for a in axes]
        algebra = make_algebra(dim, basis, structure, axes_q)
        gens = None
        if "generators" in d:
            gens = [tuple(parse_rational(c) for c in g) for g in d["generators"]]
            if any(len(g) != dim for g in gens):
                raise ParseError("generator length != dimension")
        return cls(name=name, algebra=algebra, generators=gens)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "AlgebraFile":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON at position {exc.pos}: {exc.msg}") from None
        if not isinstance(d, dict):
            raise ParseError("top-level JSON value must be an object")
        return cls.from_dict(d)


def parse_algebra_file(text: str) -> Algebra:
    """Parse JSON text into a validated algebra."""
    return AlgebraFile.from_json(text).algebra


def serialize_algebra(A: Algebra, name: str = "algebra",
                      generators=None) -> str:
    return AlgebraFile.from_algebra(name, A, generators).to_json()


@dataclass
class Report:
    """Structured result of one CLI command."""

    command: str
    inputs: dict = field(default_factory=dict)
    findings: dict = field(default_factory=dict)
    status: str = "pass"      # pass | fail | error
    message: str = ""

    def to_json(self) -> str:
        return json.dumps({
            "command": self.command,
            "inputs": self.inputs,
            "findings": self.findings,
            "status": self.status,
            "message": self.message,
        }, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(command=d["command"], inputs=d["inputs"], findings=d["findings"],
                   status=d["status"], message=d["message"])


def atomic_write(path: str, text: str) -> None:
    """Write-then-rename so a crash never leaves a partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".axialq-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
