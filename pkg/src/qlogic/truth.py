"""
Truth values shared by every semantics.

``Bit`` and ``Scalar`` carry numbers; ``UNDEFINED`` (a partial valuation gave
no value) and ``NULL`` (no value exists at all) are distinct singletons that
never stand in for each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from qlogic.linalg import DEFAULT_TOL


@dataclass(frozen=True)
class Bit:
    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError(f"Bit must be 0 or 1, got {self.value!r}")
        object.__setattr__(self, "value", int(self.value))

    def __float__(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class Scalar:
    """A truth degree strictly between 0 and 1; the endpoints construct a :class:`Bit`."""

    value: float

    def __new__(cls, value: float):
        if value == 0 or value == 1:
            return Bit(int(value))
        return super().__new__(cls)

    def __post_init__(self):
        if not (math.isfinite(self.value) and 0.0 < self.value < 1.0):
            raise ValueError(f"Scalar must lie in [0, 1], got {self.value!r}")
        object.__setattr__(self, "value", float(self.value))

    def __float__(self) -> float:
        return self.value


class _Marker:
    __slots__ = ("_name",)

    def __init__(self, name: str) -> None:
        self._name = name

    def __repr__(self) -> str:
        return self._name

    def __reduce__(self):
        return self._name


UNDEFINED = _Marker("UNDEFINED")
NULL = _Marker("NULL")

TruthValue = Union[Bit, Scalar, _Marker]
Assignment = Mapping[str, TruthValue]

TRUE, FALSE = Bit(1), Bit(0)
HALF = Scalar(0.5)


def is_number(v: TruthValue) -> bool:
    return isinstance(v, (Bit, Scalar))


def from_real(r: float, tol: float = DEFAULT_TOL) -> TruthValue:
    """Clamp ``r`` into [0, 1] and snap values within ``tol`` of an endpoint to a Bit."""
    if r < tol:
        return FALSE
    if r > 1.0 - tol:
        return TRUE
    return Scalar(r)


def coerce(v) -> TruthValue:
    """Accept a TruthValue, a bool, or a number in [0, 1] (as used in assignments)."""
    if isinstance(v, (Bit, Scalar)) or v is UNDEFINED or v is NULL:
        return v
    if isinstance(v, bool):
        return Bit(int(v))
    if isinstance(v, (int, float, Fraction)):
        if v == 0 or v == 1:
            return Bit(int(v))
        return Scalar(float(v))
    raise TypeError(f"cannot interpret {v!r} as a truth value")


def format_value(v: TruthValue) -> str:
    """Text form: ``1``, ``0``, a 12-significant-digit decimal, ``undefined`` or ``null``."""
    if isinstance(v, Bit):
        return str(v.value)
    if isinstance(v, Scalar):
        return format(v.value, ".12g")
    return "undefined" if v is UNDEFINED else "null"


def parse_value(text: str) -> TruthValue:
    """Inverse of the assignment surface syntax: ``0``, ``1``, ``0.5``/``1/2``, ``u``."""
    t = text.strip().lower()
    if t in ("u", "undefined"):
        return UNDEFINED
    if t == "null":
        return NULL
    try:
        r = Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a truth value: {text!r}") from None
    if not 0 <= r <= 1:
        raise ValueError(f"truth value out of range: {text!r}")
    return coerce(r)


def to_json(v: TruthValue) -> dict:
    if isinstance(v, Bit):
        return {"tag": "bit", "value": v.value}
    if isinstance(v, Scalar):
        return {"tag": "scalar", "value": v.value}
    return {"tag": "undefined"} if v is UNDEFINED else {"tag": "null"}


def from_json(d: Mapping) -> TruthValue:
    tag = d.get("tag")
    if tag == "bit":
        return Bit(int(d["value"]))
    if tag == "scalar":
        return Scalar(float(d["value"]))
    if tag == "undefined":
        return UNDEFINED
    if tag == "null":
        return NULL
    raise ValueError(f"unknown truth value tag {tag!r}")


def parse_assignment(text: str) -> dict[str, TruthValue]:
    """Parse ``H=1,T=0.5,R=u`` into a mapping."""
    out: dict[str, TruthValue] = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        name, sep, val = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise ValueError(f"expected name=value, got {item!r}")
        if name in out:
            raise ValueError(f"atom {name!r} assigned twice")
        out[name] = parse_value(val)
    return out
