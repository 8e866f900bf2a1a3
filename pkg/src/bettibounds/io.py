"""File formats: ideal JSON, Betti table JSON, and polynomial text."""

from __future__ import annotations

import json
import re
from pathlib import Path

from .betti import BettiTable
from .errors import ParseError
from .groebner import Polynomial
from .monomial import MonomialIdeal, minimalize


def ideal_to_dict(ideal: MonomialIdeal) -> dict:
    return {"n": ideal.n, "generators": [list(g) for g in ideal.generators]}


def ideal_from_dict(data) -> MonomialIdeal:
    if not isinstance(data, dict) or "n" not in data or "generators" not in data:
        raise ParseError('ideal document must be {"n": ..., "generators": [...]}')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"n must be a nonnegative integer, got {n!r}")
    rows = data["generators"]
    if not isinstance(rows, list):
        raise ParseError("generators must be a list")
    for idx, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"generator {idx} must be a list of {n} exponents, got {row!r}")
        for e in row:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ParseError(f"generator {idx}: exponent {e!r} is not an integer")
            if e < 0:
                raise ParseError(f"generator {idx}: negative exponent {e}")
    return minimalize(rows, n=n)


def dumps_ideal(ideal: MonomialIdeal) -> str:
    return json.dumps(ideal_to_dict(ideal))


def loads_ideal(text: str) -> MonomialIdeal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return ideal_from_dict(data)


def read_ideal(path) -> MonomialIdeal:
    return loads_ideal(Path(path).read_text())


def write_ideal(ideal: MonomialIdeal, path) -> None:
    Path(path).write_text(dumps_ideal(ideal) + "\n")


def dumps_table(table: BettiTable) -> str:
    return json.dumps(table.to_dict())


def loads_table(text: str) -> BettiTable:
    try:
        data = json.loads(text)
        return BettiTable.from_dict(data)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"invalid Betti table document: {exc}") from None


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, n: int, q: int) -> Polynomial:
    """Parse e.g. ``3*x1^2*x2 - x3^3``; coefficients are reduced mod q."""
    src = text.strip()
    if not src:
        raise ParseError("empty polynomial")
    terms = {}
    pos = 0
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {src!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(1) is None and pos > 0:
            raise ParseError(f"missing operator in {src!r} at offset {pos}")
        coeff, exps = sign, [0] * n
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ParseError(f"empty factor in {src!r} at offset {m.start(2)}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ParseError(f"bad factor {factor!r} in {src!r} at offset {m.start(2)}")
            var = int(fm.group(1))
            if not 1 <= var <= n:
                raise ParseError(f"variable x{var} outside x1..x{n}")
            exps[var - 1] += int(fm.group(2) or 1)
        key = tuple(exps)
        terms[key] = (terms.get(key, 0) + coeff) % q
        pos = m.end()
    return Polynomial(n, q, terms)


def parse_polynomial_lines(text: str, n: int, q: int) -> list:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_polynomial(line, n, q))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return out
