"""
Text format for monomial ideals.

    # comment
    n = 3
    [2,0,1]
    x1^2*x3
    x2

The header must come before any monomial. Each monomial line is either an
exponent vector or a product of variables x1..xn with optional ``^`` powers.
"""
import logging
import re
from pathlib import Path
from typing import Union

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from regdim.algebra.monomials import ExponentVector, MonomialIdeal, minimalize, monomial_string
from regdim.exceptions import IdealParseError, InputError

logger = logging.getLogger("regdim_ideal_format")

HEADER_PATTERN = re.compile(r"^n\s*=\s*(\d+)$")
VECTOR_PATTERN = re.compile(r"^\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]$")
SYMBOLIC_PATTERN = re.compile(r"^(?:1|x\d+(?:\s*\^\s*\d+)?(?:\s*\*\s*x\d+(?:\s*\^\s*\d+)?)*)$")
VARIABLE_PATTERN = re.compile(r"x(\d+)")

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _parse_vector(body: str, n: int, line: int) -> ExponentVector:
    entries = [int(e) for e in body.strip("[] ").split(",")] if body.strip("[] ") else []
    if len(entries) != n:
        raise IdealParseError(line, f"exponent vector has {len(entries)} entries, expected {n}")
    if any(e < 0 for e in entries):
        raise IdealParseError(line, "exponents must be nonnegative")
    return tuple(entries)


def _parse_symbolic(body: str, n: int, line: int) -> ExponentVector:
    indices = [int(k) for k in VARIABLE_PATTERN.findall(body)]
    outside = [k for k in indices if not 1 <= k <= n]
    if outside:
        raise IdealParseError(line, f"variable x{outside[0]} outside x1..x{n}")
    symbols = sympy.symbols(f"x1:{n + 1}")
    names = {str(s): s for s in symbols}
    expr = parse_expr(body, local_dict=names, transformations=_TRANSFORMATIONS)
    poly = sympy.Poly(expr, *symbols)
    if not poly.is_monomial or poly.LC() != 1:
        raise IdealParseError(line, f"'{body}' is not a monomial")
    return tuple(int(e) for e in poly.monoms()[0])


def parse_ideal_text(text: str) -> MonomialIdeal:
    """
    Parse an ideal from text.

    Returns:
        Minimalized MonomialIdeal

    Raises:
        IdealParseError: with the 1-based line of the first problem
    """
    n = None
    raw = []
    last_line = 0
    for number, line in enumerate(text.splitlines(), start=1):
        last_line = number
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        header = HEADER_PATTERN.match(body)
        if header:
            if n is not None:
                raise IdealParseError(number, "variable count declared twice")
            n = int(header.group(1))
            if n < 1:
                raise IdealParseError(number, "variable count must be at least 1")
            continue
        if n is None:
            raise IdealParseError(number, "monomial before the 'n = <count>' header")
        if VECTOR_PATTERN.match(body):
            raw.append(_parse_vector(body, n, number))
        elif SYMBOLIC_PATTERN.match(body):
            raw.append(_parse_symbolic(body, n, number))
        else:
            raise IdealParseError(number, f"cannot parse '{body}'")
    if n is None:
        raise IdealParseError(max(last_line, 1), "missing 'n = <count>' header")
    return minimalize(raw, n)


def parse_ideal_file(path: Union[str, Path]) -> MonomialIdeal:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read ideal file {path}: {e}") from e
    logger.debug(f"Parsing ideal file {path}")
    return parse_ideal_text(text)


def format_ideal(ideal: MonomialIdeal, comment: str = "") -> str:
    """Inverse of :func:`parse_ideal_text` up to minimalization, symbolic form."""
    lines = [f"# {comment}"] if comment else []
    lines.append(f"n = {ideal.n}")
    lines.extend(monomial_string(g) for g in ideal.gens)
    return "\n".join(lines) + "\n"
