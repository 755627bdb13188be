"""
Plain-text line formats shared by the CLI and the MCP server.

  word         single line of space-separated letters
  complex      one facet per line; blank lines and lines starting with '#' ignored
  points       first line "dim d", then one point per line ("num/den" or integers)
  parts        like points, with a line "--" between consecutive parts
  partition    lines "label: i1 i2 ..."
  certificate  "alphabet | d | positions"
"""

import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from complexes import SimplicialComplex, from_facets
from geometry import AffineFlat, Point, PointSequence
from tverberg import Partition, TverbergWitness
from words import ColorfulCertificate, Word

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class FormatError(ValueError):
    pass


def _lines(text: str) -> List[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse_ints(text: str) -> Tuple[int, ...]:
    try:
        values = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise FormatError(f"expected space-separated integers, got {text.strip()!r}")
    if any(v < 0 for v in values):
        raise FormatError(f"letters must be non-negative, got {text.strip()!r}")
    return values


# ---- Words and complexes ----

def parse_word(text: str) -> Word:
    lines = _lines(text)
    if len(lines) > 1:
        raise FormatError("a word is a single line")
    return parse_ints(lines[0]) if lines else ()


def format_word(W: Sequence[int]) -> str:
    return " ".join(str(x) for x in W)


def parse_complex(text: str) -> SimplicialComplex:
    return from_facets(parse_ints(line) for line in _lines(text))


def format_complex(K: SimplicialComplex) -> str:
    return "\n".join(format_word(f) for f in K.facets if f)


def format_certificate(cert: ColorfulCertificate) -> str:
    return f"{format_word(cert.alphabet)} | {cert.d} | {format_word(cert.positions)}"


def parse_certificate(text: str) -> ColorfulCertificate:
    fields = text.strip().split("|")
    if len(fields) != 3:
        raise FormatError("certificate must read 'alphabet | d | positions'")
    alpha, d, positions = fields
    return ColorfulCertificate(
        alphabet=parse_ints(alpha), d=int(d.strip()), positions=parse_ints(positions)
    )


# ---- Points ----

def parse_rational(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise FormatError(f"not an exact rational: {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise FormatError(f"zero denominator in {token!r}")


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_point(p: Point) -> str:
    return " ".join(format_rational(c) for c in p)


def _parse_dim(line: str) -> int:
    fields = line.split()
    if len(fields) != 2 or fields[0] != "dim" or not fields[1].isdigit():
        raise FormatError(f"expected 'dim d' header, got {line!r}")
    return int(fields[1])


def _parse_point(line: str, dim: int) -> Point:
    coords = tuple(parse_rational(tok) for tok in line.split())
    if len(coords) != dim:
        raise FormatError(f"point {line!r} does not have {dim} coordinates")
    return coords


def parse_points(text: str) -> PointSequence:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty point file")
    dim = _parse_dim(lines[0])
    return PointSequence(points=[_parse_point(line, dim) for line in lines[1:]], dim=dim)


def format_points(P: PointSequence) -> str:
    return "\n".join([f"dim {P.dim}"] + [format_point(p) for p in P.points])


def parse_parts(text: str) -> List[List[Point]]:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty parts file")
    dim = _parse_dim(lines[0])
    parts: List[List[Point]] = [[]]
    for line in lines[1:]:
        if line == "--":
            parts.append([])
        else:
            parts[-1].append(_parse_point(line, dim))
    if any(not part for part in parts):
        raise FormatError("every part needs at least one point")
    return parts


def format_flat(flat: AffineFlat) -> str:
    if flat.is_empty:
        return "empty"
    lines = [f"dim {flat.dim}", f"base: {format_point(flat.basepoint)}"]
    lines.extend(f"direction: {format_point(v)}" for v in flat.directions)
    return "\n".join(lines)


# ---- Partitions ----

def parse_partition(text: str) -> Partition:
    parts = []
    for line in _lines(text):
        label, sep, rest = line.partition(":")
        if not sep or not label.strip().isdigit():
            raise FormatError(f"expected 'label: indices', got {line!r}")
        parts.append((int(label), parse_ints(rest)))
    return Partition(parts=parts)


def format_partition(parts: Partition) -> str:
    return "\n".join(f"{label}: {format_word(indices)}" for label, indices in parts.parts)


def format_witness(witness: TverbergWitness) -> str:
    return f"{format_partition(witness.partition)}\nwitness: {format_point(witness.point)}"
