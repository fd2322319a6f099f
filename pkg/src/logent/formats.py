"""Text formats for partitions, distributions, and matrices.

Partitions: blocks separated by ``|``, element indices comma-separated, e.g.
``0,1|2|3,4``.  The universe size is inferred as max index + 1 unless given.
Parsing and printing round-trip exactly.

Numbers: plain decimals or fractions like ``1/3``.  Fractions always parse
exactly; with ``exact=True`` decimals are also read as exact rationals.
Distributions are comma-separated numbers; joint and distance matrices are
CSV with ``;`` accepted as a row separator for inline input.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .logical import DistanceMatrix, Distribution, JointDistribution
from .partitions import Partition, make_partition


def parse_partition(text: str, n: int | None = None) -> Partition:
    blocks: list[list[int]] = []
    for b, chunk in enumerate(text.strip().split("|")):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty block at position {b} in partition text {text!r}")
        block = []
        for token in chunk.split(","):
            token = token.strip()
            try:
                block.append(int(token))
            except ValueError:
                raise ParseError(
                    f"bad element index {token!r} in block {b} of partition text"
                ) from None
        blocks.append(block)
    elements = [u for b in blocks for u in b]
    if any(u < 0 for u in elements):
        raise ParseError("element indices must be nonnegative")
    size = max(elements) + 1 if n is None else n
    return make_partition(blocks, size)


def format_partition(partition: Partition) -> str:
    return "|".join(",".join(str(u) for u in block) for block in partition.blocks)


def parse_number(token: str, exact: bool = False):
    token = token.strip()
    if not token:
        raise ParseError("empty number token")
    try:
        if "/" in token:
            return Fraction(token)
        if exact:
            return Fraction(token)
        return float(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad number {token!r}") from None


def parse_numbers(text: str, exact: bool = False) -> list:
    values = []
    for i, tok in enumerate(text.strip().split(",")):
        try:
            values.append(parse_number(tok, exact))
        except ParseError as exc:
            raise ParseError(f"{exc} at position {i}") from None
    return values


def parse_distribution(text: str, exact: bool = False) -> Distribution:
    return Distribution(tuple(parse_numbers(text, exact)))


def format_number(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return repr(value)


def format_distribution(dist: Distribution) -> str:
    return ",".join(format_number(p) for p in dist.probs)


def _split_rows(text: str) -> list[str]:
    raw = text.strip()
    rows = raw.splitlines() if "\n" in raw else raw.split(";")
    rows = [r.strip() for r in rows if r.strip()]
    if not rows:
        raise ParseError("no rows in matrix text")
    return rows


def parse_joint(text: str, exact: bool = False) -> JointDistribution:
    return JointDistribution(tuple(tuple(parse_numbers(r, exact)) for r in _split_rows(text)))


def parse_distance_matrix(text: str, exact: bool = False) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(parse_numbers(r, exact)) for r in _split_rows(text)))
