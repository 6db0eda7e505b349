"""Text forms for the CLI and for round-tripping expansions.

Compositions and partitions print as comma-separated parts ("1,2,1,3,2",
empty "0"), set partitions as blocks joined by slashes with digit runs for
entries up to 9 ("12/3") and comma-separated entries above that ("1/2,4/3"),
permutations in one-line notation ("321", comma-separated past 9), diagrams
as outer/inner ("5,5,4,4,2/4,3,3,1", straight shapes may drop the slash),
and expansions as signed lists of coeff*h[key] terms.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .compositions import Composition, Partition
from .diagrams import SkewDiagram
from .ncsym import NCExpansion
from .permutations import Permutation
from .setpartitions import SetPartition
from .sym import SymExpansion


class ParseError(Exception):
    """Malformed input text; the message names the offending token."""


def _parse_int(token: str) -> int:
    token = token.strip()
    if not re.fullmatch(r"\d+", token):
        raise ParseError(f"not a number: {token!r}")
    return int(token)


# ---------------------------------------------------------------------------
# compositions and partitions


def format_composition(alpha: Composition) -> str:
    return ",".join(str(p) for p in alpha.parts) if alpha.parts else "0"


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if text == "0":
        return Composition(())
    if not text:
        raise ParseError("empty composition")
    try:
        return Composition(tuple(_parse_int(t) for t in text.split(",")))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_partition(key: Partition) -> str:
    return ",".join(str(p) for p in key.parts) if key.parts else "0"


def parse_partition(text: str) -> Partition:
    try:
        return Partition(parse_composition(text).parts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_parenthesized(parts: tuple[int, ...]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


# ---------------------------------------------------------------------------
# set partitions


def format_set_partition(pi: SetPartition) -> str:
    if not pi.blocks:
        return "0"
    if pi.size <= 9:
        return "/".join("".join(str(e) for e in block) for block in pi.blocks)
    return "/".join(",".join(str(e) for e in block) for block in pi.blocks)


def parse_set_partition(text: str) -> SetPartition:
    text = text.strip()
    if text == "0":
        return SetPartition(())
    if not text:
        raise ParseError("empty set partition")
    blocks = []
    for chunk in text.split("/"):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty block in set partition: {text!r}")
        if "," in chunk:
            blocks.append(tuple(_parse_int(t) for t in chunk.split(",")))
        else:
            if not chunk.isdigit():
                raise ParseError(f"not a block: {chunk!r}")
            blocks.append(tuple(int(ch) for ch in chunk))
    try:
        return SetPartition(tuple(blocks))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# permutations


def format_permutation(delta: Permutation) -> str:
    if delta.size == 0:
        return "id"
    if delta.size <= 9:
        return "".join(str(v) for v in delta.images)
    return ",".join(str(v) for v in delta.images)


def parse_permutation(text: str, size: int | None = None) -> Permutation:
    text = text.strip()
    if text == "id":
        if size is None:
            raise ParseError("'id' needs a size from context")
        return Permutation.identity(size)
    try:
        if "," in text:
            return Permutation(tuple(_parse_int(t) for t in text.split(",")))
        if not text.isdigit():
            raise ParseError(f"not a permutation: {text!r}")
        return Permutation(tuple(int(ch) for ch in text))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# diagrams


def format_diagram(d: SkewDiagram) -> str:
    outer = format_partition(d.outer)
    if not d.inner.parts:
        return outer
    return f"{outer}/{format_partition(d.inner)}"


def parse_diagram(text: str) -> SkewDiagram:
    text = text.strip()
    if not text:
        raise ParseError("empty diagram")
    if text.count("/") > 1:
        raise ParseError(f"not a diagram: {text!r}")
    outer_text, _, inner_text = text.partition("/")
    outer = parse_partition(outer_text)
    inner = parse_partition(inner_text) if inner_text.strip() else Partition(())
    return SkewDiagram(outer, inner)


# ---------------------------------------------------------------------------
# rationals and expansions


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"-?\d+(/\d+)?", text):
        raise ParseError(f"not a rational: {text!r}")
    return Fraction(text)


def _format_terms(pairs, format_key) -> str:
    if not pairs:
        return "0"
    chunks = []
    for index, (key, coeff) in enumerate(pairs):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        body = f"h[{format_key(key)}]"
        if magnitude != 1:
            body = f"{magnitude}*{body}"
        if index == 0:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f" - {body}" if negative else f" + {body}")
    return "".join(chunks)


def format_sym_expansion(e: SymExpansion) -> str:
    return _format_terms(e.items(), lambda key: ",".join(str(p) for p in key.parts))


def format_nc_expansion(e: NCExpansion) -> str:
    return _format_terms(e.items(), format_set_partition)


def machine_lines(e: SymExpansion | NCExpansion) -> list[str]:
    """One term per line as coeff<TAB>key."""
    if isinstance(e, SymExpansion):
        return [f"{coeff}\t{format_partition(key)}" for key, coeff in e.items()]
    return [f"{coeff}\t{format_set_partition(key)}" for key, coeff in e.items()]


def _split_signed_terms(text: str) -> list[tuple[int, str]]:
    pieces = re.split(r"([+-])", text)
    out = []
    sign = 1
    expect_term = True
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            continue
        if piece in "+-":
            if not expect_term or piece == "-":
                sign = -1 if piece == "-" else 1
            expect_term = True
            continue
        out.append((sign, piece))
        sign = 1
        expect_term = False
    if expect_term and out:
        raise ParseError(f"dangling sign in expansion: {text!r}")
    return out


def _parse_term(term: str, parse_key):
    if "*" in term:
        coeff_text, _, key_text = term.partition("*")
        coeff = parse_rational(coeff_text)
    else:
        coeff, key_text = Fraction(1), term
    key_text = key_text.strip()
    match = re.fullmatch(r"h\[(.*)\]", key_text)
    if not match:
        raise ParseError(f"not an h term: {term!r}")
    return parse_key(match.group(1)), coeff


def parse_sym_expansion(text: str) -> SymExpansion:
    text = text.strip()
    if text == "0":
        return SymExpansion()
    pairs = []
    for sign, term in _split_signed_terms(text):
        key, coeff = _parse_term(term, lambda t: parse_partition(t) if t else Partition(()))
        pairs.append((key, sign * coeff))
    return SymExpansion(pairs)


def parse_nc_expansion(text: str) -> NCExpansion:
    text = text.strip()
    if text == "0":
        return NCExpansion()
    pairs = []
    for sign, term in _split_signed_terms(text):
        key, coeff = _parse_term(term, lambda t: parse_set_partition(t) if t else SetPartition(()))
        pairs.append((key, sign * coeff))
    return NCExpansion(pairs)
