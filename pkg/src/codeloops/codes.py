"""Binary codewords and doubly even codes over GF(2).

A codeword is a subset of the coordinate positions {1, ..., m}; addition is
symmetric difference.  A code is the span of a list of linearly independent
generators.  Everything downstream (sign tables, loops, representation
search) sits on top of the handful of operations here: weights, meet
weights, spans, coordinate classes, and the doubly even test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_DEGREE = 128


class InvalidCodeError(ValueError):
    """Malformed codeword, code, or code literal."""


class NotDoublyEvenError(InvalidCodeError):
    """Code has a span element of weight not divisible by 4."""

    def __init__(self, witness: "Codeword"):
        self.witness = witness
        super().__init__(
            f"not doubly even (weight {witness.weight})"
        )


class InternalInvariantError(RuntimeError):
    """A structural invariant failed; indicates a defect, not bad input."""


@dataclass(frozen=True)
class Codeword:
    """A subset of {1..degree}, the support of a GF(2) vector."""

    degree: int
    support: frozenset[int]

    def __post_init__(self):
        if not isinstance(self.support, frozenset):
            object.__setattr__(self, "support", frozenset(self.support))
        if not 1 <= self.degree <= MAX_DEGREE:
            raise InvalidCodeError(f"degree {self.degree} out of range 1..{MAX_DEGREE}")
        for i in self.support:
            if not (isinstance(i, int) and 1 <= i <= self.degree):
                raise InvalidCodeError(f"coordinate {i!r} outside 1..{self.degree}")

    @property
    def weight(self) -> int:
        return len(self.support)

    def mask(self) -> int:
        # bit i-1 set iff coordinate i is in the support
        m = 0
        for i in self.support:
            m |= 1 << (i - 1)
        return m

    @classmethod
    def from_mask(cls, degree: int, mask: int) -> "Codeword":
        return cls(degree, frozenset(i + 1 for i in range(degree) if mask >> i & 1))

    def __xor__(self, other: "Codeword") -> "Codeword":
        if self.degree != other.degree:
            raise InvalidCodeError("cannot add codewords of different degree")
        return Codeword(self.degree, self.support ^ other.support)

    def __str__(self) -> str:
        return format_support(self.support)


def meet_weight(words: Iterable[Codeword]) -> int:
    """Size of the common intersection of 2..4 codewords of equal degree."""
    ws = list(words)
    if not 2 <= len(ws) <= 4:
        raise InvalidCodeError(f"meet_weight takes 2..4 words, got {len(ws)}")
    degree = ws[0].degree
    for w in ws[1:]:
        if w.degree != degree:
            raise InvalidCodeError("meet_weight: degree mismatch")
    common = ws[0].support
    for w in ws[1:]:
        common = common & w.support
    return len(common)


def _mask_rank(masks: list[int]) -> int:
    """Rank of a list of GF(2) vectors given as int bitmasks."""
    basis: dict[int, int] = {}  # leading bit -> row
    for m in masks:
        while m:
            lead = m.bit_length() - 1
            if lead not in basis:
                basis[lead] = m
                break
            m ^= basis[lead]
    return len(basis)


class BinaryCode:
    """Span of linearly independent generators inside GF(2)^degree.

    The generator order is part of the object: span order, coordinate class
    order and the representation machinery all key off it.
    """

    def __init__(self, degree: int, generators: Iterable[Codeword]):
        gens = tuple(generators)
        if not 1 <= degree <= MAX_DEGREE:
            raise InvalidCodeError(f"degree {degree} out of range 1..{MAX_DEGREE}")
        for g in gens:
            if g.degree != degree:
                raise InvalidCodeError("generator degree differs from code degree")
        masks = [g.mask() for g in gens]
        if _mask_rank(masks) != len(gens):
            raise InvalidCodeError("generators are linearly dependent")
        self.degree = degree
        self.generators = gens
        self._span: tuple[Codeword, ...] | None = None

    @property
    def dimension(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryCode)
            and self.degree == other.degree
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.generators))

    def __repr__(self) -> str:
        gens = "; ".join(str(g) for g in self.generators)
        return f"BinaryCode(degree={self.degree}, <{gens}>)"

    def span(self) -> tuple[Codeword, ...]:
        """All 2^k codewords; entry i is the sum of generators j with bit j set in i."""
        if self._span is None:
            k = self.dimension
            words = []
            for combo in range(1 << k):
                s: frozenset[int] = frozenset()
                for j in range(k):
                    if combo >> j & 1:
                        s = s ^ self.generators[j].support
                words.append(Codeword(self.degree, s))
            self._span = tuple(words)
        return self._span

    def is_doubly_even(self) -> bool:
        """True iff every span element has weight divisible by 4.

        Equivalent to: every generator weight is divisible by 4 and every
        pairwise generator intersection is even (|u+v| = |u|+|v|-2|u&v|,
        and evenness of intersections is preserved under sums).
        """
        for g in self.generators:
            if g.weight % 4:
                return False
        for i in range(self.dimension):
            for j in range(i + 1, self.dimension):
                if meet_weight([self.generators[i], self.generators[j]]) % 2:
                    return False
        return True

    def first_odd_span_element(self) -> Codeword | None:
        """A span element of weight not divisible by 4, in span order, if any."""
        for w in self.span():
            if w.weight % 4:
                return w
        return None

    def coordinate_classes(self) -> "ClassPartition":
        """Partition the covered coordinates by generator incidence.

        Two coordinates fall in one class iff every generator (equivalently
        every span element) contains both or neither.  Coordinates missed by
        all generators go to the residue.
        """
        buckets: dict[tuple[bool, ...], list[int]] = {}
        for i in range(1, self.degree + 1):
            sig = tuple(i in g.support for g in self.generators)
            buckets.setdefault(sig, []).append(i)
        residue = frozenset(buckets.pop((False,) * self.dimension, []))
        classes = sorted(buckets.values(), key=lambda c: c[0])
        return ClassPartition(
            degree=self.degree,
            classes=tuple(frozenset(c) for c in classes),
            residue=residue,
        )

    def rep_type(self) -> "RepType":
        part = self.coordinate_classes()
        return RepType(tuple(sorted(len(c) for c in part.classes)))

    def weight_enumerator(self) -> tuple[int, ...]:
        """Sorted multiset of the 2^k span weights."""
        return tuple(sorted(w.weight for w in self.span()))


@dataclass(frozen=True)
class ClassPartition:
    """Coordinate classes of a code, ordered by smallest member."""

    degree: int
    classes: tuple[frozenset[int], ...]
    residue: frozenset[int]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


@dataclass(frozen=True)
class RepType:
    """Ascending class sizes of a code; the shape invariant of a representation."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if any(s < 1 for s in self.sizes):
            raise InvalidCodeError("class sizes must be positive")
        if tuple(sorted(self.sizes)) != self.sizes:
            raise InvalidCodeError("type sizes must be ascending")

    @property
    def is_reduced(self) -> bool:
        return all(s < 8 for s in self.sizes)

    def __str__(self) -> str:
        if self.sizes and max(self.sizes) > 9:
            return "(" + ",".join(str(s) for s in self.sizes) + ")"
        return "".join(str(s) for s in self.sizes)


# ---------------------------------------------------------------------------
# code literals
#
# One generator per line: comma-separated coordinates, with "a-b" for an
# inclusive run.  An optional first line "degree=m" pins the degree;
# otherwise the largest coordinate mentioned is used.


def parse_code(text: str) -> BinaryCode:
    degree: int | None = None
    gens: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if degree is None and not gens and line.startswith("degree="):
            value = line[len("degree="):]
            if not value.isdigit():
                raise InvalidCodeError(f"line {lineno}, col 8: bad degree {value!r}")
            degree = int(value)
            continue
        gens.append(_parse_support_line(line, raw, lineno))
    if degree is None:
        if not gens:
            raise InvalidCodeError("empty code literal (no degree, no generators)")
        degree = max(max(g) for g in gens if g)
    if degree < 1 or degree > MAX_DEGREE:
        raise InvalidCodeError(f"degree {degree} out of range 1..{MAX_DEGREE}")
    words = []
    for g in gens:
        if g and max(g) > degree:
            raise InvalidCodeError(
                f"coordinate {max(g)} exceeds declared degree {degree}"
            )
        words.append(Codeword(degree, g))
    return BinaryCode(degree, words)


def _parse_support_line(line: str, raw: str, lineno: int) -> frozenset[int]:
    support: set[int] = set()
    col = raw.index(line) + 1
    for token in line.split(","):
        tok = token.strip()
        loc = f"line {lineno}, col {col}"
        col += len(token) + 1
        if not tok:
            raise InvalidCodeError(f"{loc}: empty entry")
        if "-" in tok:
            lo_s, _, hi_s = tok.partition("-")
            if not (lo_s.strip().isdigit() and hi_s.strip().isdigit()):
                raise InvalidCodeError(f"{loc}: bad range {tok!r}")
            lo, hi = int(lo_s), int(hi_s)
            if lo > hi:
                raise InvalidCodeError(f"{loc}: empty range {tok!r}")
            entries = range(lo, hi + 1)
        elif tok.isdigit():
            entries = [int(tok)]
        else:
            raise InvalidCodeError(f"{loc}: bad coordinate {tok!r}")
        for i in entries:
            if i in support:
                raise InvalidCodeError(f"{loc}: duplicate coordinate {i}")
            support.add(i)
    return frozenset(support)


def format_support(support: Iterable[int]) -> str:
    """Render a support with runs of three or more compressed to a-b."""
    coords = sorted(support)
    if not coords:
        return ""
    parts: list[str] = []
    for lo, hi in _runs(coords):
        if hi - lo >= 2:
            parts.append(f"{lo}-{hi}")
        else:
            parts.extend(str(i) for i in range(lo, hi + 1))
    return ",".join(parts)


def _runs(coords: list[int]) -> Iterator[tuple[int, int]]:
    start = prev = coords[0]
    for i in coords[1:]:
        if i != prev + 1:
            yield start, prev
            start = i
        prev = i
    yield start, prev


def format_code(code: BinaryCode) -> str:
    lines = [f"degree={code.degree}"]
    lines.extend(format_support(g.support) for g in code.generators)
    return "\n".join(lines) + "\n"
