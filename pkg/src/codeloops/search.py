"""Reduced representations of the catalog loops by constrained search.

A representation of a loop class is a doubly even code whose loop
classifies to that class.  Fixing a basis pins the full vector t of
intersection cardinalities (singles, pairs, triples, and at rank 4 the
quadruple); the characteristic vector constrains every t entry to a residue
class, and the coordinate-class sizes x solve a triangular linear system in
t.  A representation is reduced when every class has fewer than 8
coordinates, so the whole reduced space is a finite box: enumeration walks
the admissible t vectors in lexicographic order, solves for x, and lays the
classes out as consecutive intervals.

Minimality searches the same box with branch and bound: partial class-size
sums bound the degree from below, so a subtree is cut as soon as the
partial sum reaches the incumbent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .codes import BinaryCode, Codeword, InternalInvariantError, InvalidCodeError, RepType, meet_weight
from .loops import CharVector, LoopClass, build_loop, canonical_catalog, classify

MAX_DEGREE_RANK3 = 49   # 7 classes of at most 7 coordinates
MAX_DEGREE_RANK4 = 105  # 15 classes of at most 7 coordinates


@dataclass(frozen=True)
class ParamVector3:
    """Intersection cardinalities of a rank 3 basis."""

    t123: int
    t12: int
    t13: int
    t23: int
    t1: int
    t2: int
    t3: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.t123, self.t12, self.t13, self.t23, self.t1, self.t2, self.t3)

    @classmethod
    def from_words(cls, v1: Codeword, v2: Codeword, v3: Codeword) -> "ParamVector3":
        return cls(
            t123=meet_weight([v1, v2, v3]),
            t12=meet_weight([v1, v2]),
            t13=meet_weight([v1, v3]),
            t23=meet_weight([v2, v3]),
            t1=v1.weight,
            t2=v2.weight,
            t3=v3.weight,
        )


@dataclass(frozen=True)
class Solution3:
    """Class sizes solving the rank 3 system (the triple class size is t123)."""

    x12: int
    x13: int
    x23: int
    x1: int
    x2: int
    x3: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.x12, self.x13, self.x23, self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class ParamVector4:
    """Intersection cardinalities of a rank 4 basis."""

    t1234: int
    t123: int
    t124: int
    t134: int
    t234: int
    t12: int
    t13: int
    t14: int
    t23: int
    t24: int
    t34: int
    t1: int
    t2: int
    t3: int
    t4: int

    def as_tuple(self) -> tuple[int, ...]:
        return (
            self.t1234, self.t123, self.t124, self.t134, self.t234,
            self.t12, self.t13, self.t14, self.t23, self.t24, self.t34,
            self.t1, self.t2, self.t3, self.t4,
        )

    @classmethod
    def from_words(cls, v1, v2, v3, v4) -> "ParamVector4":
        return cls(
            t1234=meet_weight([v1, v2, v3, v4]),
            t123=meet_weight([v1, v2, v3]),
            t124=meet_weight([v1, v2, v4]),
            t134=meet_weight([v1, v3, v4]),
            t234=meet_weight([v2, v3, v4]),
            t12=meet_weight([v1, v2]),
            t13=meet_weight([v1, v3]),
            t14=meet_weight([v1, v4]),
            t23=meet_weight([v2, v3]),
            t24=meet_weight([v2, v4]),
            t34=meet_weight([v3, v4]),
            t1=v1.weight,
            t2=v2.weight,
            t3=v3.weight,
            t4=v4.weight,
        )


@dataclass(frozen=True)
class Solution4:
    """Class sizes solving the rank 4 system (the quadruple class size is t1234)."""

    x123: int
    x124: int
    x134: int
    x234: int
    x12: int
    x13: int
    x14: int
    x23: int
    x24: int
    x34: int
    x1: int
    x2: int
    x3: int
    x4: int

    def as_tuple(self) -> tuple[int, ...]:
        return (
            self.x123, self.x124, self.x134, self.x234,
            self.x12, self.x13, self.x14, self.x23, self.x24, self.x34,
            self.x1, self.x2, self.x3, self.x4,
        )


def congruence_targets(cv: CharVector) -> dict[str, tuple[int, int]]:
    """Residue constraints (modulus, residue) on each t entry for a vector.

    A square bit forces the word weight to 4 mod 8 (else 0 mod 8); a
    commutator bit forces the pair meet to 2 mod 4 (else 0 mod 4).  The
    first triple meet is odd; at rank 4 the triples through the nuclear
    word are even and the quadruple meet is free.
    """
    sq = cv.squares
    cm = cv.commutators
    if cv.rank == 3:
        return {
            "t123": (2, 1),
            "t12": (4, 2 * cm[0]),
            "t13": (4, 2 * cm[1]),
            "t23": (4, 2 * cm[2]),
            "t1": (8, 4 * sq[0]),
            "t2": (8, 4 * sq[1]),
            "t3": (8, 4 * sq[2]),
        }
    return {
        "t1234": (1, 0),
        "t123": (2, 1),
        "t124": (2, 0),
        "t134": (2, 0),
        "t234": (2, 0),
        "t12": (4, 2 * cm[0]),
        "t13": (4, 2 * cm[1]),
        "t14": (4, 2 * cm[2]),
        "t23": (4, 2 * cm[3]),
        "t24": (4, 2 * cm[4]),
        "t34": (4, 2 * cm[5]),
        "t1": (8, 4 * sq[0]),
        "t2": (8, 4 * sq[1]),
        "t3": (8, 4 * sq[2]),
        "t4": (8, 4 * sq[3]),
    }


def _meets_targets(t, targets: dict[str, tuple[int, int]]) -> bool:
    for sym, (mod, residue) in targets.items():
        if getattr(t, sym) % mod != residue:
            return False
    return True


def solve_system3(
    t: ParamVector3, targets: dict[str, tuple[int, int]] | None = None
) -> Solution3 | None:
    """Class sizes for a rank 3 parameter vector, or None when infeasible.

    Feasibility is every class size in 0..7.  The pair classes are
    automatically nonempty: pair meets are even and the triple meet odd, so
    their differences cannot vanish.
    """
    if targets is not None and not _meets_targets(t, targets):
        return None
    if t.t123 % 2 == 0 or any(v % 2 for v in (t.t12, t.t13, t.t23)):
        return None
    if any(v % 4 for v in (t.t1, t.t2, t.t3)):
        return None
    if not 1 <= t.t123 <= 7:
        return None
    x12 = t.t12 - t.t123
    x13 = t.t13 - t.t123
    x23 = t.t23 - t.t123
    x1 = t.t1 - t.t123 - x12 - x13
    x2 = t.t2 - t.t123 - x12 - x23
    x3 = t.t3 - t.t123 - x13 - x23
    xs = (x12, x13, x23, x1, x2, x3)
    if any(not 0 <= x <= 7 for x in xs):
        return None
    return Solution3(*xs)


def solve_system4(
    t: ParamVector4, targets: dict[str, tuple[int, int]] | None = None
) -> Solution4 | None:
    """Class sizes for a rank 4 parameter vector, or None when infeasible.

    The system is triangular: triple classes come from the triples and the
    quadruple, pair classes subtract the triple classes, and the single
    classes subtract everything else inside each generator.
    """
    if targets is not None and not _meets_targets(t, targets):
        return None
    if t.t123 % 2 == 0 or any(v % 2 for v in (t.t124, t.t134, t.t234)):
        return None
    if any(v % 2 for v in (t.t12, t.t13, t.t14, t.t23, t.t24, t.t34)):
        return None
    if any(v % 4 for v in (t.t1, t.t2, t.t3, t.t4)):
        return None
    if not 0 <= t.t1234 <= 7:
        return None
    if min(t.t1, t.t2, t.t3, t.t4) < 4:
        return None
    q = t.t1234
    x123 = t.t123 - q
    x124 = t.t124 - q
    x134 = t.t134 - q
    x234 = t.t234 - q
    x12 = t.t12 - q - x123 - x124
    x13 = t.t13 - q - x123 - x134
    x14 = t.t14 - q - x124 - x134
    x23 = t.t23 - q - x123 - x234
    x24 = t.t24 - q - x124 - x234
    x34 = t.t34 - q - x134 - x234
    x1 = t.t1 - q - x123 - x124 - x134 - x12 - x13 - x14
    x2 = t.t2 - q - x123 - x124 - x234 - x12 - x23 - x24
    x3 = t.t3 - q - x123 - x134 - x234 - x13 - x23 - x34
    x4 = t.t4 - q - x124 - x134 - x234 - x14 - x24 - x34
    xs = (x123, x124, x134, x234, x12, x13, x14, x23, x24, x34, x1, x2, x3, x4)
    if any(not 0 <= x <= 7 for x in xs):
        return None
    return Solution4(*xs)


# class layout: consecutive 1-based intervals in a fixed label order; a
# label names the generators containing the class
_LAYOUT3 = ("123", "12", "13", "23", "1", "2", "3")
_LAYOUT4 = (
    "1234", "123", "124", "134",
    "12", "13", "14", "1",
    "234", "23", "24", "2",
    "34", "3", "4",
)


@dataclass(frozen=True)
class Representation:
    """A reduced representation: a concrete code plus its search data."""

    target: LoopClass
    params: ParamVector3 | ParamVector4
    solution: Solution3 | Solution4
    classes: tuple[tuple[str, tuple[int, ...]], ...]  # nonempty (label, coords)
    generators: tuple[Codeword, ...]
    degree: int

    def code(self) -> BinaryCode:
        return BinaryCode(self.degree, self.generators)

    def rep_type(self) -> RepType:
        return RepType(tuple(sorted(len(c) for _, c in self.classes)))


def _class_sizes(t, x) -> dict[str, int]:
    if isinstance(t, ParamVector3):
        return {
            "123": t.t123,
            "12": x.x12, "13": x.x13, "23": x.x23,
            "1": x.x1, "2": x.x2, "3": x.x3,
        }
    return {
        "1234": t.t1234,
        "123": x.x123, "124": x.x124, "134": x.x134, "234": x.x234,
        "12": x.x12, "13": x.x13, "14": x.x14,
        "23": x.x23, "24": x.x24, "34": x.x34,
        "1": x.x1, "2": x.x2, "3": x.x3, "4": x.x4,
    }


def assemble_generators(t, x, target: LoopClass) -> Representation:
    """Materialize the canonical code for a solved parameter vector.

    Classes become consecutive coordinate intervals in the fixed layout
    order (empty classes are skipped), and generator i is the union of the
    classes whose label mentions i.  Raises when the generators come out
    linearly dependent, which only happens for degenerate parameter
    vectors that do not describe a code of full rank.
    """
    rank = target.rank
    layout = _LAYOUT3 if rank == 3 else _LAYOUT4
    sizes = _class_sizes(t, x)
    classes: list[tuple[str, tuple[int, ...]]] = []
    supports: dict[str, set[int]] = {str(i): set() for i in range(1, rank + 1)}
    cursor = 1
    for label in layout:
        size = sizes[label]
        if size == 0:
            continue
        coords = tuple(range(cursor, cursor + size))
        cursor += size
        classes.append((label, coords))
        for ch in label:
            supports[ch].update(coords)
    degree = cursor - 1
    generators = tuple(
        Codeword(degree, frozenset(supports[str(i)])) for i in range(1, rank + 1)
    )
    rep = Representation(
        target=target,
        params=t,
        solution=x,
        classes=tuple(classes),
        generators=generators,
        degree=degree,
    )
    rep.code()  # raises InvalidCodeError if dependent
    recomputed = (
        ParamVector3.from_words(*generators)
        if rank == 3
        else ParamVector4.from_words(*generators)
    )
    if recomputed != t:
        raise InternalInvariantError("assembled generators do not reproduce t")
    return rep


def _as_loop_class(target: LoopClass | CharVector | str) -> LoopClass:
    if isinstance(target, str):
        from .catalog import parse_loop_id

        return parse_loop_id(target)
    if isinstance(target, LoopClass):
        return target
    for i, cv in enumerate(canonical_catalog(target.rank), start=1):
        if cv == target:
            return LoopClass(target.rank, i)
    raise InvalidCodeError(f"characteristic vector {target} is not canonical")


@dataclass
class SearchStats:
    visited: int = 0   # candidate class sizes tried across all levels
    pruned: int = 0    # subtrees cut by the degree bound
    degenerate: int = 0  # leaves dropped for linearly dependent generators


def _scan3(targets, cap, stats: SearchStats) -> Iterator[tuple[ParamVector3, Solution3, int]]:
    """Walk rank 3 parameter vectors in lexicographic t order below cap()."""
    r = targets
    for t123 in range(1, 8, 2):
        stats.visited += 1
        if t123 >= cap():
            stats.pruned += 1
            break
        for x12 in range((r["t12"][1] - t123) % 4, 8, 4):
            stats.visited += 1
            if t123 + x12 >= cap():
                stats.pruned += 1
                break
            for x13 in range((r["t13"][1] - t123) % 4, 8, 4):
                stats.visited += 1
                base = t123 + x12 + x13
                if base >= cap():
                    stats.pruned += 1
                    break
                for x23 in range((r["t23"][1] - t123) % 4, 8, 4):
                    stats.visited += 1
                    partial = base + x23
                    if partial >= cap():
                        stats.pruned += 1
                        break
                    x1 = (r["t1"][1] - t123 - x12 - x13) % 8
                    x2 = (r["t2"][1] - t123 - x12 - x23) % 8
                    x3 = (r["t3"][1] - t123 - x13 - x23) % 8
                    stats.visited += 3
                    degree = partial + x1 + x2 + x3
                    if degree >= cap():
                        stats.pruned += 1
                        continue
                    t = ParamVector3(
                        t123=t123,
                        t12=t123 + x12,
                        t13=t123 + x13,
                        t23=t123 + x23,
                        t1=t123 + x12 + x13 + x1,
                        t2=t123 + x12 + x23 + x2,
                        t3=t123 + x13 + x23 + x3,
                    )
                    x = solve_system3(t, targets)
                    if x is None:
                        raise InternalInvariantError("scan produced an infeasible t")
                    yield t, x, degree


def _scan4(targets, cap, stats: SearchStats) -> Iterator[tuple[ParamVector4, Solution4, int]]:
    """Walk rank 4 parameter vectors in lexicographic t order below cap().

    The t order is (t1234, triples, pairs, singles).  Every prefix fixes
    the residue of the next class size, so each level ranges over at most
    four values; the singles are forced outright mod 8.
    """
    r = targets

    def sizes(start: int, step: int):
        return range(start, 8, step)

    for q in range(0, 8):
        stats.visited += 1
        if q >= cap():
            stats.pruned += 1
            break
        for x123 in sizes((1 - q) % 2, 2):
            stats.visited += 1
            if q + x123 >= cap():
                stats.pruned += 1
                break
            for x124 in sizes(q % 2, 2):
                stats.visited += 1
                if q + x123 + x124 >= cap():
                    stats.pruned += 1
                    break
                for x134 in sizes(q % 2, 2):
                    stats.visited += 1
                    s_triple = q + x123 + x124 + x134
                    if s_triple >= cap():
                        stats.pruned += 1
                        break
                    for x234 in sizes(q % 2, 2):
                        stats.visited += 1
                        s0 = s_triple + x234
                        if s0 >= cap():
                            stats.pruned += 1
                            break
                        for x12 in sizes((r["t12"][1] - q - x123 - x124) % 4, 4):
                            stats.visited += 1
                            s1 = s0 + x12
                            if s1 >= cap():
                                stats.pruned += 1
                                break
                            for x13 in sizes((r["t13"][1] - q - x123 - x134) % 4, 4):
                                stats.visited += 1
                                s2 = s1 + x13
                                if s2 >= cap():
                                    stats.pruned += 1
                                    break
                                for x14 in sizes((r["t14"][1] - q - x124 - x134) % 4, 4):
                                    stats.visited += 1
                                    s3 = s2 + x14
                                    if s3 >= cap():
                                        stats.pruned += 1
                                        break
                                    for x23 in sizes((r["t23"][1] - q - x123 - x234) % 4, 4):
                                        stats.visited += 1
                                        s4 = s3 + x23
                                        if s4 >= cap():
                                            stats.pruned += 1
                                            break
                                        for x24 in sizes((r["t24"][1] - q - x124 - x234) % 4, 4):
                                            stats.visited += 1
                                            s5 = s4 + x24
                                            if s5 >= cap():
                                                stats.pruned += 1
                                                break
                                            for x34 in sizes((r["t34"][1] - q - x134 - x234) % 4, 4):
                                                stats.visited += 1
                                                s6 = s5 + x34
                                                if s6 >= cap():
                                                    stats.pruned += 1
                                                    break
                                                x1 = (r["t1"][1] - q - x123 - x124 - x134 - x12 - x13 - x14) % 8
                                                x2 = (r["t2"][1] - q - x123 - x124 - x234 - x12 - x23 - x24) % 8
                                                x3 = (r["t3"][1] - q - x123 - x134 - x234 - x13 - x23 - x34) % 8
                                                x4 = (r["t4"][1] - q - x124 - x134 - x234 - x14 - x24 - x34) % 8
                                                stats.visited += 4
                                                degree = s6 + x1 + x2 + x3 + x4
                                                if degree >= cap():
                                                    stats.pruned += 1
                                                    continue
                                                t = ParamVector4(
                                                    t1234=q,
                                                    t123=q + x123,
                                                    t124=q + x124,
                                                    t134=q + x134,
                                                    t234=q + x234,
                                                    t12=q + x123 + x124 + x12,
                                                    t13=q + x123 + x134 + x13,
                                                    t14=q + x124 + x134 + x14,
                                                    t23=q + x123 + x234 + x23,
                                                    t24=q + x124 + x234 + x24,
                                                    t34=q + x134 + x234 + x34,
                                                    t1=q + x123 + x124 + x134 + x12 + x13 + x14 + x1,
                                                    t2=q + x123 + x124 + x234 + x12 + x23 + x24 + x2,
                                                    t3=q + x123 + x134 + x234 + x13 + x23 + x34 + x3,
                                                    t4=q + x124 + x134 + x234 + x14 + x24 + x34 + x4,
                                                )
                                                x = solve_system4(t, targets)
                                                if x is None:
                                                    # the zero-generator screen (t >= 4) can reject here
                                                    continue
                                                yield t, x, degree


def _scan(target: LoopClass, cap, stats: SearchStats):
    targets = congruence_targets(target.vector)
    if target.rank == 3:
        return _scan3(targets, cap, stats)
    return _scan4(targets, cap, stats)


def enumerate_reduced(
    target: LoopClass | CharVector, max_degree: int
) -> Iterator[Representation]:
    """Yield every reduced representation of a class up to max_degree.

    Output order is lexicographic in t.  Each feasible parameter vector
    produces exactly one representation, in canonical interval layout;
    degenerate vectors (dependent generators) are dropped.
    """
    loop_class = _as_loop_class(target)
    limit = MAX_DEGREE_RANK3 if loop_class.rank == 3 else MAX_DEGREE_RANK4
    if not 1 <= max_degree <= limit:
        raise InvalidCodeError(f"max degree {max_degree} out of range 1..{limit}")
    return _enumerate(loop_class, max_degree)


def _enumerate(loop_class: LoopClass, max_degree: int) -> Iterator[Representation]:
    stats = SearchStats()
    for t, x, _degree in _scan(loop_class, lambda: max_degree + 1, stats):
        try:
            yield assemble_generators(t, x, loop_class)
        except InvalidCodeError:
            stats.degenerate += 1


@dataclass(frozen=True)
class MinimalityCertificate:
    """Witness that the whole reduced box was searched for smaller degrees."""

    target: LoopClass
    degree: int
    visited: int
    pruned: int
    degenerate: int
    exhausted: bool = True


def minimal_representation(
    target: LoopClass | CharVector,
) -> tuple[Representation, MinimalityCertificate]:
    """Least-degree reduced representation, with the search certificate.

    Branch and bound over the full reduced box: the incumbent degree caps
    the walk, and partial class-size sums prune whole subtrees.  Ties on
    degree resolve to the lexicographically least t.
    """
    loop_class = _as_loop_class(target)
    limit = MAX_DEGREE_RANK3 if loop_class.rank == 3 else MAX_DEGREE_RANK4
    stats = SearchStats()
    best: Representation | None = None
    bound = limit + 1
    for t, x, degree in _scan(loop_class, lambda: bound, stats):
        try:
            rep = assemble_generators(t, x, loop_class)
        except InvalidCodeError:
            stats.degenerate += 1
            continue
        best = rep
        bound = degree
    if best is None:
        raise InternalInvariantError(f"no reduced representation found for {loop_class}")
    certificate = MinimalityCertificate(
        target=loop_class,
        degree=best.degree,
        visited=stats.visited,
        pruned=stats.pruned,
        degenerate=stats.degenerate,
    )
    return best, certificate


def verify_representation(rep: Representation) -> bool:
    """Full check: doubly even code, Moufang loop, classifies to the target."""
    code = rep.code()
    if not code.is_doubly_even():
        return False
    loop = build_loop(code)
    if not loop.is_moufang():
        return False
    try:
        return classify(loop) == rep.target
    except InvalidCodeError:
        return False
