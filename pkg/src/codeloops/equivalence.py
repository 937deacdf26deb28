"""Coordinate-permutation isomorphism of binary codes.

Two codes of equal degree are isomorphic when some permutation of the
coordinates carries the span of one onto the span of the other.  Since
coordinates in one class are interchangeable, the search runs over
class-to-class bijections instead of raw coordinate permutations: each span
element is a union of classes, so a permutation exists iff some
size-preserving class bijection maps the class patterns of one span onto
the other's.
"""

from __future__ import annotations

from collections import Counter

from .codes import BinaryCode, Codeword, InternalInvariantError

# invariant checks tried before any search, cheapest first; the name is the
# reported reason when codes are told apart
INVARIANTS = (
    ("degree", lambda c: c.degree),
    ("dimension", lambda c: c.dimension),
    ("weight enumerator", lambda c: c.weight_enumerator()),
    ("type", lambda c: c.rep_type()),
)


def distinguishing_invariant(a: BinaryCode, b: BinaryCode) -> str | None:
    for name, fn in INVARIANTS:
        if fn(a) != fn(b):
            return name
    return None


def _class_data(code: BinaryCode):
    """Classes in a search-friendly canonical order, plus span patterns.

    Returns (classes, patterns) where classes is a list of sorted coordinate
    tuples ordered by (size, span-incidence vector) and patterns is the set
    of span elements, each encoded as a bitmask over class indices.
    """
    part = code.coordinate_classes()
    classes = [tuple(sorted(c)) for c in part.classes]
    span = code.span()
    incidence = [
        tuple(cls[0] in w.support for w in span)
        for cls in classes
    ]
    order = sorted(range(len(classes)), key=lambda i: (len(classes[i]), incidence[i]))
    classes = [classes[i] for i in order]
    patterns = set()
    for w in span:
        pat = 0
        for ci, cls in enumerate(classes):
            if cls[0] in w.support:
                pat |= 1 << ci
        patterns.add(pat)
    return classes, patterns, sorted(part.residue)


def code_isomorphism(a: BinaryCode, b: BinaryCode) -> tuple[int, ...] | None:
    """A permutation of 1..m carrying span(a) onto span(b), or None.

    The result p is 1-based: coordinate i of a maps to p[i-1] in b.
    """
    if distinguishing_invariant(a, b) is not None:
        return None
    ca, pa, ra = _class_data(a)
    cb, pb, rb = _class_data(b)
    sigma = _match_classes(ca, pa, cb, pb)
    if sigma is None:
        return None
    perm = [0] * a.degree
    for ai, bi in enumerate(sigma):
        for src, dst in zip(ca[ai], cb[bi]):
            perm[src - 1] = dst
    for src, dst in zip(ra, rb):
        perm[src - 1] = dst
    _check_permutation(a, b, perm)
    return tuple(perm)


def _match_classes(ca, pa, cb, pb) -> list[int] | None:
    """Backtracking search for a pattern-preserving class bijection."""
    n = len(ca)
    assigned: list[int] = []
    used = [False] * n

    def consistent() -> bool:
        # project every pattern onto the classes assigned so far; the
        # projected multisets must agree or no extension can work
        k = len(assigned)
        proj_a: Counter = Counter()
        for pat in pa:
            img = 0
            for ai in range(k):
                if pat >> ai & 1:
                    img |= 1 << assigned[ai]
            proj_a[img] += 1
        img_mask = 0
        for bi in assigned:
            img_mask |= 1 << bi
        proj_b = Counter(pat & img_mask for pat in pb)
        return proj_a == proj_b

    def extend() -> bool:
        ai = len(assigned)
        if ai == n:
            return True
        size = len(ca[ai])
        for bi in range(n):
            if used[bi] or len(cb[bi]) != size:
                continue
            assigned.append(bi)
            used[bi] = True
            if consistent() and extend():
                return True
            used[bi] = False
            assigned.pop()
        return False

    return assigned if extend() else None


def _check_permutation(a: BinaryCode, b: BinaryCode, perm: list[int]) -> None:
    if sorted(perm) != list(range(1, a.degree + 1)):
        raise InternalInvariantError("isomorphism witness is not a permutation")
    span_b = {w.support for w in b.span()}
    for w in a.span():
        image = frozenset(perm[i - 1] for i in w.support)
        if image not in span_b:
            raise InternalInvariantError("isomorphism witness does not map span to span")


def permute_word(w: Codeword, perm: tuple[int, ...]) -> Codeword:
    return Codeword(w.degree, frozenset(perm[i - 1] for i in w.support))


def permute_code(code: BinaryCode, perm: tuple[int, ...]) -> BinaryCode:
    return BinaryCode(code.degree, [permute_word(g, perm) for g in code.generators])


def cycle_notation(perm: tuple[int, ...]) -> str:
    """Render a 1-based permutation in cycle form, fixed points omitted."""
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start - 1]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt - 1]
        if len(cycle) > 1:
            out.append("(" + " ".join(str(i) for i in cycle) + ")")
    return "".join(out) if out else "()"
