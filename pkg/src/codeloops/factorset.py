"""Sign tables for twisting the group algebra of a doubly even code.

A factor set on a code V assigns a sign phi(v, w) to every ordered pair of
codewords, subject to:

    phi(v, v)    = (-1)^(|v|/4)
    phi(v, w)    = (-1)^(|v & w|/2) * phi(w, v)
    phi(0, v)    = phi(v, 0) = +1
    phi(v+w, u)  = phi(v, w+u) * phi(v, w) * phi(w, u) * (-1)^(|v & w & u|)

Tables are stored as 0/1 exponents indexed by span position.  The builder
treats the axioms as one linear system over GF(2) in the 4^k table entries
and eliminates globally, then reads off the lexicographically least
solution in row-major table order (free entries fall to 0 greedily).
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import BinaryCode, InternalInvariantError, InvalidCodeError, NotDoublyEvenError

MAX_DIMENSION = 6  # table has 4^k entries; the solver is meant for small k


@dataclass(frozen=True)
class Violation:
    axiom: str  # "zero" | "square" | "commutator" | "cocycle"
    where: tuple[int, ...]  # span indices of the witnesses


class FactorSet:
    """A 2^k x 2^k table of sign exponents over the span of a code."""

    def __init__(self, code: BinaryCode, table: list[list[int]]):
        n = 1 << code.dimension
        if len(table) != n or any(len(row) != n for row in table):
            raise InvalidCodeError("factor set table must be 2^k x 2^k")
        self.code = code
        self.table = [list(row) for row in table]

    @property
    def size(self) -> int:
        return len(self.table)

    def bit(self, i: int, j: int) -> int:
        return self.table[i][j]

    def sign(self, i: int, j: int) -> int:
        return -1 if self.table[i][j] else 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FactorSet)
            and self.code == other.code
            and self.table == other.table
        )


def _reduce(mask: int, rhs: int, basis: dict[int, tuple[int, int]]) -> tuple[int, int]:
    while mask:
        lead = mask.bit_length() - 1
        row = basis.get(lead)
        if row is None:
            break
        mask ^= row[0]
        rhs ^= row[1]
    return mask, rhs


def _insert(mask: int, rhs: int, basis: dict[int, tuple[int, int]]) -> bool:
    """Add one equation; False means the system became inconsistent."""
    mask, rhs = _reduce(mask, rhs, basis)
    if mask == 0:
        return rhs == 0
    basis[mask.bit_length() - 1] = (mask, rhs)
    return True


def build_factor_set(code: BinaryCode) -> FactorSet:
    """Solve the factor set axioms over the span of a doubly even code."""
    if not code.is_doubly_even():
        raise NotDoublyEvenError(code.first_odd_span_element())
    k = code.dimension
    if k > MAX_DIMENSION:
        raise InvalidCodeError(f"dimension {k} exceeds solver cap {MAX_DIMENSION}")
    n = 1 << k
    masks = [w.mask() for w in code.span()]
    var = lambda i, j: i * n + j

    basis: dict[int, tuple[int, int]] = {}
    ok = True
    for j in range(n):
        ok &= _insert(1 << var(0, j), 0, basis)
        ok &= _insert(1 << var(j, 0), 0, basis)
    for i in range(n):
        ok &= _insert(1 << var(i, i), (masks[i].bit_count() // 4) & 1, basis)
    for i in range(n):
        for j in range(i + 1, n):
            rhs = ((masks[i] & masks[j]).bit_count() // 2) & 1
            ok &= _insert((1 << var(i, j)) | (1 << var(j, i)), rhs, basis)
    for i in range(n):
        mi = masks[i]
        for j in range(n):
            mij = mi & masks[j]
            left = 1 << var(i, j)
            for u in range(n):
                mask = (1 << var(i ^ j, u)) ^ (1 << var(i, j ^ u)) ^ left ^ (1 << var(j, u))
                ok &= _insert(mask, (mij & masks[u]).bit_count() & 1, basis)
    if not ok:
        raise InternalInvariantError("factor set axioms inconsistent on a doubly even code")

    # lexicographically least solution: fix entries to 0 in table order
    # whenever the pinned system stays consistent
    values = [0] * (n * n)
    for v in range(n * n):
        mask, rhs = _reduce(1 << v, 0, basis)
        if mask == 0:
            values[v] = rhs
        else:
            basis[mask.bit_length() - 1] = (mask, rhs)
    table = [[values[var(i, j)] for j in range(n)] for i in range(n)]
    return FactorSet(code, table)


def verify_factor_set(phi: FactorSet) -> list[Violation]:
    """Recheck every axiom instance; empty list means the table is valid."""
    n = phi.size
    t = phi.table
    masks = [w.mask() for w in phi.code.span()]
    out: list[Violation] = []
    for j in range(n):
        if t[0][j]:
            out.append(Violation("zero", (0, j)))
        if j and t[j][0]:
            out.append(Violation("zero", (j, 0)))
    for i in range(n):
        if t[i][i] != (masks[i].bit_count() // 4) & 1:
            out.append(Violation("square", (i,)))
    for i in range(n):
        for j in range(i + 1, n):
            if t[i][j] ^ t[j][i] != ((masks[i] & masks[j]).bit_count() // 2) & 1:
                out.append(Violation("commutator", (i, j)))
    for i in range(n):
        mi = masks[i]
        for j in range(n):
            mij = mi & masks[j]
            tij = t[i][j]
            for u in range(n):
                want = (mij & masks[u]).bit_count() & 1
                if t[i ^ j][u] ^ t[i][j ^ u] ^ tij ^ t[j][u] != want:
                    out.append(Violation("cocycle", (i, j, u)))
    return out
