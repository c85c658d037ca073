"""Finite quandles, good involutions and the coefficient groups (Z_2)^s + Z^t.

Elements of an ``n``-element quandle are the integers ``0..n-1`` and the
operation is stored as a table with ``table[x][y] == x^y``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import MAX_WITNESSES, MalformedInputError, Violation, ViolationError


def _as_table(table: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise MalformedInputError(f"table must be a square array of integers: {exc}") from None
    n = len(rows)
    if n == 0:
        raise MalformedInputError("table must be non-empty")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedInputError(f"table is not square: row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedInputError(f"entry table[{i}][{j}] = {v} is outside 0..{n - 1}")
    return rows


def quandle_violations(table: Sequence[Sequence[int]]) -> list[Violation]:
    """List every violated quandle axiom instance (capped at ``MAX_WITNESSES``)."""
    t = _as_table(table)
    n = len(t)
    out: list[Violation] = []
    for x in range(n):
        if t[x][x] != x:
            out.append(Violation("axiom (i): x^x = x", (x,)))
    for y in range(n):
        column = [t[x][y] for x in range(n)]
        if len(set(column)) != n:
            # report the first collision pair
            seen: dict[int, int] = {}
            for x, v in enumerate(column):
                if v in seen:
                    out.append(Violation("axiom (ii): x -> x^y is a bijection", (seen[v], x, y)))
                    break
                seen[v] = x
    for x, y, z in itertools.product(range(n), repeat=3):
        if len(out) >= MAX_WITNESSES:
            break
        if t[t[x][y]][z] != t[t[x][z]][t[y][z]]:
            out.append(Violation("axiom (iii): (x^y)^z = (x^z)^(y^z)", (x, y, z)))
    return out[:MAX_WITNESSES]


@dataclass(frozen=True)
class Quandle:
    """A validated finite quandle. Build through :func:`verify_quandle` or the named constructors."""

    table: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)
    _inverse: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int, y: int) -> int:
        return self._inverse[x][y]

    def elements(self) -> range:
        return range(self.n)

    def is_involutory(self) -> bool:
        return all(self.table[x][y] == self._inverse[x][y] for x in self.elements() for y in self.elements())


def verify_quandle(table: Sequence[Sequence[int]], name: str = "") -> Quandle:
    """Validate ``table`` against the quandle axioms.

    Raises :class:`MalformedInputError` when the table is not a square array
    over ``0..n-1`` and :class:`ViolationError` (with witnesses) when an axiom
    fails.
    """
    t = _as_table(table)
    violations = quandle_violations(t)
    if violations:
        raise ViolationError("quandle", violations)
    n = len(t)
    inverse = [[0] * n for _ in range(n)]
    for z in range(n):
        for y in range(n):
            inverse[t[z][y]][y] = z
    return Quandle(t, name, tuple(tuple(r) for r in inverse))


def inverse_op(q: Quandle, x: int, y: int) -> int:
    """The unique ``z`` with ``z^y == x``."""
    return q.inv(x, y)


def trivial_quandle(n: int) -> Quandle:
    return verify_quandle([[x] * n for x in range(n)], name=f"T{n}")


def dihedral_quandle(n: int) -> Quandle:
    return verify_quandle([[(2 * y - x) % n for y in range(n)] for x in range(n)], name=f"R{n}")


P3_TABLE = ((0, 0, 0), (2, 1, 1), (1, 2, 2))
P3_RHO = (0, 2, 1)


@functools.cache
def p3() -> Quandle:
    return verify_quandle(P3_TABLE, name="P3")


# -- good involutions ---------------------------------------------------------


def _as_permutation(rho: Sequence[int], n: int) -> tuple[int, ...]:
    try:
        r = tuple(int(v) for v in rho)
    except (TypeError, ValueError):
        raise MalformedInputError("rho must be an array of integers") from None
    if len(r) != n:
        raise MalformedInputError(f"rho has length {len(r)}, expected {n}")
    if sorted(r) != list(range(n)):
        raise MalformedInputError(f"rho {list(r)} is not a permutation of 0..{n - 1}")
    return r


def involution_violations(q: Quandle, rho: Sequence[int]) -> list[Violation]:
    r = _as_permutation(rho, q.n)
    out: list[Violation] = []
    for x in q.elements():
        if r[r[x]] != x:
            out.append(Violation("rho(rho(x)) = x", (x,)))
    for x, y in itertools.product(q.elements(), repeat=2):
        if r[q.op(x, y)] != q.op(r[x], y):
            out.append(Violation("rho(x^y) = rho(x)^y", (x, y)))
        if q.op(x, r[y]) != q.inv(x, y):
            out.append(Violation("x^rho(y) = x^(y^-1)", (x, y)))
    return out[:MAX_WITNESSES]


@dataclass(frozen=True)
class GoodInvolution:
    rho: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.rho[x]

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits of the involution, each sorted, ordered by least element."""
        seen: set[int] = set()
        out = []
        for x in range(len(self.rho)):
            if x not in seen:
                orb = tuple(sorted({x, self.rho[x]}))
                seen.update(orb)
                out.append(orb)
        return out


def verify_good_involution(q: Quandle, rho: Sequence[int]) -> GoodInvolution:
    violations = involution_violations(q, rho)
    if violations:
        raise ViolationError("good involution", violations)
    return GoodInvolution(tuple(int(v) for v in rho))


def enumerate_good_involutions(q: Quandle) -> list[GoodInvolution]:
    """All good involutions of ``q`` in lexicographic order (possibly none)."""
    found = []
    # only involutive permutations can qualify
    for rho in _involutions(q.n):
        if not involution_violations(q, rho):
            found.append(GoodInvolution(rho))
    return found


def _involutions(n: int) -> list[tuple[int, ...]]:
    """Every involutive permutation of 0..n-1, lexicographically sorted."""
    out = []

    def pair_off(perm: list[int]):
        try:
            i = perm.index(-1)
        except ValueError:
            out.append(tuple(perm))
            return
        for j in range(i, n):
            if perm[j] == -1:
                perm[i], perm[j] = j, i
                pair_off(perm)
                perm[i] = perm[j] = -1

    pair_off([-1] * n)
    return sorted(out)


@dataclass(frozen=True)
class SymmetricQuandle:
    quandle: Quandle
    involution: GoodInvolution

    @property
    def n(self) -> int:
        return self.quandle.n

    def op(self, x: int, y: int) -> int:
        return self.quandle.op(x, y)

    def rho(self, x: int) -> int:
        return self.involution.rho[x]


def symmetric_quandle(q: Quandle, rho: Sequence[int] | None = None) -> SymmetricQuandle:
    """Pair ``q`` with ``rho`` (identity when omitted) after validating it."""
    if rho is None:
        rho = range(q.n)
    return SymmetricQuandle(q, verify_good_involution(q, rho))


@functools.cache
def p3_symmetric() -> SymmetricQuandle:
    return symmetric_quandle(p3(), P3_RHO)


# -- A_{s,t} = (Z_2)^s + Z^t ------------------------------------------------


@dataclass(frozen=True)
class AbelianSignature:
    s: int
    t: int

    def __post_init__(self):
        if not (isinstance(self.s, int) and isinstance(self.t, int)) or self.s < 0 or self.t < 0:
            raise MalformedInputError(f"signature needs non-negative integers, got s={self.s!r}, t={self.t!r}")


@dataclass(frozen=True)
class AbelianElement:
    """An element ``(alpha_1 + ... + alpha_s) + (beta_1 + ... + beta_t)``.

    Integers are Python ints, so the Z part never overflows.
    """

    signature: AbelianSignature
    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    def __post_init__(self):
        if len(self.alphas) != self.signature.s or len(self.betas) != self.signature.t:
            raise MalformedInputError(
                f"element with {len(self.alphas)} Z2 / {len(self.betas)} Z entries "
                f"does not match signature ({self.signature.s},{self.signature.t})"
            )
        if any(a not in (0, 1) for a in self.alphas):
            raise MalformedInputError(f"Z2 entries must be 0 or 1, got {list(self.alphas)}")

    @classmethod
    def of(cls, alphas: Sequence[int], betas: Sequence[int]) -> "AbelianElement":
        """Build from entry lists; Z2 entries are reduced mod 2."""
        return cls(
            AbelianSignature(len(alphas), len(betas)),
            tuple(int(a) % 2 for a in alphas),
            tuple(int(b) for b in betas),
        )

    def __add__(self, other: "AbelianElement") -> "AbelianElement":
        return abelian_add(self, other)

    def __neg__(self) -> "AbelianElement":
        return abelian_negate(self)

    def __sub__(self, other: "AbelianElement") -> "AbelianElement":
        return abelian_add(self, abelian_negate(other))

    def __rmul__(self, k: int) -> "AbelianElement":
        return AbelianElement(
            self.signature,
            tuple((k * a) % 2 for a in self.alphas),
            tuple(k * b for b in self.betas),
        )

    def is_zero(self) -> bool:
        return not any(self.alphas) and not any(self.betas)

    def __str__(self) -> str:
        left = "⊕".join(str(a) for a in self.alphas)
        right = "⊕".join(str(b) for b in self.betas)
        if left and right:
            return f"{left}⊕{right}"
        return left or right or "0"

    def to_json(self) -> dict:
        return {"alphas": list(self.alphas), "betas": list(self.betas)}


def abelian_zero(sig: AbelianSignature) -> AbelianElement:
    return AbelianElement(sig, (0,) * sig.s, (0,) * sig.t)


def abelian_add(a: AbelianElement, b: AbelianElement) -> AbelianElement:
    if a.signature != b.signature:
        raise MalformedInputError(f"signature mismatch: {a.signature} vs {b.signature}")
    return AbelianElement(
        a.signature,
        tuple((x + y) % 2 for x, y in zip(a.alphas, b.alphas)),
        tuple(x + y for x, y in zip(a.betas, b.betas)),
    )


def abelian_negate(a: AbelianElement) -> AbelianElement:
    return AbelianElement(a.signature, a.alphas, tuple(-b for b in a.betas))


def generator_p(sig: AbelianSignature, i: int) -> AbelianElement:
    """``p_i``: the unit in Z2 slot ``i`` (0-based)."""
    alphas = [0] * sig.s
    alphas[i] = 1
    return AbelianElement(sig, tuple(alphas), (0,) * sig.t)


def generator_q(sig: AbelianSignature, j: int) -> AbelianElement:
    """``q_j``: the unit in Z slot ``j`` (0-based)."""
    betas = [0] * sig.t
    betas[j] = 1
    return AbelianElement(sig, (0,) * sig.s, tuple(betas))


def bound_norm(a: AbelianElement) -> int:
    """Sum of the Z2 entries read as 0/1 plus the absolute values of the Z entries."""
    return sum(a.alphas) + sum(abs(b) for b in a.betas)
