"""Symmetric quandle 3-cocycles.

Every cocycle condition is a linear relation among values at triples, so
the conditions are generated once as signed term lists
(:func:`condition_instances`) and reused by the A_{s,t} checker, the
mod-p checker and the kernel solver.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator, Mapping

import numpy as np

from .algebra import (
    AbelianElement,
    AbelianSignature,
    SymmetricQuandle,
    abelian_zero,
    bound_norm,
    p3_symmetric,
)
from .errors import MAX_WITNESSES, MalformedInputError, Violation, ViolationError
from .linalg import is_prime, nullspace_from_rref, rank_mod_p, rref_blocks_mod_p

Triple = tuple[int, int, int]
Terms = list[tuple[int, Triple]]

MAX_KERNEL_ORDER = 12

COND_I = "condition (i)"
COND_II = "condition (ii)"
COND_III = "condition (iii)"


def condition_instances(sq: SymmetricQuandle) -> Iterator[tuple[str, tuple, Terms]]:
    """Yield ``(condition, witness, terms)``; the condition holds iff ``sum(coef * phi(triple)) == 0``."""
    n = sq.n
    op = sq.op
    rho = sq.rho
    for a, b, c, d in itertools.product(range(n), repeat=4):
        yield COND_I, (a, b, c, d), [
            (1, (a, c, d)),
            (-1, (op(a, b), c, d)),
            (-1, (a, b, d)),
            (1, (op(a, c), op(b, c), d)),
            (1, (a, b, c)),
            (-1, (op(a, d), op(b, d), op(c, d))),
        ]
    for a, b in itertools.product(range(n), repeat=2):
        yield COND_II, (a, a, b), [(1, (a, a, b))]
        yield COND_II, (a, b, b), [(1, (a, b, b))]
    for a, b, c in itertools.product(range(n), repeat=3):
        yield COND_III, (a, b, c, "rho(a)"), [(1, (a, b, c)), (1, (rho(a), b, c))]
        yield COND_III, (a, b, c, "rho(b)"), [(1, (a, b, c)), (1, (op(a, b), rho(b), c))]
        yield COND_III, (a, b, c, "rho(c)"), [(1, (a, b, c)), (1, (op(a, c), op(b, c), rho(c)))]


@functools.lru_cache(maxsize=32)
def _instance_list(sq: SymmetricQuandle) -> tuple:
    return tuple(condition_instances(sq))


@dataclass(frozen=True)
class Cocycle3:
    """A verified symmetric 3-cocycle; triples missing from ``values`` are zero."""

    sq: SymmetricQuandle
    signature: AbelianSignature
    values: Mapping[Triple, AbelianElement] = field(default_factory=dict)

    def __call__(self, a: int, b: int, c: int) -> AbelianElement:
        v = self.values.get((a, b, c))
        return v if v is not None else abelian_zero(self.signature)

    def support(self) -> list[Triple]:
        return sorted(t for t, v in self.values.items() if not v.is_zero())

    @functools.cached_property
    def admissibility(self) -> "Admissibility":
        return check_lemma_admissible(self)


def _clean_values(sq: SymmetricQuandle, sig: AbelianSignature, values: Mapping) -> dict[Triple, AbelianElement]:
    out = {}
    for key, v in values.items():
        triple = tuple(int(x) for x in key)
        if len(triple) != 3 or not all(0 <= x < sq.n for x in triple):
            raise MalformedInputError(f"triple {key!r} is not in X^3 for |X| = {sq.n}")
        if not isinstance(v, AbelianElement):
            raise MalformedInputError(f"value at {triple} is not an AbelianElement")
        if v.signature != sig:
            raise MalformedInputError(
                f"value at {triple} has signature ({v.signature.s},{v.signature.t}), expected ({sig.s},{sig.t})"
            )
        if not v.is_zero():
            out[triple] = v
    return out


def _violations(sq: SymmetricQuandle, vals: Mapping[Triple, AbelianElement]) -> list[Violation]:
    # plain integer vectors: Z_2 coordinates first, then Z coordinates
    vecs = {t: (v.alphas, v.betas) for t, v in vals.items()}
    out: list[Violation] = []
    for name, witness, terms in _instance_list(sq):
        alphas = betas = None
        for coef, t in terms:
            v = vecs.get(t)
            if v is None:
                continue
            if alphas is None:
                alphas, betas = [0] * len(v[0]), [0] * len(v[1])
            for i, a in enumerate(v[0]):
                alphas[i] += coef * a
            for j, b in enumerate(v[1]):
                betas[j] += coef * b
        if alphas is not None and (any(a % 2 for a in alphas) or any(betas)):
            out.append(Violation(name, witness))
            if len(out) >= MAX_WITNESSES:
                break
    return out


def cocycle_violations(sq: SymmetricQuandle, sig: AbelianSignature, values: Mapping) -> list[Violation]:
    return _violations(sq, _clean_values(sq, sig, values))


def verify_cocycle3(sq: SymmetricQuandle, sig: AbelianSignature, values: Mapping) -> Cocycle3:
    vals = _clean_values(sq, sig, values)
    violations = _violations(sq, vals)
    if violations:
        raise ViolationError("symmetric 3-cocycle", violations)
    return Cocycle3(sq, sig, vals)


def cocycle_violations_mod_p(sq: SymmetricQuandle, table, p: int) -> list[Violation]:
    """Check a Z_p-valued map, given as an ``n x n x n`` array, against all conditions mod ``p``."""
    t = np.asarray(table, dtype=np.int64) % p
    n = sq.n
    if t.shape != (n, n, n):
        raise MalformedInputError(f"table has shape {t.shape}, expected {(n, n, n)}")
    out: list[Violation] = []
    for name, witness, terms in condition_instances(sq):
        if sum(coef * int(t[trip]) for coef, trip in terms) % p:
            out.append(Violation(name, witness))
            if len(out) >= MAX_WITNESSES:
                break
    return out


# -- the cocycle theta on (P3, rho) --------------------------------------------

SIG_11 = AbelianSignature(1, 1)

THETA_VALUES = {
    (0, 1, 0): AbelianElement.of([1], [0]),
    (0, 2, 0): AbelianElement.of([1], [0]),
    (1, 0, 2): AbelianElement.of([0], [1]),
    (2, 0, 1): AbelianElement.of([0], [1]),
    (1, 0, 1): AbelianElement.of([0], [-1]),
    (2, 0, 2): AbelianElement.of([0], [-1]),
}


@functools.cache
def make_theta() -> Cocycle3:
    """The Z_2 + Z valued cocycle on (P3, rho) used for the triple point bound (one shared, read-only instance)."""
    phi = verify_cocycle3(p3_symmetric(), SIG_11, THETA_VALUES)
    return Cocycle3(phi.sq, phi.signature, MappingProxyType(phi.values))


# -- admissibility for the triple point bound ---------------------------------


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    offenders: tuple[Triple, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _is_allowed_value(v: AbelianElement) -> bool:
    # 0, some p_i, or some +-q_j
    if v.is_zero():
        return True
    if sum(v.alphas) == 1 and not any(v.betas):
        return True
    return not any(v.alphas) and bound_norm(v) == 1


def check_lemma_admissible(phi: Cocycle3) -> Admissibility:
    """Whether every value of ``phi`` is 0, a single ``p_i``, or a single ``+-q_j``."""
    bad = tuple(t for t in sorted(phi.values) if not _is_allowed_value(phi.values[t]))
    return Admissibility(not bad, bad)


# -- kernel over Z_p ------------------------------------------------------------------


def triple_index(n: int, triple: Triple) -> int:
    a, b, c = triple
    return (a * n + b) * n + c


def condition_row_blocks(sq: SymmetricQuandle, p: int, reverse: bool = False, block: int = 1024):
    """Yield the condition coefficient matrix over Z_p in blocks of rows.

    Columns follow the lexicographic order of (a, b, c), or its reverse.
    Rows that vanish mod p are dropped.
    """
    n = sq.n
    size = n**3
    buf = np.zeros((block, size), dtype=np.int64)
    k = 0
    for _, _, terms in condition_instances(sq):
        row = buf[k]
        row[:] = 0
        for coef, t in terms:
            col = triple_index(n, t)
            if reverse:
                col = size - 1 - col
            row[col] += coef
        row %= p
        if row.any():
            k += 1
            if k == block:
                yield buf.copy()
                k = 0
    if k:
        yield buf[:k].copy()


def condition_matrix(sq: SymmetricQuandle, p: int, reverse: bool = False) -> np.ndarray:
    blocks = list(condition_row_blocks(sq, p, reverse))
    if not blocks:
        return np.zeros((0, sq.n**3), dtype=np.int64)
    return np.vstack(blocks)


@dataclass(frozen=True)
class FieldCocycleSpace:
    sq: SymmetricQuandle
    p: int
    basis: tuple[np.ndarray, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, table) -> bool:
        """Whether an ``n x n x n`` Z_p table lies in the span of the basis."""
        vec = np.asarray(table, dtype=np.int64).reshape(-1) % self.p
        if not self.basis:
            return not vec.any()
        stacked = np.vstack([b.reshape(-1) for b in self.basis])
        return rank_mod_p(np.vstack([stacked, vec]), self.p) == rank_mod_p(stacked, self.p)


def _symmetry_classes(sq: SymmetricQuandle, p: int) -> tuple[list[int], list[int], set[int]]:
    """Fold conditions (ii) and (iii), which kill a value or tie two values up to sign.

    Returns ``(root, sign, dead)`` with ``phi[v] == sign[v] * phi[root[v]]``
    for every variable index ``v``; ``dead`` holds the roots forced to zero.
    Each root is the least index in its class.
    """
    n = sq.n
    size = n**3
    parent = list(range(size))
    sign = [1] * size
    dead: set[int] = set()

    def find(v: int) -> tuple[int, int]:
        path = []
        while parent[v] != v:
            path.append(v)
            v = parent[v]
        root = v
        # compress from the top of the path down, accumulating signs
        acc = 1
        for u in reversed(path):
            acc *= sign[u]
            parent[u], sign[u] = root, acc
        return root, (sign[path[0]] if path else 1)

    def tie(v: int, w: int, rel: int) -> None:
        # phi[v] == rel * phi[w]
        rv, sv = find(v)
        rw, sw = find(w)
        k = sv * rel * sw  # phi[rv] == k * phi[rw]
        if rv == rw:
            if k == -1 and p != 2:
                dead.add(rv)
            return
        lo, hi = min(rv, rw), max(rv, rw)
        parent[hi], sign[hi] = lo, k
        if hi in dead:
            dead.discard(hi)
            dead.add(lo)

    for name, _, terms in condition_instances(sq):
        if name == COND_II:
            (_, t), = terms
            dead.add(find(triple_index(n, t))[0])
        elif name == COND_III:
            (_, t0), (_, t1) = terms
            tie(triple_index(n, t1), triple_index(n, t0), -1)
    roots, signs = [], []
    for v in range(size):
        r, s = find(v)
        roots.append(r)
        signs.append(s)
    return roots, signs, dead


def cocycle_kernel_basis(sq: SymmetricQuandle, p: int) -> FieldCocycleSpace:
    """Basis of all Z_p-valued maps on X^3 satisfying conditions (i)-(iii).

    Conditions (ii) and (iii) are folded into signed variable classes first;
    condition (i) is then solved by elimination over the live class
    representatives, ordered lexicographically by their least triple.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if sq.n > MAX_KERNEL_ORDER:
        raise ValueError(f"|X| = {sq.n} exceeds the kernel size guard of {MAX_KERNEL_ORDER}")
    n = sq.n
    roots, signs, dead = _symmetry_classes(sq, p)
    live = sorted({r for r in roots if r not in dead})
    column = {r: i for i, r in enumerate(live)}
    k = len(live)

    def blocks(block: int = 1024):
        buf = np.zeros((block, k), dtype=np.int64)
        used = 0
        for name, _, terms in condition_instances(sq):
            if name != COND_I:
                continue
            row = buf[used]
            row[:] = 0
            for coef, t in terms:
                v = triple_index(n, t)
                c = column.get(roots[v])
                if c is not None:
                    row[c] += coef * signs[v]
            row %= p
            if row.any():
                used += 1
                if used == block:
                    yield buf.copy()
                    used = 0
        if used:
            yield buf[:used].copy()

    if k:
        rref, pivots = rref_blocks_mod_p(blocks(), k, p)
        reduced = nullspace_from_rref(rref, pivots, k, p)
    else:
        reduced = np.zeros((0, 0), dtype=np.int64)
    basis = []
    for vec in reduced:
        full = np.zeros(n**3, dtype=np.int64)
        for v in range(n**3):
            c = column.get(roots[v])
            if c is not None:
                full[v] = (signs[v] * vec[c]) % p
        basis.append(full.reshape(n, n, n))
    return FieldCocycleSpace(sq, p, tuple(basis))
