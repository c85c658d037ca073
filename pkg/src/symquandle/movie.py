"""Motion pictures reduced to what the weight computation needs.

A :class:`Movie` keeps Morse counts per surface component and the ordered
list of colored triple points (one per Reidemeister III move between
stills).  The weight of a cocycle is the signed sum of its values on the
triple point colors; when the cocycle only takes values 0, p_i or +-q_j,
the norm of that sum bounds the triple point number from below.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import AbelianElement, Quandle, SymmetricQuandle, abelian_zero, bound_norm, p3_symmetric
from .cocycle import Cocycle3, make_theta
from .errors import Check, InconsistencyError, MalformedInputError


@dataclass(frozen=True)
class TriplePointEvent:
    epsilon: int
    bottom: int
    middle: int
    top: int

    @property
    def color(self) -> tuple[int, int, int]:
        return (self.bottom, self.middle, self.top)


@dataclass(frozen=True)
class R3Record:
    """Labels around one Reidemeister III move: inputs x, y, z and the four derived products."""

    x: int
    y: int
    z: int
    xy: int
    xz: int
    yz: int
    xyz: int
    epsilon: int = 1

    @classmethod
    def from_colors(cls, q: Quandle, x: int, y: int, z: int, epsilon: int = 1) -> "R3Record":
        return cls(x, y, z, q.op(x, y), q.op(x, z), q.op(y, z), q.op(q.op(x, y), z), epsilon)


def verify_r3(rec: R3Record, q: Quandle) -> Check:
    for label, got, want in (
        ("x^y", rec.xy, q.op(rec.x, rec.y)),
        ("x^z", rec.xz, q.op(rec.x, rec.z)),
        ("y^z", rec.yz, q.op(rec.y, rec.z)),
        ("(x^y)^z", rec.xyz, q.op(q.op(rec.x, rec.y), rec.z)),
    ):
        if got != want:
            return Check(False, f"{label} recorded as {got}, table gives {want} for (x,y,z)=({rec.x},{rec.y},{rec.z})")
    return Check(True)


@dataclass(frozen=True)
class ComponentSummary:
    name: str
    orientable: bool
    births: int
    deaths: int
    saddles: int

    def __post_init__(self):
        for label in ("births", "deaths", "saddles"):
            v = getattr(self, label)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise MalformedInputError(f"component {self.name!r}: {label} must be a non-negative integer, got {v!r}")

    @property
    def euler(self) -> int:
        return self.births + self.deaths - self.saddles


@dataclass(frozen=True)
class Genus:
    euler: int
    genus: int


def euler_and_genus(c: ComponentSummary) -> Genus:
    """Euler characteristic and genus of a closed component from its Morse counts.

    Non-orientable genus is the number of cross-caps, ``2 - euler``.
    """
    if c.births < 1 or c.deaths < 1:
        raise InconsistencyError(f"component {c.name!r}: a closed surface needs at least one minimum and one maximum")
    chi = c.euler
    if chi > 2:
        raise InconsistencyError(f"component {c.name!r}: Euler characteristic {chi} exceeds 2")
    if c.orientable:
        if chi % 2:
            raise InconsistencyError(f"component {c.name!r}: orientable surface with odd Euler characteristic {chi}")
        return Genus(chi, (2 - chi) // 2)
    if chi == 2:
        raise InconsistencyError(f"component {c.name!r}: non-orientable surface cannot have Euler characteristic 2")
    return Genus(chi, 2 - chi)


@dataclass(frozen=True)
class Movie:
    sq: SymmetricQuandle
    components: tuple[ComponentSummary, ...]
    triples: tuple[TriplePointEvent, ...]
    r3_details: tuple[R3Record, ...] | None = None

    def __post_init__(self):
        n = self.sq.n
        seen = set()
        for i, ev in enumerate(self.triples):
            if ev in seen:
                continue
            seen.add(ev)
            if ev.epsilon not in (1, -1):
                raise MalformedInputError(f"triple {i}: epsilon must be +1 or -1, got {ev.epsilon}")
            if not all(0 <= x < n for x in ev.color):
                raise MalformedInputError(f"triple {i}: color {ev.color} is outside the quandle")
        if self.r3_details is not None:
            if len(self.r3_details) != len(self.triples):
                raise MalformedInputError("r3_details must align one-to-one with triples")
            checked = set()
            for i, (rec, ev) in enumerate(zip(self.r3_details, self.triples)):
                if (rec.x, rec.y, rec.z, rec.epsilon) != (*ev.color, ev.epsilon):
                    raise InconsistencyError(f"r3_details[{i}] does not match triple {i}")
                if rec in checked:
                    continue
                check = verify_r3(rec, self.sq.quandle)
                if not check:
                    raise InconsistencyError(f"r3_details[{i}]: {check.witness}")
                checked.add(rec)


def weight(movie: Movie, phi: Cocycle3) -> AbelianElement:
    """Sum of ``epsilon * phi(x, y, z)`` over the triple points of ``movie``."""
    if movie.sq != phi.sq:
        raise MalformedInputError("the movie and the cocycle are over different symmetric quandles")
    total = abelian_zero(phi.signature)
    for (eps, color), n in Counter((ev.epsilon, ev.color) for ev in movie.triples).items():
        total = total + (eps * n) * phi(*color)
    return total


def lower_bound(w: AbelianElement, phi: Cocycle3) -> int | None:
    """Triple point lower bound from a weight, or ``None`` when ``phi`` takes disallowed values."""
    if w.signature != phi.signature:
        raise MalformedInputError(f"weight signature {w.signature} differs from cocycle signature {phi.signature}")
    if not phi.admissibility:
        return None
    return bound_norm(w)


# -- the surface-link family ---------------------------------------------------


@dataclass(frozen=True)
class FamilyParams:
    k: int
    m: int
    g: tuple[int, ...] = ()
    gprime: tuple[int, ...] = ()

    def __post_init__(self):
        for label in ("k", "m"):
            v = getattr(self, label)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise MalformedInputError(f"{label} must be a non-negative integer, got {v!r}")
        object.__setattr__(self, "g", tuple(self.g))
        object.__setattr__(self, "gprime", tuple(self.gprime))
        if len(self.g) != self.k:
            raise MalformedInputError(f"g must list k = {self.k} genera, got {len(self.g)}")
        if len(self.gprime) != self.m:
            raise MalformedInputError(f"g' must list m = {self.m} genera, got {len(self.gprime)}")
        if any(not isinstance(v, int) or v < 0 for v in self.g):
            raise MalformedInputError(f"g must be non-negative integers, got {list(self.g)}")
        if any(not isinstance(v, int) or v < 2 or v % 2 for v in self.gprime):
            raise MalformedInputError(f"g' must be even and >= 2, got {list(self.gprime)}")


NEGATIVE_COLOR = (2, 0, 2)
POSITIVE_COLOR = (1, 0, 2)


def generate_family(p: FamilyParams) -> Movie:
    """Morse counts and triple points of the (P3, rho)-colored family movie."""
    sq = p3_symmetric()
    comps = [ComponentSummary("G", True, 1, 1, 2 * (p.k + p.m))]
    # F_i: g_i saddles in still (iv) and g_i in still (ix)
    comps += [ComponentSummary(f"F{i + 1}", True, 1, 1, 2 * gi) for i, gi in enumerate(p.g)]
    # F'_i: g'/2 saddles in (iv), g'/2 - 1 in (ix), g'/2 in (xii); g'/2 maxima
    comps += [
        ComponentSummary(f"F'{i + 1}", False, 1, gp // 2, gp // 2 + (gp // 2 - 1) + gp // 2)
        for i, gp in enumerate(p.gprime)
    ]
    half = sum(gp // 2 for gp in p.gprime)
    triples = (TriplePointEvent(-1, *NEGATIVE_COLOR),) * half + (TriplePointEvent(1, *POSITIVE_COLOR),) * half
    records = (R3Record.from_colors(sq.quandle, *NEGATIVE_COLOR, -1),) * half + (
        R3Record.from_colors(sq.quandle, *POSITIVE_COLOR, 1),
    ) * half
    return Movie(sq, tuple(comps), triples, records)


@dataclass(frozen=True)
class ComponentRow:
    name: str
    orientable: bool
    births: int
    deaths: int
    saddles: int
    euler: int
    genus: int


@dataclass(frozen=True)
class Theorem1Report:
    params: FamilyParams
    weight: AbelianElement
    lower_bound: int
    triple_count: int
    components: tuple[ComponentRow, ...] = field(default=())

    @property
    def triple_point_number(self) -> int:
        return self.lower_bound

    def to_json(self) -> dict:
        return {
            "k": self.params.k,
            "m": self.params.m,
            "g": list(self.params.g),
            "gprime": list(self.params.gprime),
            "weight": {
                "signature": {"s": self.weight.signature.s, "t": self.weight.signature.t},
                **self.weight.to_json(),
                "text": str(self.weight),
            },
            "lower_bound": self.lower_bound,
            "triple_count": self.triple_count,
            "t_F": self.triple_point_number,
            "components": [
                {
                    "name": r.name,
                    "orientable": r.orientable,
                    "births": r.births,
                    "deaths": r.deaths,
                    "saddles": r.saddles,
                    "euler": r.euler,
                    "genus": r.genus,
                }
                for r in self.components
            ],
        }


def theorem1_report(p: FamilyParams, theta: Cocycle3 | None = None) -> Theorem1Report:
    """Build the family movie, weigh it with theta and cross-check every count.

    Raises :class:`InconsistencyError` if the bound, the triple count or any
    component genus disagrees with the expected family values.
    """
    theta = theta or make_theta()
    movie = generate_family(p)
    w = weight(movie, theta)
    bound = lower_bound(w, theta)
    if bound is None:
        raise InconsistencyError("theta failed the admissibility check")
    count = len(movie.triples)
    total = sum(p.gprime)
    if w != AbelianElement.of([0], [total]):
        raise InconsistencyError(f"weight {w} differs from 0⊕{total}")
    if bound != count or count != total:
        raise InconsistencyError(f"lower bound {bound}, triple count {count} and sum of g' {total} disagree")
    expected = [p.k + p.m, *p.g, *p.gprime]
    rows = []
    for comp, want in zip(movie.components, expected):
        gen = euler_and_genus(comp)
        if gen.genus != want:
            raise InconsistencyError(f"component {comp.name} has genus {gen.genus}, expected {want}")
        rows.append(ComponentRow(comp.name, comp.orientable, comp.births, comp.deaths, comp.saddles, gen.euler, gen.genus))
    return Theorem1Report(p, w, bound, count, tuple(rows))


def format_report(r: Theorem1Report) -> str:
    lines = [
        f"family k={r.params.k} m={r.params.m} g={list(r.params.g)} g'={list(r.params.gprime)}",
        f"{'component':<10} {'orientable':<11} {'min':>4} {'max':>4} {'saddle':>6} {'euler':>6} {'genus':>6}",
    ]
    for c in r.components:
        lines.append(
            f"{c.name:<10} {'yes' if c.orientable else 'no':<11} {c.births:>4} {c.deaths:>4} "
            f"{c.saddles:>6} {c.euler:>6} {c.genus:>6}"
        )
    lines.append(f"triple points = {r.triple_count}; lower bound = {r.lower_bound}")
    lines.append(f"weight = {r.weight}; t(F) = {r.triple_point_number}")
    return "\n".join(lines)


def movie_events(triples: Sequence[tuple[int, Sequence[int]]]) -> tuple[TriplePointEvent, ...]:
    """Shorthand: ``[(epsilon, (x, y, z)), ...]`` to events."""
    return tuple(TriplePointEvent(e, *c) for e, c in triples)
