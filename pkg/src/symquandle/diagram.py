"""Classical link diagrams built from semi-arcs, and their (X, rho)-colorings.

A diagram is cut at every crossing passage, over and under alike, so each
crossing has two incoming and two outgoing semi-arcs.  Every semi-arc is
colored with respect to its reference normal: the tangent turned +90
degrees, i.e. pointing to the left of the direction of travel.  With that
choice fixed, an equivalence class of colorings under basic inversions is
the same thing as a plain array of colors.

Crossing convention: ``sign = +1`` means the reference normal of the over
strand points from the incoming under semi-arc to the outgoing one, so
``out = in^y``.  At ``sign = -1`` it points the other way and
``out = in^rho(y)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, replace
from typing import Iterator, Mapping, Sequence

from .algebra import SymmetricQuandle
from .errors import Check, MalformedInputError


class DiagramParseError(MalformedInputError):
    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


@dataclass(frozen=True)
class Crossing:
    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int

    def arcs(self) -> tuple[int, int, int, int]:
        return (self.over_in, self.over_out, self.under_in, self.under_out)


@dataclass(frozen=True)
class LinkDiagram:
    semi_arc_count: int
    components: tuple[tuple[int, ...], ...]
    crossings: tuple[Crossing, ...]
    crossingless: int = 0
    name: str = field(default="", compare=False)
    _touching: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    def component_of(self, arc: int) -> int:
        for i, comp in enumerate(self.components):
            if arc in comp:
                return i
        raise KeyError(arc)

    def to_json(self) -> dict:
        return {
            "semi_arcs": self.semi_arc_count,
            "components": [list(c) for c in self.components],
            "crossings": [
                {"over": [c.over_in, c.over_out], "under_in": c.under_in, "under_out": c.under_out, "sign": c.sign}
                for c in self.crossings
            ],
            "crossingless": self.crossingless,
        }


def _int_field(obj, key: str, location: str) -> int:
    if key not in obj:
        raise DiagramParseError(location, f"missing field {key!r}")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise DiagramParseError(f"{location}.{key}", f"expected an integer, got {v!r}")
    return v


def build_diagram(
    semi_arcs: int,
    components: Sequence[Sequence[int]],
    crossings: Sequence[Crossing],
    crossingless: int = 0,
    name: str = "",
) -> LinkDiagram:
    """Validate the combinatorics and return a :class:`LinkDiagram`."""
    if semi_arcs < 0:
        raise DiagramParseError("semi_arcs", "must be non-negative")
    if crossingless < 0:
        raise DiagramParseError("crossingless", "must be non-negative")
    owner: dict[int, tuple[int, int]] = {}
    for ci, comp in enumerate(components):
        if not comp:
            raise DiagramParseError(f"components[{ci}]", "empty component (use 'crossingless' for circles without crossings)")
        for pos, arc in enumerate(comp):
            loc = f"components[{ci}][{pos}]"
            if not 0 <= arc < semi_arcs:
                raise DiagramParseError(loc, f"semi-arc id {arc} is undefined (ids are 0..{semi_arcs - 1})")
            if arc in owner:
                raise DiagramParseError(loc, f"duplicate semi-arc id {arc}")
            owner[arc] = (ci, pos)
    for arc in range(semi_arcs):
        if arc not in owner:
            raise DiagramParseError("components", f"semi-arc {arc} belongs to no component")

    def successor(arc: int) -> int:
        ci, pos = owner[arc]
        comp = components[ci]
        return comp[(pos + 1) % len(comp)]

    used: dict[int, str] = {}
    for k, c in enumerate(crossings):
        loc = f"crossings[{k}]"
        for label, arc in zip(("over[0]", "over[1]", "under_in", "under_out"), c.arcs()):
            if not 0 <= arc < semi_arcs:
                raise DiagramParseError(f"{loc}.{label}", f"semi-arc id {arc} is undefined")
        if c.sign not in (1, -1):
            raise DiagramParseError(f"{loc}.sign", f"sign must be +1 or -1, got {c.sign}")
        if successor(c.over_in) != c.over_out:
            raise DiagramParseError(f"{loc}.over", f"over pair ({c.over_in}, {c.over_out}) is not adjacent in its component")
        if successor(c.under_in) != c.under_out:
            raise DiagramParseError(
                f"{loc}.under_in", f"under pair ({c.under_in}, {c.under_out}) is not adjacent in its component"
            )
        for arc in (c.over_in, c.under_in):
            if arc in used:
                raise DiagramParseError(loc, f"semi-arc {arc} ends at two crossings ({used[arc]} and {loc})")
            used[arc] = loc
    for arc in range(semi_arcs):
        if arc not in used:
            raise DiagramParseError("crossings", f"dangling semi-arc {arc}: it ends at no crossing")

    touching = [[] for _ in range(semi_arcs)]
    for k, c in enumerate(crossings):
        for arc in set(c.arcs()):
            touching[arc].append(k)
    return LinkDiagram(
        semi_arcs,
        tuple(tuple(c) for c in components),
        tuple(crossings),
        crossingless,
        name,
        tuple(tuple(t) for t in touching),
    )


def diagram_from_json(data: Mapping, name: str = "") -> LinkDiagram:
    if not isinstance(data, Mapping):
        raise DiagramParseError("$", "diagram must be a JSON object")
    semi_arcs = _int_field(data, "semi_arcs", "$")
    comps = data.get("components", [])
    if not isinstance(comps, list) or not all(isinstance(c, list) for c in comps):
        raise DiagramParseError("components", "expected a list of lists")
    for ci, comp in enumerate(comps):
        for pos, arc in enumerate(comp):
            if isinstance(arc, bool) or not isinstance(arc, int):
                raise DiagramParseError(f"components[{ci}][{pos}]", f"expected an integer, got {arc!r}")
    crossings = []
    raw = data.get("crossings", [])
    if not isinstance(raw, list):
        raise DiagramParseError("crossings", "expected a list")
    for k, c in enumerate(raw):
        loc = f"crossings[{k}]"
        if not isinstance(c, Mapping):
            raise DiagramParseError(loc, "expected an object")
        over = c.get("over")
        if not (isinstance(over, list) and len(over) == 2 and all(isinstance(a, int) and not isinstance(a, bool) for a in over)):
            raise DiagramParseError(f"{loc}.over", "expected a pair of semi-arc ids [in, out]")
        crossings.append(
            Crossing(
                over[0],
                over[1],
                _int_field(c, "under_in", loc),
                _int_field(c, "under_out", loc),
                _int_field(c, "sign", loc),
            )
        )
    crossingless = data.get("crossingless", 0)
    if isinstance(crossingless, bool) or not isinstance(crossingless, int):
        raise DiagramParseError("crossingless", f"expected an integer, got {crossingless!r}")
    return build_diagram(semi_arcs, comps, crossings, crossingless, name or str(data.get("name", "")))


def parse_diagram(text: str, name: str = "") -> LinkDiagram:
    """Parse the JSON extended-PD text format."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return diagram_from_json(data, name)


def from_braid(word: Sequence[int], strands: int, name: str = "") -> LinkDiagram:
    """Diagram of the closure of a braid.

    ``word`` uses 1-based generators: ``i`` is sigma_i (strand in position i
    passes over the strand in position i+1), ``-i`` its inverse.  Strands
    are oriented upward, so sigma_i gives a positive crossing.
    """
    if strands < 1:
        raise MalformedInputError("a braid needs at least one strand")
    next_id = strands
    bottom = list(range(strands))
    current = list(bottom)
    # passage records: (incoming arc, outgoing arc)
    succ: dict[int, int] = {}
    raw_crossings = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1 or g == 0:
            raise MalformedInputError(f"generator {g} is out of range for {strands} strands")
        left_in, right_in = current[i], current[i + 1]
        left_out, right_out = next_id, next_id + 1  # new arcs at positions i, i+1
        next_id += 2
        # the strand from position i moves to i+1 and vice versa
        succ[left_in] = right_out
        succ[right_in] = left_out
        if g > 0:
            raw_crossings.append((left_in, right_out, right_in, left_out, 1))
        else:
            raw_crossings.append((right_in, left_out, left_in, right_out, -1))
        current[i], current[i + 1] = left_out, right_out
    # close up: the arc leaving the top at position j is the arc entering the bottom at j
    alias = {current[j]: bottom[j] for j in range(strands) if current[j] != bottom[j]}

    def a(x: int) -> int:
        return alias.get(x, x)

    arcs_in_use = sorted({a(x) for c in raw_crossings for x in c[:4]})
    renumber = {}
    succ_closed = {a(k): a(v) for k, v in succ.items()}
    components = []
    seen = set()
    for start in arcs_in_use:
        if start in seen:
            continue
        comp = []
        x = start
        while x not in seen:
            seen.add(x)
            comp.append(x)
            x = succ_closed[x]
        components.append(comp)
    for comp in components:
        for x in comp:
            renumber[x] = len(renumber)
    crossings = [
        Crossing(renumber[a(oi)], renumber[a(oo)], renumber[a(ui)], renumber[a(uo)], s)
        for oi, oo, ui, uo, s in raw_crossings
    ]
    # strands never touched by a generator close up into crossingless circles
    crossingless = sum(1 for j in range(strands) if current[j] == bottom[j])
    return build_diagram(
        len(renumber),
        [[renumber[x] for x in comp] for comp in components],
        crossings,
        crossingless,
        name,
    )


def reverse_component(d: LinkDiagram, index: int) -> LinkDiagram:
    """The same diagram with component ``index`` traversed the other way.

    Semi-arc ids are kept.  Every crossing where exactly one strand lies on
    the reversed component changes sign.
    """
    comp = set(d.components[index])
    components = list(d.components)
    components[index] = tuple(reversed(d.components[index]))
    crossings = []
    for c in d.crossings:
        oi, oo, ui, uo, s = c.over_in, c.over_out, c.under_in, c.under_out, c.sign
        if oi in comp:
            oi, oo, s = oo, oi, -s
        if ui in comp:
            ui, uo, s = uo, ui, -s
        crossings.append(Crossing(oi, oo, ui, uo, s))
    return build_diagram(d.semi_arc_count, components, crossings, d.crossingless, d.name)


# -- colorings -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """One (X, rho)-coloring, stored by its reference-normal representative."""

    diagram: LinkDiagram = field(repr=False, compare=False)
    sq: SymmetricQuandle = field(repr=False, compare=False)
    colors: tuple[int, ...]
    crossingless_colors: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "crossingless": list(self.crossingless_colors)}


def _under_out(sq: SymmetricQuandle, x_in: int, y: int, sign: int) -> int:
    return sq.op(x_in, y if sign > 0 else sq.rho(y))


def _under_in(sq: SymmetricQuandle, x_out: int, y: int, sign: int) -> int:
    return sq.quandle.inv(x_out, y if sign > 0 else sq.rho(y))


def verify_coloring(d: LinkDiagram, sq: SymmetricQuandle, colors: Sequence[int], crossingless_colors: Sequence[int] = ()) -> Check:
    """Check a reference-normal color array against every crossing condition."""
    if len(colors) != d.semi_arc_count:
        return Check(False, f"expected {d.semi_arc_count} colors, got {len(colors)}")
    for arc, x in enumerate(colors):
        if not 0 <= x < sq.n:
            return Check(False, f"semi-arc {arc} has color {x} outside the quandle")
    if crossingless_colors and len(crossingless_colors) != d.crossingless:
        return Check(False, f"expected {d.crossingless} crossingless colors, got {len(crossingless_colors)}")
    for x in crossingless_colors:
        if not 0 <= x < sq.n:
            return Check(False, f"crossingless color {x} outside the quandle")
    for k, c in enumerate(d.crossings):
        y = colors[c.over_in]
        if colors[c.over_out] != y:
            return Check(False, f"crossing {k}: over semi-arcs {c.over_in},{c.over_out} carry {y} and {colors[c.over_out]}")
        want = _under_out(sq, colors[c.under_in], y, c.sign)
        if colors[c.under_out] != want:
            return Check(
                False,
                f"crossing {k} (sign {c.sign:+d}): under-out semi-arc {c.under_out} is {colors[c.under_out]}, expected {want}",
            )
    return Check(True)


def _propagate(d: LinkDiagram, sq: SymmetricQuandle, colors: list, queue: list[int]) -> bool:
    """Extend ``colors`` along forced crossing relations; False on contradiction."""
    while queue:
        arc = queue.pop()
        for k in d._touching[arc]:
            c = d.crossings[k]
            y = colors[c.over_in]
            if y is None:
                y = colors[c.over_out]
            if y is None:
                continue
            for o in (c.over_in, c.over_out):
                if colors[o] is None:
                    colors[o] = y
                    queue.append(o)
                elif colors[o] != y:
                    return False
            xi, xo = colors[c.under_in], colors[c.under_out]
            if xi is not None:
                want = _under_out(sq, xi, y, c.sign)
                if xo is None:
                    colors[c.under_out] = want
                    queue.append(c.under_out)
                elif xo != want:
                    return False
            elif xo is not None:
                colors[c.under_in] = _under_in(sq, xo, y, c.sign)
                queue.append(c.under_in)
    return True


def _semi_arc_solutions(d: LinkDiagram, sq: SymmetricQuandle) -> Iterator[tuple[int, ...]]:
    """Backtracking search: branch on the lowest uncolored semi-arc, propagate, repeat."""

    def search(colors: list) -> Iterator[tuple[int, ...]]:
        try:
            arc = colors.index(None)
        except ValueError:
            yield tuple(colors)
            return
        for x in range(sq.n):
            trial = list(colors)
            trial[arc] = x
            if _propagate(d, sq, trial, [arc]):
                yield from search(trial)

    yield from search([None] * d.semi_arc_count)


def _orbit_representatives(sq: SymmetricQuandle) -> list[int]:
    return [orb[0] for orb in sq.involution.orbits()]


def enumerate_colorings(d: LinkDiagram, sq: SymmetricQuandle) -> list[Coloring]:
    """All colorings, one per basic-inversion class, sorted by color array.

    A crossingless circle contributes one choice per rho-orbit of X (its
    least element is stored).
    """
    arcs = sorted(_semi_arc_solutions(d, sq))
    reps = _orbit_representatives(sq)
    free = list(itertools.product(reps, repeat=d.crossingless))
    return [Coloring(d, sq, colors, extra) for colors in arcs for extra in free]


def count_colorings(d: LinkDiagram, sq: SymmetricQuandle) -> int:
    arcs = sum(1 for _ in _semi_arc_solutions(d, sq))
    return arcs * len(_orbit_representatives(sq)) ** d.crossingless


def reversed_coloring(coloring: Coloring, index: int) -> Coloring:
    """Transport a coloring across :func:`reverse_component`: rho on the reversed semi-arcs."""
    d = reverse_component(coloring.diagram, index)
    comp = set(coloring.diagram.components[index])
    sq = coloring.sq
    colors = tuple(sq.rho(x) if arc in comp else x for arc, x in enumerate(coloring.colors))
    return replace(coloring, diagram=d, colors=colors)
