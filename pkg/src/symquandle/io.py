"""JSON file formats for quandles, cocycles, diagrams and movies, plus bundled assets."""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from .algebra import AbelianElement, AbelianSignature, Quandle, SymmetricQuandle, symmetric_quandle, verify_quandle
from .cocycle import Cocycle3, verify_cocycle3
from .diagram import LinkDiagram, diagram_from_json
from .errors import MalformedInputError
from .movie import ComponentSummary, Movie, R3Record, TriplePointEvent

ASSETS_ENV = "QF_ASSETS"


def assets_dir() -> Path:
    """Directory of bundled JSON assets; ``$QF_ASSETS`` overrides it."""
    override = os.environ.get(ASSETS_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("symquandle") / "assets"))


def asset_path(name: str) -> Path:
    return assets_dir() / name


def read_json(path: str | os.PathLike) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def dumps(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- quandles ------------------------------------------------------------------------


def quandle_from_json(data: Mapping) -> tuple[Quandle, tuple[int, ...] | None]:
    """Validate the quandle part of a quandle file; ``rho`` is returned unchecked."""
    if not isinstance(data, Mapping) or "table" not in data:
        raise MalformedInputError("quandle file needs a 'table' field")
    table = data["table"]
    if "n" in data and (not isinstance(table, list) or data["n"] != len(table)):
        raise MalformedInputError(f"'n' = {data['n']} does not match the table size")
    q = verify_quandle(table, name=str(data.get("name", "")))
    rho = data.get("rho")
    if rho is not None:
        if not isinstance(rho, list):
            raise MalformedInputError("'rho' must be a list")
        rho = tuple(rho)
    return q, rho


def symmetric_quandle_from_json(data: Mapping) -> SymmetricQuandle:
    q, rho = quandle_from_json(data)
    return symmetric_quandle(q, rho)


def quandle_to_json(q: Quandle, rho=None) -> dict:
    out: dict[str, Any] = {"n": q.n, "table": [list(r) for r in q.table]}
    if q.name:
        out["name"] = q.name
    if rho is not None:
        out["rho"] = list(rho)
    return out


def load_symmetric_quandle(path: str | os.PathLike) -> SymmetricQuandle:
    return symmetric_quandle_from_json(read_json(path))


# -- cocycles ------------------------------------------------------------------------


def _signature(data: Any) -> AbelianSignature:
    if not isinstance(data, Mapping) or "s" not in data or "t" not in data:
        raise MalformedInputError("'signature' must be an object with 's' and 't'")
    return AbelianSignature(data["s"], data["t"])


def cocycle_values_from_json(data: Mapping) -> tuple[AbelianSignature, dict]:
    if not isinstance(data, Mapping):
        raise MalformedInputError("cocycle file must be a JSON object")
    sig = _signature(data.get("signature"))
    values = {}
    for i, e in enumerate(data.get("entries", [])):
        try:
            triple = tuple(e["triple"])
            alphas = tuple(e.get("alphas", [0] * sig.s))
            betas = tuple(e.get("betas", [0] * sig.t))
        except (KeyError, TypeError):
            raise MalformedInputError(f"entries[{i}] needs 'triple', 'alphas' and 'betas'") from None
        if len(triple) != 3:
            raise MalformedInputError(f"entries[{i}].triple must have three elements")
        if triple in values:
            raise MalformedInputError(f"entries[{i}]: triple {list(triple)} listed twice")
        try:
            elt = AbelianElement(AbelianSignature(len(alphas), len(betas)), alphas, betas)
        except MalformedInputError as exc:
            raise MalformedInputError(f"entries[{i}]: {exc}") from None
        values[triple] = elt
    return sig, values


def cocycle_from_json(data: Mapping, sq: SymmetricQuandle) -> Cocycle3:
    sig, values = cocycle_values_from_json(data)
    return verify_cocycle3(sq, sig, values)


def cocycle_to_json(phi: Cocycle3) -> dict:
    return {
        "signature": {"s": phi.signature.s, "t": phi.signature.t},
        "entries": [
            {"triple": list(t), "alphas": list(phi.values[t].alphas), "betas": list(phi.values[t].betas)}
            for t in phi.support()
        ],
    }


# -- diagrams ---------------------------------------------------------------------


def load_diagram(path: str | os.PathLike) -> LinkDiagram:
    return diagram_from_json(read_json(path), name=Path(path).stem)


# -- movies -------------------------------------------------------------------------


def _resolve_quandle(ref: Any, base: Path | None) -> SymmetricQuandle:
    if isinstance(ref, Mapping):
        return symmetric_quandle_from_json(ref)
    if isinstance(ref, str):
        candidates = [Path(ref)]
        if base is not None:
            candidates.insert(0, base / ref)
        candidates.append(assets_dir() / ref)
        for c in candidates:
            if c.is_file():
                return load_symmetric_quandle(c)
        raise MalformedInputError(f"quandle file {ref!r} not found")
    raise MalformedInputError("'quandle' must be a path or an inline quandle object")


def movie_from_json(data: Mapping, base: Path | None = None) -> Movie:
    if not isinstance(data, Mapping):
        raise MalformedInputError("movie file must be a JSON object")
    if "quandle" not in data:
        raise MalformedInputError("movie file needs a 'quandle' field")
    sq = _resolve_quandle(data["quandle"], base)
    comps = []
    for i, c in enumerate(data.get("components", [])):
        try:
            comps.append(ComponentSummary(str(c["name"]), bool(c["orientable"]), c["births"], c["deaths"], c["saddles"]))
        except (KeyError, TypeError):
            raise MalformedInputError(
                f"components[{i}] needs name, orientable, births, deaths and saddles"
            ) from None
    triples = []
    for i, t in enumerate(data.get("triples", [])):
        try:
            color = t["color"]
            if len(color) != 3:
                raise TypeError
            triples.append(TriplePointEvent(int(t["epsilon"]), *(int(x) for x in color)))
        except (KeyError, TypeError, ValueError):
            raise MalformedInputError(f"triples[{i}] needs 'epsilon' and a 3-element 'color'") from None
    records = None
    if "r3_details" in data:
        try:
            records = tuple(
                R3Record(r["x"], r["y"], r["z"], r["xy"], r["xz"], r["yz"], r["xyz"], r.get("epsilon", 1))
                for r in data["r3_details"]
            )
        except (KeyError, TypeError):
            raise MalformedInputError("r3_details entries need x, y, z, xy, xz, yz, xyz") from None
    return Movie(sq, tuple(comps), tuple(triples), records)


def movie_to_json(movie: Movie, quandle_ref: Any = None) -> dict:
    out: dict[str, Any] = {
        "quandle": quandle_ref
        if quandle_ref is not None
        else quandle_to_json(movie.sq.quandle, movie.sq.involution.rho),
        "components": [
            {"name": c.name, "orientable": c.orientable, "births": c.births, "deaths": c.deaths, "saddles": c.saddles}
            for c in movie.components
        ],
        "triples": [{"epsilon": e.epsilon, "color": list(e.color)} for e in movie.triples],
    }
    if movie.r3_details is not None:
        out["r3_details"] = [
            {"x": r.x, "y": r.y, "z": r.z, "xy": r.xy, "xz": r.xz, "yz": r.yz, "xyz": r.xyz, "epsilon": r.epsilon}
            for r in movie.r3_details
        ]
    return out


def load_movie(path: str | os.PathLike) -> Movie:
    path = Path(path)
    return movie_from_json(read_json(path), base=path.parent)
