"""Regenerate the bundled JSON assets under src/symquandle/assets."""

from __future__ import annotations

from pathlib import Path

from symquandle.algebra import P3_RHO, P3_TABLE, dihedral_quandle, trivial_quandle
from symquandle.cocycle import make_theta
from symquandle.diagram import from_braid
from symquandle.io import cocycle_to_json, dumps, movie_to_json, quandle_to_json
from symquandle.movie import FamilyParams, generate_family

OUT = Path(__file__).resolve().parents[1] / "src" / "symquandle" / "assets"


def write(name: str, data) -> None:
    (OUT / name).write_text(dumps(data), encoding="utf-8")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    write("p3.json", {"n": 3, "table": [list(r) for r in P3_TABLE], "rho": list(P3_RHO)})
    write("t1.json", quandle_to_json(trivial_quandle(1), [0]))
    write("t2_id.json", quandle_to_json(trivial_quandle(2), [0, 1]))
    write("r3.json", quandle_to_json(dihedral_quandle(3)))
    write("r3_id.json", quandle_to_json(dihedral_quandle(3), [0, 1, 2]))
    write("r4.json", quandle_to_json(dihedral_quandle(4)))
    write("broken.json", {"n": 2, "table": [[1, 0], [0, 1]]})

    write("theta.json", cocycle_to_json(make_theta()))
    write("zero.json", {"signature": {"s": 1, "t": 1}, "entries": []})

    diagrams = {
        "unknot": ([], 1),
        "trefoil": ([1, 1, 1], 2),
        "figure_eight": ([1, -2, 1, -2], 3),
        "hopf": ([1, 1], 2),
        # Reidemeister pairs: each file differs from its partner by one move
        "trefoil_r1": ([1, 1, 1, 2], 3),
        "trefoil_r2": ([1, 1, 1, 1, -1], 2),
        "r3_left": ([1, 2, 1], 3),
        "r3_right": ([2, 1, 2], 3),
    }
    for name, (word, strands) in diagrams.items():
        write(f"{name}.json", from_braid(word, strands).to_json())

    movie = generate_family(FamilyParams(0, 2, (), (2, 4)))
    write("movie_k0_m2_g2_4.json", movie_to_json(movie, quandle_ref="p3.json"))


if __name__ == "__main__":
    main()
