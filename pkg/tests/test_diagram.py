import itertools
import json

import pytest

from conftest import small_quandles
from oracles import brute_force_coloring_count
from symquandle.algebra import enumerate_good_involutions, p3_symmetric, symmetric_quandle, trivial_quandle
from symquandle.diagram import (
    DiagramParseError,
    count_colorings,
    diagram_from_json,
    enumerate_colorings,
    from_braid,
    parse_diagram,
    reverse_component,
    reversed_coloring,
    verify_coloring,
)
from symquandle.io import load_diagram

BUNDLED = ["unknot", "trefoil", "figure_eight", "hopf", "trefoil_r1", "trefoil_r2", "r3_left", "r3_right"]
REIDEMEISTER_PAIRS = [("trefoil", "trefoil_r1"), ("trefoil", "trefoil_r2"), ("r3_left", "r3_right")]


def symmetric_pairs():
    return [symmetric_quandle(q, g.rho) for q in small_quandles() for g in enumerate_good_involutions(q)]


def sq_id(sq):
    return f"{sq.quandle.name}{list(sq.involution.rho)}"


@pytest.fixture(scope="module")
def diagrams(request):
    from symquandle.io import assets_dir

    return {name: load_diagram(assets_dir() / f"{name}.json") for name in BUNDLED}


def oracle_count(d, sq):
    crossings = [(c.over_in, c.over_out, c.under_in, c.under_out, c.sign) for c in d.crossings]
    return brute_force_coloring_count(
        d.semi_arc_count, crossings, d.crossingless, [list(r) for r in sq.quandle.table], list(sq.involution.rho)
    )


# -- parsing ----------------------------------------------------------------------------


def test_bundled_trefoil(diagrams):
    d = diagrams["trefoil"]
    assert d.semi_arc_count == 6 and len(d.crossings) == 3 and len(d.components) == 1


def test_unknot_from_text():
    d = parse_diagram('{"semi_arcs": 0, "components": [], "crossings": [], "crossingless": 1}')
    assert d.crossingless == 1 and d.semi_arc_count == 0


def test_round_trip(diagrams):
    for d in diagrams.values():
        assert diagram_from_json(json.loads(json.dumps(d.to_json()))) == d


def _trefoil_json():
    return from_braid([1, 1, 1], 2).to_json()


def test_undefined_semi_arc():
    data = _trefoil_json()
    data["crossings"][1]["under_in"] = 17
    with pytest.raises(DiagramParseError) as info:
        diagram_from_json(data)
    assert info.value.location == "crossings[1].under_in"


def test_duplicate_semi_arc():
    data = _trefoil_json()
    data["components"][0][2] = data["components"][0][1]
    with pytest.raises(DiagramParseError, match="duplicate"):
        diagram_from_json(data)


def test_non_adjacent_over_pair():
    data = _trefoil_json()
    c = data["crossings"][0]
    c["over"] = [c["over"][0], (c["over"][1] + 2) % 6]
    with pytest.raises(DiagramParseError) as info:
        diagram_from_json(data)
    assert info.value.location == "crossings[0].over"


def test_dangling_semi_arc():
    data = _trefoil_json()
    data["crossings"].pop()
    with pytest.raises(DiagramParseError, match="dangling"):
        diagram_from_json(data)


def test_semi_arc_without_component():
    data = _trefoil_json()
    data["semi_arcs"] = 7
    with pytest.raises(DiagramParseError, match="no component"):
        diagram_from_json(data)


@pytest.mark.parametrize("text", ["{", "[]", '{"components": []}', '{"semi_arcs": 2, "crossings": [{"over": [0]}]}'])
def test_garbage(text):
    with pytest.raises(DiagramParseError):
        parse_diagram(text)


def test_bad_sign():
    data = _trefoil_json()
    data["crossings"][0]["sign"] = 0
    with pytest.raises(DiagramParseError, match="sign"):
        diagram_from_json(data)


# -- verify_coloring ------------------------------------------------------------------


def test_unknot_any_color(diagrams):
    sq = p3_symmetric()
    for x in range(3):
        assert verify_coloring(diagrams["unknot"], sq, [], [x])


def test_trefoil_constant_colors(diagrams, R3id):
    for x in range(3):
        assert verify_coloring(diagrams["trefoil"], R3id, [x] * 6)


def test_trefoil_fox_coloring(diagrams, R3id):
    d = diagrams["trefoil"]
    # the three over-arcs (pairs of semi-arcs joined at a crossing) get 0, 1, 2
    over_pairs = [(c.over_in, c.over_out) for c in d.crossings]
    colors = [None] * 6
    for x, (a, b) in zip((0, 1, 2), over_pairs):
        colors[a] = colors[b] = x
    assert verify_coloring(d, R3id, colors)
    assert brute_force_coloring_count(
        6, [(c.over_in, c.over_out, c.under_in, c.under_out, c.sign) for c in d.crossings], 0,
        [list(r) for r in R3id.quandle.table], [0, 1, 2],
    ) == 9


def test_bad_coloring_witness(diagrams, R3id):
    res = verify_coloring(diagrams["trefoil"], R3id, [0, 0, 0, 0, 0, 1])
    assert not res and "crossing" in res.witness


# -- enumeration ------------------------------------------------------------------------


def test_specific_counts(diagrams, R3id, T2id):
    assert count_colorings(diagrams["trefoil"], R3id) == 9
    assert count_colorings(diagrams["unknot"], p3_symmetric()) == 2
    assert count_colorings(diagrams["hopf"], T2id) == 4
    assert len(enumerate_colorings(diagrams["hopf"], T2id)) == 4


def test_unknot_orbits(diagrams):
    cols = enumerate_colorings(diagrams["unknot"], p3_symmetric())
    assert [c.crossingless_colors for c in cols] == [(0,), (1,)]


def test_everything_over_t1_is_one(diagrams):
    t1 = symmetric_quandle(trivial_quandle(1))
    for d in diagrams.values():
        assert count_colorings(d, t1) == 1


@pytest.mark.parametrize("sq", symmetric_pairs(), ids=sq_id)
@pytest.mark.parametrize("name", BUNDLED)
def test_enumeration_sorted_unique_and_valid(diagrams, name, sq):
    d = diagrams[name]
    cols = enumerate_colorings(d, sq)
    keys = [(c.colors, c.crossingless_colors) for c in cols]
    assert keys == sorted(set(keys))
    assert len(cols) == count_colorings(d, sq)
    for c in cols:
        assert verify_coloring(d, sq, c.colors, c.crossingless_colors)


@pytest.mark.parametrize("sq", symmetric_pairs(), ids=sq_id)
@pytest.mark.parametrize("name", [n for n in BUNDLED if n not in ("trefoil_r2",)])
def test_matches_brute_force_oracle(diagrams, name, sq):
    d = diagrams[name]
    assert d.semi_arc_count <= 8
    assert count_colorings(d, sq) == oracle_count(d, sq)


@pytest.mark.parametrize("sq", symmetric_pairs(), ids=sq_id)
@pytest.mark.parametrize("name", BUNDLED)
def test_reversal_invariance(diagrams, name, sq):
    d = diagrams[name]
    base = enumerate_colorings(d, sq)
    for i in range(len(d.components)):
        rev = reverse_component(d, i)
        moved = sorted(reversed_coloring(c, i).colors for c in base)
        assert moved == sorted(c.colors for c in enumerate_colorings(rev, sq))


@pytest.mark.parametrize("sq", symmetric_pairs(), ids=sq_id)
@pytest.mark.parametrize("left,right", REIDEMEISTER_PAIRS)
def test_reidemeister_pairs(diagrams, left, right, sq):
    assert count_colorings(diagrams[left], sq) == count_colorings(diagrams[right], sq)


def test_from_braid_shapes():
    assert from_braid([1, 1], 2).components == ((0, 1), (2, 3))
    d = from_braid([], 3)
    assert d.crossingless == 3 and d.semi_arc_count == 0
    d = from_braid([1], 3)
    assert d.crossingless == 1 and d.semi_arc_count == 2


def test_reverse_twice_is_identity(diagrams):
    for d in diagrams.values():
        for i in range(len(d.components)):
            assert reverse_component(reverse_component(d, i), i) == d


def test_fox_count_over_r3_matches_classic(diagrams, R3id):
    # number of Fox 3-colorings: trefoil 9, figure-eight 3, Hopf 3 (all over R3)
    expected = {"trefoil": 9, "figure_eight": 3, "hopf": 3}
    for name, n in expected.items():
        assert count_colorings(diagrams[name], R3id) == n
    assert list(itertools.islice(enumerate_colorings(diagrams["figure_eight"], R3id), 3))
