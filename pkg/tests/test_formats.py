import pytest
from hypothesis import given

from buchi_games.errors import GameSyntaxError, MixedTraceError, ZeroOutdegreeError
from buchi_games.game_graph import GameGraph
from buchi_games.utils.formats import (EventKind, TraceEvent, parse_game, parse_trace,
                                       render_game, render_trace)

from .strategies import games

F1_TEXT = """\
buchi-game v1
vertices 1
0 1 1
edges 1
0 0
"""


def test_parse_single_vertex() -> None:
    g = parse_game(F1_TEXT)
    assert g.n == 1
    assert g.buchi == [True]
    assert g.edges() == [(0, 0)]


def test_comments_and_blank_lines_are_skipped() -> None:
    text = "# game\n\n" + F1_TEXT.replace("edges 1", "# edges follow\nedges   1")
    assert parse_game(text) == parse_game(F1_TEXT)


def test_edge_count_mismatch() -> None:
    with pytest.raises(GameSyntaxError) as exc:
        parse_game(F1_TEXT.replace("edges 1", "edges 2"))
    assert exc.value.line == 5


def test_missing_outedges() -> None:
    text = "buchi-game v1\nvertices 2\n0 1 0\n1 2 0\nedges 1\n0 1\n"
    with pytest.raises(ZeroOutdegreeError):
        parse_game(text)


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("buchi-game v2\n", 1),
        ("buchi-game v1\nvertices 1\n0 3 1\nedges 1\n0 0\n", 3),
        ("buchi-game v1\nvertices 1\n1 1 1\nedges 1\n0 0\n", 3),
        ("buchi-game v1\nvertices 1\n0 1 1\nedges 1\n0 4\n", 5),
        ("buchi-game v1\nvertices 1\n0 1 x\nedges 1\n0 0\n", 3),
        ("buchi-game v1\nvertices 2\n0 1 1\n", 3),
    ],
)
def test_syntax_errors_carry_line_numbers(text: str, line: int) -> None:
    with pytest.raises(GameSyntaxError) as exc:
        parse_game(text)
    assert exc.value.line == line


@given(games(max_n=10, max_outdeg=4))
def test_render_then_parse_preserves_edge_order(g: GameGraph) -> None:
    parsed = parse_game(render_game(g))
    assert parsed == g
    assert parsed.edges() == g.edges()


def test_render_rejects_removed_vertices(f2: GameGraph) -> None:
    f2.remove_vertices({2})
    with pytest.raises(ValueError):
        render_game(f2)


def test_parse_trace() -> None:
    events = parse_trace("# deletions\ndelete 0 1\nquery\n\ndelete 2 3\n")
    assert events == [
        TraceEvent(EventKind.DELETE, 0, 1),
        TraceEvent(EventKind.QUERY),
        TraceEvent(EventKind.DELETE, 2, 3),
    ]
    assert parse_trace(render_trace(events)) == events


def test_mixed_trace_is_rejected() -> None:
    with pytest.raises(MixedTraceError):
        parse_trace("delete 0 1\ninsert 1 0\n")


@pytest.mark.parametrize("text", ["remove 0 1\n", "query 1\n", "insert 0\n", "delete a 1\n"])
def test_bad_trace_lines(text: str) -> None:
    with pytest.raises(GameSyntaxError):
        parse_trace(text)
