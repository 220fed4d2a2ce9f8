import pytest

from sasgames.data import example_path
from sasgames.game.core import build_game
from sasgames.game.spg_format import load_game, parse_game

EXAMPLE_GAMES = ["fig1.spg", "fig2.spg", "fig4.spg", "fig5.spg", "fig6.spg"]


@pytest.fixture
def fig1():
    return load_game(example_path("fig1.spg"))


@pytest.fixture
def fig4():
    return load_game(example_path("fig4.spg"))


@pytest.fixture
def fig5():
    return load_game(example_path("fig5.spg"))


@pytest.fixture
def fig6():
    return load_game(example_path("fig6.spg"))


@pytest.fixture
def all_odd():
    return load_game(example_path("omega1-all-odd.spg"))


@pytest.fixture
def trivial_game():
    """Two Player-1 vertices with priorities (0, 0) everywhere."""
    return build_game([("p1", 0, 0, (0, 1)), ("p1", 0, 0, (0,))])


@pytest.fixture(params=EXAMPLE_GAMES)
def example_game(request):
    return load_game(example_path(request.param))


@pytest.fixture
def user_sink():
    """Player 1 can leave a co-Büchi loop into an absorbing sink."""
    return parse_game(
        "spg 1;\n"
        "vertex 0 owner=p1 p1=1 p2=0 succ=0,1;\n"
        "vertex 1 owner=rand p1=0 p2=0 succ=1:1/1 label=v_sink;\n"
    )
