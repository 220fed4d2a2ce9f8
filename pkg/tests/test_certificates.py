# test_certificates.py
import copy
import hashlib
import json
from dataclasses import replace

import numpy as np
import pytest

from sasgames.certificates import (
    Certificate,
    OddBlock,
    ProductWitness,
    build_certificate,
    certificate_from_json,
    certificate_to_json,
    verify_certificate,
)
from sasgames.constants import JSON_KEYS
from sasgames.errors import GameFormatError, PreconditionError
from sasgames.game.generate import enumerate_games, random_game
from sasgames.game.spg_format import parse_game
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.sas import solve_sas


# 1. Shapes of bundled certificates
def test_fig1_even_certificate(fig1):
    cert = build_certificate(fig1)
    assert cert.kind == "even" and cert.d == 2
    assert cert.region == (0, 1, 2, 3)
    assert cert.child.kind == "empty"
    assert cert.witness.moves
    assert cert.size() == 2
    assert verify_certificate(fig1, cert)


def test_fig6_odd_chain(fig6):
    cert = build_certificate(fig6)
    assert cert.kind == "even"
    child = cert.child
    assert child.kind == "odd" and child.d == 1
    assert len(child.blocks) == 1
    assert child.blocks[0].trap == (1,)
    assert child.blocks[0].attractor == (0, 1)
    assert verify_certificate(fig6, cert)


def test_fig5_partial_region(fig5):
    cert = build_certificate(fig5)
    assert cert.region == (2, 3)
    assert verify_certificate(fig5, cert)


def test_every_example_certifies(example_game):
    cert = build_certificate(example_game)
    assert cert.region == tuple(solve_sas(example_game).w1)
    assert verify_certificate(example_game, cert)


# 2. Rejections
@pytest.mark.parametrize("trap", [(0, 1), ()])
def test_mutated_trap_is_rejected(fig6, trap):
    cert = build_certificate(fig6)
    block = replace(cert.child.blocks[0], trap=trap)
    bad = replace(cert, child=replace(cert.child, blocks=(block,)))
    verdict = verify_certificate(fig6, bad)
    assert not verdict
    assert "block1" in verdict.diagnostic


def test_region_that_is_not_a_trap(fig5):
    bad = replace(build_certificate(fig5), region=(1, 2, 3))
    verdict = verify_certificate(fig5, bad)
    assert not verdict
    assert "trap" in verdict.diagnostic


def test_odd_certificate_without_blocks(all_odd):
    cert = Certificate("odd", n=2, region=(0, 1), d=1, blocks=())
    verdict = verify_certificate(all_odd, cert)
    assert not verdict
    assert "without blocks" in verdict.diagnostic


def test_wrong_priority_and_size(fig1, fig5):
    cert = build_certificate(fig1)
    assert not verify_certificate(fig1, replace(cert, d=4))
    assert not verify_certificate(fig5, cert)


def test_missing_witness_move(fig1):
    cert = build_certificate(fig1)
    witness = ProductWitness(cert.witness.states, cert.witness.moves[1:])
    verdict = verify_certificate(fig1, replace(cert, witness=witness))
    assert not verdict
    assert "illegal" in verdict.diagnostic


def test_empty_claim_needs_empty_certificate(all_odd):
    assert verify_certificate(all_odd, Certificate("empty", 2, ()))
    assert not verify_certificate(all_odd, Certificate("odd", 2, (), d=1))


# 3. Building preconditions
def test_build_preconditions(fig1, fig5):
    with pytest.raises(PreconditionError):
        build_certificate(fig1, trace=solve_sas(fig5).trace)
    with pytest.raises(PreconditionError):
        build_certificate(fig5, region=VertexSet.from_ids(5, [0]))


def test_verifier_does_not_solve(fig6, monkeypatch):
    cert = build_certificate(fig6)

    def boom(*args, **kwargs):
        raise AssertionError("the verifier must not call the solver")

    monkeypatch.setattr("sasgames.certificates.certificate.solve_sas", boom)
    assert verify_certificate(fig6, cert)


# 4. Documents
def test_json_round_trip(fig6):
    cert = build_certificate(fig6)
    document = certificate_to_json(fig6, cert)
    assert document["game"] == fig6.digest()
    again = certificate_from_json(document)
    assert again == cert
    assert verify_certificate(fig6, again)


def test_tampered_document(fig6):
    document = certificate_to_json(fig6, build_certificate(fig6))
    document["certificate"]["region"] = [0]
    with pytest.raises(GameFormatError):
        certificate_from_json(document)
    with pytest.raises(GameFormatError):
        certificate_from_json({"schema": 1, "kind": "strategy"})


@pytest.mark.parametrize("seed", range(25))
def test_random_certificates_verify(seed):
    game = random_game(seed, 6)
    cert = build_certificate(game)
    assert cert.region == tuple(solve_sas(game).w1.to_list())
    again = certificate_from_json(certificate_to_json(game, cert))
    assert verify_certificate(game, again, jobs=2)


# 5. Sinks in the input
def test_sink_only_block(user_sink):
    cert = build_certificate(user_sink)
    assert cert.kind == "odd" and cert.region == (0,)
    (block,) = cert.blocks
    assert block.trap == () and block.attractor == (0,)
    assert block.child.kind == "empty"
    assert verify_certificate(user_sink, cert)
    document = certificate_to_json(user_sink, cert)
    assert certificate_from_json(document) == cert


def test_empty_block_needs_progress():
    game = parse_game(
        "spg 1;\n"
        "vertex 0 owner=p1 p1=1 p2=0 succ=0;\n"
        "vertex 1 owner=rand p1=0 p2=0 succ=1:1/1 label=v_sink;\n"
    )
    idle = OddBlock((), (), Certificate("empty", 2, ()))
    verdict = verify_certificate(game, Certificate("odd", 2, (0,), d=1, blocks=(idle,)))
    assert not verdict
    assert "block1: block covers no vertex" in verdict.diagnostic


# 6. Full corpus
@pytest.mark.slow
@pytest.mark.parametrize("random_vertex", [None, 0])
def test_every_winning_two_vertex_game_certifies(random_vertex):
    for game in enumerate_games(2, max_succ=2, max_priority=3, random_vertex=random_vertex):
        if not solve_sas(game).w1:
            continue
        assert verify_certificate(game, build_certificate(game))


def _leaves(node, path=()):
    if isinstance(node, dict):
        for key in sorted(node):
            yield from _leaves(node[key], path + (key,))
    elif isinstance(node, list):
        for i, item in enumerate(node):
            yield from _leaves(item, path + (i,))
    elif isinstance(node, (int, str)) and not isinstance(node, bool):
        yield path


def _mutate(body, rng, n):
    """Change one leaf of a certificate body: an id, a priority or a kind."""
    body = copy.deepcopy(body)
    paths = list(_leaves(body))
    path = paths[int(rng.integers(len(paths)))]
    parent = body
    for key in path[:-1]:
        parent = parent[key]
    old = parent[path[-1]]
    if isinstance(old, str):
        parent[path[-1]] = str(rng.choice([k for k in ("empty", "even", "odd") if k != old]))
    else:
        parent[path[-1]] = int(rng.choice([x for x in range(-1, max(n, old) + 2) if x != old]))
    return body


def _resigned(game, cert, body):
    document = certificate_to_json(game, cert)
    document["certificate"] = body
    payload = json.dumps(body, sort_keys=True, separators=(",", ":"))
    document[JSON_KEYS.DIGEST] = hashlib.sha256(payload.encode()).hexdigest()
    return document


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_mutated_certificates_never_overclaim(seed):
    game = random_game(seed, 5)
    w1 = solve_sas(game).w1
    if not w1:
        pytest.skip("Player 1 wins nothing")
    cert = build_certificate(game)
    body = certificate_to_json(game, cert)["certificate"]
    rng = np.random.default_rng(seed)
    for _ in range(100):
        try:
            mutated = certificate_from_json(_resigned(game, cert, _mutate(body, rng, game.n)))
        except GameFormatError:
            continue
        if verify_certificate(game, mutated):
            assert set(mutated.region) <= set(w1)
