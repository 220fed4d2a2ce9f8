"""
    Certificates of sure-almost-sure winning regions and their verifier.

A certificate claims that Player 1 wins from every vertex of a region `W`
of a game `G`. It always talks about `H`, the restriction of `G` to `W`
and the sinks of `G`, and follows the parity of the largest sure priority
`d` of `H`:

- even: a memoryless strategy of the register product winning the
  conjunction almost surely from every `(v, 0...0)`, and a certificate for
  the closure of `H` minus Player 1's sure attractor to the `d`-vertices;
- odd: a chain of blocks. Block `i` names a region `R_i` of `G_i` without
  `d`-vertices whose union with the sinks is a trap for Player 2, the sure
  attractor `U_i` of Player 1 to it, and a certificate for `R_i`. `R_i`
  may be empty when `G_i` has sinks, but `U_i` always holds a real vertex.
  `G_1 = H` and `G_{i+1}` is the closure of `G_i` minus that attractor;
  the chain ends when no real vertex is left.

Verification recomputes every derived game and never runs the solver.
"""
import hashlib
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from sasgames.automata.product import lift_conjunction_game
from sasgames.constants import JSON_KEYS, PLAYER1, PLAYER2, SCHEMA_VERSION
from sasgames.errors import GameFormatError, PreconditionError
from sasgames.game.core import (
    Owner,
    StochasticGame,
    fix_strategy,
    is_trap,
    restrict,
    subgame_closure,
)
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.attractors import sure_attractor
from sasgames.solvers.mdp import mdp_pos_parity
from sasgames.solvers.sas import DerivationTrace, TraceNode, solve_sas
from sasgames.verdict import Verdict

logger = logging.getLogger(__name__)

State = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True)
class ProductWitness:
    """
    Attributes:
        states (Tuple[State, ...]): Product region as `(vertex, registers)` pairs.
        moves (Tuple[Tuple[State, State], ...]): Move of every Player-1 state
            of the region.
    """

    states: Tuple[State, ...]
    moves: Tuple[Tuple[State, State], ...]


@dataclass(frozen=True)
class OddBlock:
    trap: Tuple[int, ...]
    attractor: Tuple[int, ...]
    child: "Certificate"


@dataclass(frozen=True)
class Certificate:
    """
    Attributes:
        kind (str): `"empty"`, `"even"` or `"odd"`.
        n (int): Number of vertices of the game the claim is about.
        region (Tuple[int, ...]): The claimed region `W`.
        d (Optional[int]): Largest sure priority of `H`.
        witness (Optional[ProductWitness]): Even case.
        child (Optional[Certificate]): Even case, the closure certificate.
        blocks (Tuple[OddBlock, ...]): Odd case.
    """

    kind: str
    n: int
    region: Tuple[int, ...]
    d: Optional[int] = None
    witness: Optional[ProductWitness] = None
    child: Optional["Certificate"] = None
    blocks: Tuple[OddBlock, ...] = field(default_factory=tuple)

    def size(self) -> int:
        """Number of certificate nodes."""
        below = [self.child] if self.child is not None else []
        below += [b.child for b in self.blocks]
        return 1 + sum(c.size() for c in below)


# 1. Building


def _claim(game: StochasticGame, region: VertexSet) -> VertexSet:
    return region | game.sinks


def build_certificate(
    game: StochasticGame,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
    trace: Optional[DerivationTrace] = None,
    region: Optional[VertexSet] = None,
) -> Certificate:
    """
    Certificate for `region` (default: the winning region of `trace`).

    Raises:
        PreconditionError: If `trace` belongs to another game or `region`
            is not winning.
    """
    if omega1 is not None or omega2 is not None:
        game = game.with_priorities(omega1, omega2)
    if trace is not None and trace.game != game:
        raise PreconditionError("trace does not belong to this game")
    if region is None:
        region = (trace if trace is not None else solve_sas(game).trace).root.w1
    return _build(game, region)


def _build(game: StochasticGame, region: VertexSet) -> Certificate:
    claim = _claim(game, region)
    if not is_trap(game, PLAYER2, claim):
        raise PreconditionError("claimed region is not a trap for Player 2")
    sub = restrict(game, claim).game
    ids = tuple(region.to_list())
    if not sub.real:
        return Certificate("empty", game.n, ids)
    root = solve_sas(sub).trace.root
    if root.w1 != sub.real:
        lost = sub.real - root.w1
        raise PreconditionError(
            "claimed region is not winning",
            vertex=restrict(game, claim).origin[next(iter(lost))],
        )
    if root.kind == "even":
        return _build_even(game, ids, root)
    return _build_odd(game, ids, root)


def _build_even(game: StochasticGame, ids: Tuple[int, ...], node: TraceNode) -> Certificate:
    witness = node.witness
    product = witness.product
    states = tuple(product.states[p] for p in witness.region)
    owner = node.game.owners
    moves = tuple(
        (product.states[p], product.states[witness.strategy[p]])
        for p in witness.region
        if owner[product.base(p)] is Owner.P1
    )
    child = _build(node.first.game, node.first.game.real)
    return Certificate("even", game.n, ids, node.d, ProductWitness(states, moves), child)


def _build_odd(game: StochasticGame, ids: Tuple[int, ...], node: TraceNode) -> Certificate:
    d = node.d
    blocks: List[OddBlock] = []
    while node.game.real:
        current = node.game
        if node.kind == "odd" and node.d == d:
            trap = node.first.embedding.lift(node.first.w1)
            attractor = node.second_attractor.region - current.sinks
            blocks.append(OddBlock(tuple(trap), tuple(attractor), _build(current, trap)))
            node = node.second
        else:
            trap = current.real
            blocks.append(OddBlock(tuple(trap), tuple(trap), _build(current, trap)))
            break
    return Certificate("odd", game.n, ids, d, blocks=tuple(blocks))


# 2. Verification


def verify_certificate(
    game: StochasticGame,
    certificate: Certificate,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
    jobs: int = 1,
) -> Verdict:
    """
    Check a certificate against `game`.

    Returns:
        Verdict: Accepted, or rejected with the first failed check.
    """
    if omega1 is not None or omega2 is not None:
        game = game.with_priorities(omega1, omega2)
    return _Verifier(jobs).check(game, certificate, "root")


class _Verifier:
    def __init__(self, jobs: int):
        self.jobs = jobs

    def check(self, game: StochasticGame, cert: Certificate, where: str) -> Verdict:
        if cert.n != game.n:
            return Verdict(False, f"{where}: certificate is for {cert.n} vertices, game has {game.n}")
        if any(not 0 <= v < game.n or v in game.sinks for v in cert.region):
            return Verdict(False, f"{where}: region contains an unknown vertex or a sink")
        region = VertexSet.from_ids(game.n, cert.region)
        claim = _claim(game, region)
        if not is_trap(game, PLAYER2, claim):
            return Verdict(False, f"{where}: region is not a trap for Player 2")
        sub = restrict(game, claim).game
        if not sub.real:
            if cert.kind != "empty":
                return Verdict(False, f"{where}: empty region needs an empty certificate")
            return Verdict(True)
        d = sub.d1
        if cert.d != d:
            return Verdict(False, f"{where}: largest sure priority is {d}, certificate says {cert.d}")
        if cert.kind == "even" and d % 2 == 0:
            return self.even(sub, cert, where)
        if cert.kind == "odd" and d % 2 == 1:
            return self.odd(sub, cert, where)
        return Verdict(False, f"{where}: '{cert.kind}' certificate for priority {d}")

    def even(self, sub: StochasticGame, cert: Certificate, where: str) -> Verdict:
        if cert.witness is None or cert.child is None:
            return Verdict(False, f"{where}: even certificate without witness or child")
        verdict = check_product_witness(sub, cert.witness)
        if not verdict:
            return Verdict(False, f"{where}: {verdict.diagnostic}")
        top = sub.priority_set(sub.omega1, cert.d)
        attractor = sure_attractor(sub, PLAYER1, top).region
        closure = subgame_closure(sub, sub.all - attractor).game
        if tuple(closure.real) != cert.child.region:
            return Verdict(False, f"{where}: child must claim the whole closure")
        return self.check(closure, cert.child, f"{where}/closure")

    def odd(self, sub: StochasticGame, cert: Certificate, where: str) -> Verdict:
        if not cert.blocks:
            return Verdict(False, f"{where}: odd certificate without blocks")
        if len(cert.blocks) > len(sub.real):
            return Verdict(False, f"{where}: more blocks than vertices")
        current = sub
        tasks = []
        for i, block in enumerate(cert.blocks):
            here = f"{where}/block{i + 1}"
            if not current.real:
                return Verdict(False, f"{here}: nothing left to cover")
            if any(not 0 <= v < current.n for v in block.trap):
                return Verdict(False, f"{here}: trap has unknown vertices")
            if not block.trap and not current.sinks:
                return Verdict(False, f"{here}: trap is empty and there is no sink")
            trap = VertexSet.from_ids(current.n, block.trap)
            if not trap <= current.real:
                return Verdict(False, f"{here}: trap contains a sink")
            if any(current.omega1[v] == cert.d for v in trap):
                return Verdict(False, f"{here}: trap contains a vertex of priority {cert.d}")
            if not is_trap(current, PLAYER2, trap | current.sinks):
                return Verdict(False, f"{here}: trap violation, Player 2 can leave the region")
            attractor = sure_attractor(current, PLAYER1, trap | current.sinks).region
            if tuple(attractor - current.sinks) != block.attractor:
                return Verdict(False, f"{here}: attractor does not match")
            if not block.attractor:
                return Verdict(False, f"{here}: block covers no vertex")
            if block.child.region != block.trap:
                return Verdict(False, f"{here}: child claims another region")
            tasks.append((current, block.child, here))
            current = subgame_closure(current, current.all - attractor).game
        if current.real:
            return Verdict(False, f"{where}: blocks do not cover the region")
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            verdicts = list(pool.map(lambda t: self.check(*t), tasks))
        for verdict in verdicts:
            if not verdict:
                return verdict
        return Verdict(True)


def check_product_witness(game: StochasticGame, witness: ProductWitness) -> Verdict:
    """
    The witness strategy wins the conjunction almost surely from every
    `(v, 0...0)`: the region is closed, its Player-1 moves are legal and
    Player 2 cannot reach a cycle with odd largest priority with positive
    probability.
    """
    product = lift_conjunction_game(game)
    try:
        region_ids = [product.index[(v, tuple(r))] for v, r in witness.states]
        moves = {
            product.index[(v, tuple(r))]: product.index[(u, tuple(s))]
            for (v, r), (u, s) in witness.moves
        }
    except KeyError as e:
        return Verdict(False, f"witness names an unknown product state {e}")
    region = VertexSet.from_ids(product.game.n, region_ids)
    for v in range(game.n):
        if product.initial(v) not in region:
            return Verdict(False, f"witness region misses vertex {v}")
    pgame = product.game
    for p in region:
        succ = pgame.successors[p]
        if pgame.owners[p] is Owner.P1:
            if p not in moves or moves[p] not in succ or moves[p] not in region:
                return Verdict(False, f"witness move at product state {product.states[p]} is illegal")
        elif any(u not in region for u in succ):
            return Verdict(False, f"witness region leaks at product state {product.states[p]}")
    embedding = restrict(pgame, region)
    local = embedding.local
    fixed = fix_strategy(
        embedding.game,
        PLAYER1,
        {
            local(p): local(u)
            for p, u in moves.items()
            if p in region and pgame.owners[p] is Owner.P1
        },
    )
    spoiled = mdp_pos_parity(fixed, [p + 1 for p in fixed.omega1])
    if spoiled:
        p = embedding.origin[next(iter(spoiled))]
        return Verdict(False, f"Player 2 spoils the witness from product state {product.states[p]}")
    return Verdict(True)


# 3. JSON


def _to_json(cert: Certificate) -> Dict[str, Any]:
    data: Dict[str, Any] = {"kind": cert.kind, "n": cert.n, "region": list(cert.region)}
    if cert.d is not None:
        data["d"] = cert.d
    if cert.witness is not None:
        data["witness"] = {
            "states": [[v, list(r)] for v, r in cert.witness.states],
            "moves": [[[v, list(r)], [u, list(s)]] for (v, r), (u, s) in cert.witness.moves],
        }
    if cert.child is not None:
        data["child"] = _to_json(cert.child)
    if cert.blocks:
        data["blocks"] = [
            {"trap": list(b.trap), "attractor": list(b.attractor), "child": _to_json(b.child)}
            for b in cert.blocks
        ]
    return data


def _digest(body: Mapping[str, Any]) -> str:
    payload = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def certificate_to_json(game: StochasticGame, cert: Certificate) -> Dict[str, Any]:
    body = _to_json(cert)
    return {
        JSON_KEYS.SCHEMA: SCHEMA_VERSION,
        JSON_KEYS.KIND: "certificate",
        "game": game.digest(),
        JSON_KEYS.DIGEST: _digest(body),
        "certificate": body,
    }


def _from_json(data: Mapping[str, Any]) -> Certificate:
    witness = None
    if "witness" in data:
        w = data["witness"]
        witness = ProductWitness(
            tuple((int(v), tuple(r)) for v, r in w["states"]),
            tuple(((int(a[0]), tuple(a[1])), (int(b[0]), tuple(b[1]))) for a, b in w["moves"]),
        )
    return Certificate(
        kind=str(data["kind"]),
        n=int(data["n"]),
        region=tuple(int(v) for v in data["region"]),
        d=data.get("d"),
        witness=witness,
        child=_from_json(data["child"]) if "child" in data else None,
        blocks=tuple(
            OddBlock(tuple(b["trap"]), tuple(b["attractor"]), _from_json(b["child"]))
            for b in data.get("blocks", ())
        ),
    )


def certificate_from_json(data: Mapping[str, Any]) -> Certificate:
    """
    Raises:
        GameFormatError: If the document is malformed or its digest is wrong.
    """
    try:
        if data[JSON_KEYS.SCHEMA] != SCHEMA_VERSION or data[JSON_KEYS.KIND] != "certificate":
            raise GameFormatError("not a certificate document")
        body = data["certificate"]
        if _digest(body) != data[JSON_KEYS.DIGEST]:
            raise GameFormatError("certificate digest does not match its content")
        return _from_json(body)
    except (KeyError, TypeError, ValueError, IndexError) as e:
        if isinstance(e, GameFormatError):
            raise
        raise GameFormatError(f"malformed certificate: {e}") from e
