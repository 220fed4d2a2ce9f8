"""
    Commands for module CLI
"""
from sasgames.runners.certify import certify, verify_cert
from sasgames.runners.export_dot import export_dot
from sasgames.runners.gen import gen
from sasgames.runners.oracle import oracle
from sasgames.runners.product import product
from sasgames.runners.simulate import simulate
from sasgames.runners.solve import solve
from sasgames.runners.synth import synth

__all__ = [
    "certify",
    "export_dot",
    "gen",
    "oracle",
    "product",
    "simulate",
    "solve",
    "synth",
    "verify_cert",
]
