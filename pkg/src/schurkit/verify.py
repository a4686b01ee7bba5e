"""User-runnable invariant sweeps backing the `verify` subcommand.

Each family returns (name, passed, cases).  These re-run the library's core
identities over every partition up to a box bound: the Q=0/Q=1 degenerations
of Hall-Littlewood, character orthogonality, and the two independent Schur
routes agreeing.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import character, dimension, z_order
from .partitions import ConjugacyClass, partitions_of
from .polyalgebra import Polynomial, q_var
from .symfun import AlphabetContext, hall_littlewood, miwa_push, monomial, schur, schur_via_characters

__all__ = ["MAX_BOXES_LIMIT", "SCOPES", "run_scope"]

# Above this the sweeps blow up combinatorially.
MAX_BOXES_LIMIT = 8


def check_degenerations(max_boxes: int) -> tuple[str, bool, int]:
    zero = Polynomial.zero()
    one = Polynomial.one()
    cases = 0
    ok = True
    for n_vars in (3, 4):
        ctx = AlphabetContext(n_vars)
        for n in range(max_boxes + 1):
            for lam in partitions_of(n):
                if lam.rows > n_vars:
                    continue
                hl = hall_littlewood(lam, ctx)
                if hl.substitute({q_var(): zero}) != miwa_push(schur(lam), ctx):
                    ok = False
                if hl.substitute({q_var(): one}) != monomial(lam, ctx):
                    ok = False
                cases += 1
    return "degenerations", ok, cases


def check_characters(max_boxes: int) -> tuple[str, bool, int]:
    cases = 0
    ok = True
    for n in range(max_boxes + 1):
        shapes = list(partitions_of(n))
        classes = [lam.conjugacy_class() for lam in shapes]
        table = {
            (lam.parts, mu): character(lam, mu) for lam in shapes for mu in classes
        }
        # first orthogonality over all shape pairs
        for a in shapes:
            for b in shapes:
                total = sum(
                    Fraction(table[a.parts, mu] * table[b.parts, mu], z_order(mu))
                    for mu in classes
                )
                if total != (1 if a == b else 0):
                    ok = False
                cases += 1
        # second orthogonality over all class pairs
        for mu in classes:
            for nu in classes:
                total = sum(table[lam.parts, mu] * table[lam.parts, nu] for lam in shapes)
                if total != (z_order(mu) if mu == nu else 0):
                    ok = False
                cases += 1
        # identity class equals the hook-length dimension
        if n:
            identity = ConjugacyClass({1: n})
            for lam in shapes:
                if character(lam, identity) != dimension(lam):
                    ok = False
                cases += 1
    return "characters", ok, cases


def check_oracles(max_boxes: int) -> tuple[str, bool, int]:
    cases = 0
    ok = True
    for n in range(max_boxes + 1):
        for lam in partitions_of(n):
            if schur(lam) != schur_via_characters(lam):
                ok = False
            cases += 1
    return "oracles", ok, cases


SCOPES = {
    "degenerations": (check_degenerations,),
    "characters": (check_characters,),
    "oracles": (check_oracles,),
    "all": (check_degenerations, check_characters, check_oracles),
}


def run_scope(scope: str, max_boxes: int) -> list[tuple[str, bool, int]]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    if not 0 <= max_boxes <= MAX_BOXES_LIMIT:
        raise ValueError(f"max_boxes must be in 0..{MAX_BOXES_LIMIT}")
    return [check(max_boxes) for check in SCOPES[scope]]
