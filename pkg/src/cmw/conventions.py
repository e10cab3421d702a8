"""The conventions ledger: every sign, side and normalization choice the
computations depend on, fixed once by a calibration run.

Calibration evaluates each open choice against the identities that pin it
down and keeps the unique survivor.  The result is written as JSON (sorted
keys, so byte-stable) and later runs read it back and refuse to proceed if a
fresh calibration disagrees with the frozen file.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Dict

from .core import FormalSum, IntegrityError
from . import hopf, jets

ENV_VAR = "CMW_LEDGER"
DEFAULT_LEDGER = Path(__file__).with_name("conventions.json")

# choices that are fixed by construction and only recorded
FIXED = {
    "group_law": "(psi1 psi2)(x) = psi1(psi2(x)); Delta f(psi1 (x) psi2) = f(psi1 psi2)",
    "n_action_on_omega": "right action by substitution, w . psi = w<0> S(w<1>)(psi)",
    "n_action_on_sstar": "eta . psi = eta<-1>(psi) eta<0>",
    "s_action_on_omega": "Lie derivative L_X",
    "s_action_on_F": "minus the flow derivative (vector-field bracket representation)",
    "us_coaction": "e_-1 -> e_-1 (x) 1 + 2 e_0 (x) x_1, e_0 -> e_0 (x) 1",
    "lie_horizontal_sign": "->d(1 (x) theta^0) = 2 (1 (x) theta^-1 (x) theta^1)",
    "lie_total": "up-d + (-1)^p ->d_literal",
    "hopf_total": "d_CE + (-1)^p b_N^*",
    "group_total": "b_s - (-1)^p b_N",
    "group_chain_sign": "J o d_CE^coinv = -b_s o J",
    "poincare_contraction": "iota_{a ^ b} = iota_b iota_a, volume e_-1 ^ e_0",
    "flow_e0": "psi <| exp(t e_0) = psi(e^t x) e^-t",
    "index_range": "sums over the coordinates start at i = 1",
    "cup_product": "no Koszul sign for form degree",
}


def _delta_ok(delta0, D: int = 3) -> bool:
    forms = [("x", 0), ("x", 1), ("f", 0), ("f", 1)]
    hs = [(m, u) for m in [(), (1,)] for u in [(0, 0), (1, 0), (0, 1)]]
    for w in forms:
        for h in hs:
            lhs, rhs = hopf.sayd_condition(w, h, D, delta0)
            if lhs != rhs:
                return False
    c = FormalSum.basis((("f", 0), ((jets.ONE, (1, 0)),)))
    x = c
    for _ in range(2):
        x = hopf.cyclic(x, 1, D, delta0)
    return x == c


def _coords_ok(coordinates: str, D: int = 4) -> bool:
    cut = lambda v: v.filter(lambda k: hopf.tuple_weight(k[2]) <= D)
    return (cut(hopf.d_tot48(hopf.lambda_prime(D, coordinates), D)) == 0
            and cut(hopf.d_tot48(hopf.mu_prime(D, coordinates), D)) == 0)


def _leg_order_ok() -> bool:
    rng_jets = [jets.Jet([1, -2, 3], 3), jets.Jet([2, 1, -1], 3)]
    f = FormalSum.basis((1, 2))
    lhs = jets.evaluate(f, jets.compose(*rng_jets))
    rhs = sum((c * jets.evaluate(FormalSum.basis(a), rng_jets[0]) * jets.evaluate(FormalSum.basis(b), rng_jets[1])
               for (a, b), c in jets.coproduct(f).items()), Fraction(0))
    return lhs == rhs


def calibrate() -> Dict[str, object]:
    """Run the calibration identities and return the ledger dictionary."""
    deltas = [d for d in (Fraction(1), Fraction(-1)) if _delta_ok(d)]
    coords = [c for c in ("literal", "log") if _coords_ok(c)]
    if len(deltas) != 1:
        raise IntegrityError("calibration: delta(e_0) not pinned down: %r" % deltas)
    if len(coords) != 1:
        raise IntegrityError("calibration: coordinates not pinned down: %r" % coords)
    if not _leg_order_ok():
        raise IntegrityError("calibration: coproduct does not match composition")
    # the bicomplex calibration identity must hold under the chosen conventions
    th0 = FormalSum.basis((("x", 0), (0,), ()))
    want = FormalSum.basis((("x", 0), (-1,), ((1,),)), -2)
    if hopf.bN_star(th0, 4) != want:
        raise IntegrityError("calibration: b_N^*(1 (x) theta^0) != -2 (1 (x) theta^-1 (x) x_1)")
    out: Dict[str, object] = dict(FIXED)
    out["delta_e0"] = str(deltas[0])
    out["class_coordinates"] = coords[0]
    return out


def ledger_path() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else DEFAULT_LEDGER


def dumps(ledger: Dict[str, object]) -> str:
    return json.dumps(ledger, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load(path: Path = None) -> Dict[str, object]:
    path = ledger_path() if path is None else Path(path)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def freeze(path: Path = None) -> Dict[str, object]:
    """Calibrate; write the ledger if absent, otherwise check it agrees."""
    path = ledger_path() if path is None else Path(path)
    fresh = calibrate()
    if path.exists():
        frozen = load(path)
        if frozen != fresh:
            diff = sorted(k for k in set(frozen) | set(fresh) if frozen.get(k) != fresh.get(k))
            raise IntegrityError("ledger %s disagrees with calibration on %s" % (path, ", ".join(diff)))
        return frozen
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(fresh), encoding="utf-8")
    except OSError as exc:
        raise OSError("cannot write ledger %s: %s" % (path, exc)) from exc
    return fresh


def delta0(ledger: Dict[str, object]) -> Fraction:
    return Fraction(ledger["delta_e0"])
