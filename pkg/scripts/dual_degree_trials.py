"""Repeated degree trials: tangents from random points (n = 2) and the octic eliminant (n = 3)."""
import argparse
import random
from collections import Counter
from dataclasses import dataclass

from cyquot import dualgeom as dg
from cyquot import ellkummer as ek
from cyquot.exactalg import GF


@dataclass
class TrialConfig:
    prime: int = 101
    a: int = 0
    b: int = 1
    trials: int = 50
    seed: int = 0


def run(cfg):
    K = GF(cfg.prime)
    E = ek.WeierstrassCurve(K, cfg.a, cfg.b)
    rng = random.Random(cfg.seed)
    C = dg.embed_cubic(E)
    tangents = Counter()
    for i in range(cfg.trials):
        while True:
            q = (K.coerce(rng.randrange(cfg.prime)), K.coerce(rng.randrange(cfg.prime)), K.one)
            if not K.is_zero(C.F.evaluate(q)):
                break
        r = dg.tangents_from_point(C, q, seed=cfg.seed + i)
        tangents[(r["count"], r["distinct"])] += 1
    Q = dg.embed_quadric_pencil(E)
    degrees, retries = Counter(), 0
    for _ in range(cfg.trials):
        r = dg.dual_surface_degree(Q, rng)
        degrees[(r["degree"], r["squarefree"])] += 1
        retries += r["retries"]
    return tangents, degrees, retries


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--prime", type=int, default=101)
    ap.add_argument("--curve", default="0,1")
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args(argv)
    ca, cb = (int(s) for s in a.curve.split(","))
    tangents, degrees, retries = run(TrialConfig(a.prime, ca, cb, a.trials, a.seed))
    print("tangents (count, distinct):", dict(tangents))
    print("dual surface (degree, squarefree):", dict(degrees), "resampled lines:", retries)


if __name__ == "__main__":
    main()
