"""Stabilizer census and Burnside counts over the pinned curves."""
import argparse
import json
import time
from dataclasses import asdict, dataclass

from cyquot import ellkummer as ek


@dataclass
class SweepConfig:
    census_file: str = None
    max_prime: int = 101
    torsion: bool = True


def sweep(cfg):
    rows = []
    for name, E, ns in ek.load_census_curves(cfg.census_file):
        p = E.field.p
        if p > cfg.max_prime:
            continue
        row = {"curve": name, "p": p, "points": E.order(), "hasse_ok": E.hasse_ok(), "census": {}}
        for n in ns:
            t0 = time.perf_counter()
            c = ek.stabilizer_census(E, n)
            row["census"][n] = {"entries": {k: v for k, (v, _) in c.entries.items()},
                                "nontrivial": c.nontrivial(),
                                "burnside": ek.burnside_orbit_count(E, n),
                                "direct": ek.direct_orbit_count(E, n),
                                "seconds": round(time.perf_counter() - t0, 2)}
        if cfg.torsion:
            row["torsion"] = {m: len(ek.torsion_points(E, m, allow_extension=True)[1]) for m in (2, 3, 4)}
        rows.append(row)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--census-file", default=None)
    ap.add_argument("--max-prime", type=int, default=101)
    ap.add_argument("--no-torsion", action="store_true")
    a = ap.parse_args(argv)
    cfg = SweepConfig(a.census_file, a.max_prime, not a.no_torsion)
    print(json.dumps({"config": asdict(cfg), "rows": sweep(cfg)}, indent=2))


if __name__ == "__main__":
    main()
