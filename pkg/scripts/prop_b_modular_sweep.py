"""Invariant dimensions of exterior powers mod p, against both divisibility hypotheses.

For each (n, p) it prints the modular fixed dimensions for m = 1..n-1 and
whether p divides n!/2 or the group order (n+1)!/2.  Rows where the invariants
survive although p does not divide n!/2 are marked.
"""
import argparse
from dataclasses import dataclass, field

from cyquot import repthy as rt


@dataclass
class ModularConfig:
    ns: list = field(default_factory=lambda: [2, 3, 4, 5])
    primes: list = field(default_factory=lambda: [5, 7, 11, 13])


def sweep(cfg):
    for n in cfg.ns:
        for p in cfg.primes:
            dims = [rt.fixed_subspace_modp(n, m, p) for m in range(1, n)]
            pred = rt.prop_b_predicates(n, p)
            mark = " <- survives" if any(dims) and pred["n_fact_half_hypothesis_holds"] else ""
            yield "n=%d p=%-3d dims=%-14s p|n!/2=%-5s p|(n+1)!/2=%-5s%s" % (
                n, p, dims, pred["p_divides_n_fact_half"], pred["p_divides_group_order"], mark)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, action="append")
    ap.add_argument("--prime", type=int, action="append")
    a = ap.parse_args(argv)
    cfg = ModularConfig()
    cfg.ns = a.n or cfg.ns
    cfg.primes = a.prime or cfg.primes + [3]
    for line in sweep(cfg):
        print(line)


if __name__ == "__main__":
    main()
