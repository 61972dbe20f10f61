"""Run every resolver scenario in a file and print one line per outcome."""
import argparse
import json

from cyquot import resolver as rs
from cyquot.report import to_plain


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scenarios", default=None, help="INI file (default: the packaged one)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="dump the full reports")
    a = ap.parse_args(argv)
    results = [rs.run_scenario(name, sc, a.seed) for name, sc in rs.load_scenarios(a.scenarios).items()]
    if a.json:
        print(json.dumps(to_plain(results), indent=2))
        return
    for r in results:
        print("%-22s %-10s expect=%-10s %s" % (r["scenario"], r["outcome"], r["expect"], "ok" if r["ok"] else "MISMATCH"))


if __name__ == "__main__":
    main()
