"""Regenerate the golden files under tests/golden.

The dual sextic of Y^2 Z = X^3 + Z^3 comes from a lex Groebner basis computed
by sympy, an elimination route independent of the package's resultants.  The
CLI goldens are plain runs of the current build and only freeze its output
format.
"""
import argparse
import io
import sys
from contextlib import redirect_stdout
from pathlib import Path

import sympy as sp

from cyquot.cli import main as cli_main
from cyquot.exactalg import GF, QQ, parse_poly, format_poly

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def dual_sextic_oracle():
    X, Y, t, u, v, w = sp.symbols("X Y t u v w")
    F = Y ** 2 - X ** 3 - 1          # affine chart Z = 1
    grad = [-3 * X ** 2, 2 * Y, Y ** 2 - 3]  # dF/dX, dF/dY, dF/dZ at Z = 1
    G = sp.groebner([F, u - t * grad[0], v - t * grad[1], w - t * grad[2]],
                    t, X, Y, u, v, w, order="lex")
    elim = [g for g in G.exprs if not (g.free_symbols & {t, X, Y})]
    assert len(elim) == 1
    return sp.expand(elim[0]).subs({u: sp.Symbol("x0"), v: sp.Symbol("x1"), w: sp.Symbol("x2")})


def to_text(expr, field):
    text = str(expr).replace("**", "^")
    return format_poly(parse_poly(text, field, 3).monic())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args(argv)
    expr = dual_sextic_oracle()
    files = {"dual_sextic_q.txt": to_text(expr, QQ) + "\n",
             "dual_sextic_f101.txt": to_text(expr, GF(101)) + "\n"}
    for name, cmd in (("cli_repthy_table_n4.json", ["repthy", "table", "--n", "4"]),
                      ("cli_ledger_plus.json", ["resolver", "ledger", "--sign", "plus"])):
        buf = io.StringIO()
        with redirect_stdout(buf):
            cli_main(cmd)
        files[name] = buf.getvalue()
    bad = 0
    for name, text in files.items():
        path = GOLDEN / name
        if args.check:
            same = path.exists() and path.read_text() == text
            print("%-28s %s" % (name, "ok" if same else "DIFFERS"))
            bad += not same
        else:
            GOLDEN.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
            print("wrote", path)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
