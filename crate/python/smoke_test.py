"""Smoke test for the trigsum extension module.

Build first:
    cargo build --release -p trigsum-python --features extension-module
    cp target/release/libtrigsum.so python/trigsum.so
"""

import json
import math
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import trigsum  # noqa: E402


def check(name, ok, detail=""):
    print(f"{name}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    return ok


def main():
    results = []

    z2 = trigsum.exact("zeta_even", 1)
    results.append(check("zeta(2) = pi^2/6", z2.terms() == [(2, "1", "6")], str(z2)))
    results.append(check("zeta(2) float", abs(float(z2) - math.pi**2 / 6) < 1e-15))
    back = trigsum.PiPolynomial.from_json(z2.to_json())
    results.append(check("json round trip", back == z2))
    results.append(check("beta(3) = pi^3/32", trigsum.exact("beta_odd", 1).terms() == [(3, "1", "32")]))

    z3 = trigsum.zeta_odd(1, "thm15-zeta", 30)
    results.append(check("zeta(3)", z3["value"].startswith("1.20205690315959428539973816"), z3["value"]))
    ref = trigsum.dirichlet_oracle("zeta", 3, 30)
    results.append(check("oracle zeta(3)", ref["value"][:25] == z3["value"][:25]))

    c, s = trigsum.apply_operator("x^2", "x", "h")
    results.append(check("operator on x^2", c != "" and s != "", f"cos={c} sin={s}"))

    m = trigsum.map_series("1/(1-t)", "cos")
    results.append(check("map_series", m["kind"] == "cosine" and len(m["singular_points"]) > 0, m["closed_form"]))

    ids = trigsum.list_identities()
    results.append(check("catalog nonempty", len(ids) > 10, f"{len(ids)} ids"))

    ident = trigsum.Identity(ids[0], 1)
    x = 0.5 * math.pi
    cf = ident.closed_form_eval(x)
    ps = ident.partial_sum(x, 20000)
    results.append(check("closed form vs partial sum", abs(cf - ps) < 1e-3, f"{cf} vs {ps}"))
    rep = ident.verify()
    results.append(check("verify", rep["pass"], f"max_error={rep['max_error']:.2e}"))

    try:
        trigsum.Identity("no-such-id", 1)
        results.append(check("unknown id raises", False))
    except ValueError:
        results.append(check("unknown id raises", True))

    code, out, _ = trigsum.run_cli(["--format", "json", "zeta-odd", "--r", "1"])
    results.append(check("cli json", code == 0 and json.loads(out)["r"] == "1"))

    if not all(results):
        sys.exit(1)
    print("all smoke checks passed")


if __name__ == "__main__":
    main()
