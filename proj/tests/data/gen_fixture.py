#!/usr/bin/env python3
"""Regenerates newforms_level26.json from first principles.

Coefficients of the rational forms come from point counts on the associated
elliptic curves (weight-2 rational newforms of level 11 and 26); a_p at a
prime of multiplicative reduction is +-1 by split/nonsplit type and is listed
explicitly. The 26c partner is 26a plus 7*(q^3 + q^5), congruent to 26a mod 7
by construction; 26d carries a synthetic mod-5 residue column only.

Run with --check to verify the committed file matches.
"""

import argparse
import json
import pathlib
import sys

N_COEFFS = 20

# [a1, a2, a3, a4, a6] Weierstrass coefficients, bad primes with their a_p
CURVES = {
    "11a1": {"w": [0, -1, 1, -10, -20], "level": 11, "bad": {11: 1}},
    "26a1": {"w": [1, 0, 1, -5, -8], "level": 26, "bad": {2: -1, 13: 1}},
}


def count_points(w, p):
    a1, a2, a3, a4, a6 = w
    n = 1  # infinity
    for x in range(p):
        for y in range(p):
            lhs = (y * y + a1 * x * y + a3 * y) % p
            rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
            if lhs == rhs:
                n += 1
    return n


def a_p(curve, p):
    if p in curve["bad"]:
        return curve["bad"][p]
    return p + 1 - count_points(curve["w"], p)


def an_list(curve, n_max):
    an = [0] * (n_max + 1)
    an[1] = 1
    primes = [p for p in range(2, n_max + 1) if all(p % d for d in range(2, p))]
    for p in primes:
        ap = a_p(curve, p)
        pk = p
        prev, cur = 1, ap
        while pk <= n_max:
            an[pk] = cur
            if p in curve["bad"]:
                prev, cur = cur, cur * ap
            else:
                prev, cur = cur, ap * cur - p * prev
            pk *= p
    for n in range(2, n_max + 1):
        if an[n]:
            continue
        for p in primes:
            if n % p == 0:
                pk = p
                while n % (pk * p) == 0:
                    pk *= p
                an[n] = an[pk] * an[n // pk]
                break
    return an[1:]


def build():
    a26 = an_list(CURVES["26a1"], N_COEFFS)
    a11 = an_list(CURVES["11a1"], N_COEFFS)
    synth = list(a26)
    synth[2] += 7  # a_3
    synth[4] += 7  # a_5
    mod5 = [v % 5 for v in a26]
    mod5[2] = 3  # synthetic orbit: differs from 26a at n = 3 and n = 7
    mod5[6] = 2
    return {
        "forms": [
            {"label": "26a1", "level": 26, "weight": 2, "orbit_id": "26a", "an_int": a26},
            {
                "label": "26c-synthetic",
                "level": 26,
                "weight": 2,
                "orbit_id": "26c",
                "an_int": synth,
                "modular_degree": 6,
            },
            {"label": "11a1", "level": 11, "weight": 2, "orbit_id": "11a", "an_int": a11},
            {
                "label": "26d-nonrational",
                "level": 26,
                "weight": 2,
                "orbit_id": "26d",
                "an_mod": {"5": mod5},
            },
        ]
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="compare against the committed file")
    args = ap.parse_args()
    target = pathlib.Path(__file__).parent / "newforms_level26.json"
    doc = build()
    if args.check:
        committed = json.loads(target.read_text())
        if committed != doc:
            print("mismatch between generated and committed fixture", file=sys.stderr)
            return 1
        print("fixture matches")
        return 0
    target.write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
