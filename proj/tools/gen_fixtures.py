#!/usr/bin/env python3
# Copyright 2026 The hgcong Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerate the committed newform coefficient fixtures offline with PARI/GP.

Newforms in a space are ordered the way LMFDB orders them: by dimension, then
lexicographically by the trace vector (a_1, a_2, ...). Labels use the old
LMFDB form N.k.c.x where c is the Conrey index of the nebentypus.

    pip install cypari
    python3 tools/gen_fixtures.py --out fixtures
"""
import argparse
import json
import os
import tempfile

import cypari

pari = cypari.pari

LABELS = [
    "8.4.1.a", "8.6.1.a", "12.4.1.a", "24.2.1.a", "24.4.1.a", "32.3.31.a",
    "36.4.1.a", "48.4.1.c", "48.6.1.c", "64.4.1.b", "64.4.1.d", "64.6.1.f",
    "72.4.1.b",
]
# Old-style labels map to the current LMFDB URLs; the character orbit letter
# for the Conrey index 31 mod 32 orbit is "c".
NEW_LABELS = {"32.3.31.a": "32.3.c.a"}

BOUND = 101
TRACE_LEN = 120


def primes_upto(n):
    return [int(x) for x in pari(f"primes([2,{n}])")]


def new_label(label):
    if label in NEW_LABELS:
        return NEW_LABELS[label]
    level, weight, char, letter = label.split(".")
    assert char == "1"
    return f"{level}.{weight}.a.{letter}"


def newform_ap(label):
    level, weight, char, letter = label.split(".")
    level, weight, char = int(level), int(weight), int(char)
    nk = f"[{level},{weight}]" if char == 1 else f"[{level},{weight},Mod({char},{level})]"
    space = pari(f"mfinit({nk},0)")
    forms = []
    for f in pari.mfeigenbasis(space):
        coeffs = pari.mfcoefs(f, TRACE_LEN)
        deg = 1
        traces = []
        rational = []
        for c in coeffs[1:]:
            if str(pari.type(c)) == "t_POLMOD":
                c = pari.lift(c)
            if str(pari.type(c)) == "t_POL":
                if c != 0 and int(pari.poldegree(c)) > 0:
                    deg = 2
                    traces.append(int(pari.polcoef(c, 0)))
                    rational.append(False)
                    continue
                c = pari.polcoef(c, 0)
            traces.append(int(c))
            rational.append(True)
        forms.append((deg, traces, rational))
    forms.sort(key=lambda f: (f[0], f[1]))
    deg, traces, rational = forms[ord(letter) - ord("a")]
    # A nebentypus form with CM has non-rational a_p at inert primes; only the
    # rational ones are stored.
    if deg != 1 and char == 1:
        raise SystemExit(f"{label}: coefficient field has degree {deg}")
    ap = {str(p): traces[p - 1] for p in primes_upto(BOUND) if rational[p - 1]}
    return level, weight, ap


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="fixtures")
    parser.add_argument("--fetched", default="2026-10-16")
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for label in LABELS:
        level, weight, ap = newform_ap(label)
        doc = {
            "label": label,
            "weight": weight,
            "level": level,
            "source": f"https://www.lmfdb.org/ModularForm/GL2/Q/holomorphic/{new_label(label).replace('.', '/')}/",
            "fetched": args.fetched,
            "ap": ap,
        }
        path = os.path.join(args.out, f"{label}.json")
        fd, tmp = tempfile.mkstemp(dir=args.out)
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        os.replace(tmp, path)
        print(label, dict(list(ap.items())[1:6]))


if __name__ == "__main__":
    main()
