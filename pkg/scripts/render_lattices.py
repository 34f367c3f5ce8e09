#!/usr/bin/env python3
"""Render the orthogonality bi-lattice of a family as ASCII and SVG,
including the two displayed reductions (b=0 gap collapse, then c=0 down to
a uniform linear lattice)."""

import argparse
import os
from fractions import Fraction

from parabi import FamilyCase, ParamSet
from parabi.cli import _diagram_ascii, _diagram_svg


def render(params: ParamSet, out_dir: str, tag: str) -> None:
    print(f"--- {tag}: a={params.a} b={params.b} j={params.j} ---")
    print(_diagram_ascii(params))
    path = os.path.join(out_dir, f"lattice_{tag}.svg")
    with open(path, "w") as fh:
        fh.write(_diagram_svg(params) + "\n")
    print(f"wrote {path}\n")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-j", type=int, default=2)
    ap.add_argument("-c", type=Fraction, default=Fraction(2))
    ap.add_argument("-b", type=Fraction, default=Fraction(1, 2))
    ap.add_argument("--out-dir", default=".")
    args = ap.parse_args()

    j, c, b = args.j, args.c, args.b
    half = Fraction(1, 2)

    def p0(b_val: Fraction, c_val: Fraction) -> ParamSet:
        return ParamSet(-(c_val + j + 1), b_val, half, j, FamilyCase.P0)

    render(p0(b, c), args.out_dir, "generic")
    render(p0(Fraction(0), c), args.out_dir, "b0")
    render(p0(Fraction(0), Fraction(0)), args.out_dir, "b0_c0")


if __name__ == "__main__":
    main()
