#!/usr/bin/env python3
"""Convergence study of the q-deformed recurrence data toward the exact
odd-length family, over a decade sweep of the deformation scale."""

import argparse
from fractions import Fraction

from parabi import FamilyCase, ParamSet, limit_study


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-j", type=int, default=2)
    ap.add_argument("-a", type=Fraction, default=Fraction(-4))
    ap.add_argument("-b", type=Fraction, default=Fraction(0))
    ap.add_argument("--alpha", type=Fraction, default=Fraction(1, 2))
    ap.add_argument(
        "--eps",
        type=float,
        nargs="+",
        default=[1e-2, 1e-3, 1e-4, 1e-5],
    )
    args = ap.parse_args()

    target = ParamSet(args.a, args.b, args.alpha, args.j, FamilyCase.P1)
    study = limit_study(target, args.eps)
    print(f"target: P1 j={args.j} a={args.a} b={args.b} alpha={args.alpha}")
    for eps, dd, du, di in zip(
        study.epsilons, study.max_dev_diag, study.max_dev_offdiag, study.max_imag
    ):
        print(
            f"eps={eps:9.1e}  max_dev_diag={dd:10.3e}  "
            f"max_dev_offdiag={du:10.3e}  max_imag={di:10.3e}"
        )
    print(f"fitted convergence order: {study.fitted_order:.4f}")


if __name__ == "__main__":
    main()
