"""Command-line front-end: tables, spectral data, verification, diagrams,
limit studies.

All library calls are exact, so identical configurations produce
byte-identical output.  Rationals serialize as "p/q" strings, never floats.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import click

from .dunkl import apply_operator, eigenvalue, operator_for
from .exactpoly import format_rational, parse_rational
from .explicit import explicit_eval
from .families import (
    FamilyCase,
    ParamSet,
    check_positivity,
    diagonal,
    generate_polys,
    offdiagonal,
    recurrence_c,
)
from .limits import lattice_spacings, limit_study
from .spectra import (
    char_poly_product,
    grid,
    norms,
    persymmetry_check,
    spectral_data,
    weights_direct,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RunConfig:
    command: str
    case: Optional[FamilyCase] = None
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None
    alpha: Optional[Fraction] = None
    j: Optional[int] = None
    beta: Fraction = Fraction(0)
    epsilons: Tuple[float, ...] = ()
    fmt: str = "text"
    output: Optional[str] = None
    svg: bool = False

    def params(self) -> ParamSet:
        return ParamSet(self.a, self.b, self.alpha, self.j, self.case)


class RationalParam(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


RATIONAL = RationalParam()


def _alpha_cb(ctx, param, value):
    if not 0 <= value <= 1:
        raise click.BadParameter("alpha must lie in [0, 1]")
    return value


def _family_options(f):
    for opt in reversed(
        [
            click.option(
                "--case",
                "case_tag",
                type=click.Choice([c.value for c in FamilyCase]),
                required=True,
                help="Family case: length and j parity.",
            ),
            click.option("-j", "j", type=int, required=True),
            click.option("-a", "a", type=RATIONAL, required=True),
            click.option("-b", "b", type=RATIONAL, required=True),
            click.option("--alpha", type=RATIONAL, required=True, callback=_alpha_cb),
        ]
    ):
        f = opt(f)
    return f


def _output_options(f):
    for opt in reversed(
        [
            click.option(
                "--format",
                "fmt",
                type=click.Choice(["json", "csv", "text"]),
                default="text",
                show_default=True,
            ),
            click.option("--output", "-o", "output", type=str, default=None),
        ]
    ):
        f = opt(f)
    return f


def _build_config(command: str, case_tag, a, b, alpha, j, **extra) -> RunConfig:
    try:
        cfg = RunConfig(
            command=command,
            case=FamilyCase(case_tag),
            a=a,
            b=b,
            alpha=alpha,
            j=j,
            **extra,
        )
        cfg.params()  # validate eagerly for a clean exit code
    except ValueError as exc:
        raise click.UsageError(str(exc))
    return cfg


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        click.echo(text)
        return
    base = os.environ.get("PARABI_OUTPUT_DIR")
    if base and not os.path.isabs(output):
        output = os.path.join(base, output)
    with open(output, "w") as fh:
        fh.write(text + "\n")
    click.echo(f"wrote {output}", err=True)


def _param_header(cfg: RunConfig) -> dict:
    return {
        "case": cfg.case.value,
        "a": format_rational(cfg.a),
        "b": format_rational(cfg.b),
        "alpha": format_rational(cfg.alpha),
        "j": cfg.j,
    }


@click.group()
def main():
    """Exact tables, spectra and checks for para-Bannai-Ito polynomials."""


@main.command("table")
@_family_options
@_output_options
def cmd_table(case_tag, j, a, b, alpha, fmt, output):
    """Coefficient table for P_0 .. P_{N+1} (exact monic coefficients)."""
    cfg = _build_config("table", case_tag, a, b, alpha, j, fmt=fmt, output=output)
    params = cfg.params()
    polys = generate_polys(params, params.N + 1)
    rows = [
        {
            "n": n,
            "degree": p.degree,
            "leading": format_rational(p.leading),
            "coefficients": [format_rational(c) for c in p.coeffs],
        }
        for n, p in enumerate(polys)
    ]
    if fmt == "json":
        text = json.dumps({"params": _param_header(cfg), "rows": rows}, indent=2)
    elif fmt == "csv":
        lines = ["n,degree,leading,coefficients"]
        for r in rows:
            lines.append(
                f"{r['n']},{r['degree']},{r['leading']},"
                + ";".join(r["coefficients"])
            )
        text = "\n".join(lines)
    else:
        lines = []
        for r in rows:
            lines.append(
                f"P_{r['n']} (degree {r['degree']}, leading {r['leading']}): "
                + " ".join(r["coefficients"])
            )
        text = "\n".join(lines)
    _emit(text, output)


@main.command("spectral")
@_family_options
@_output_options
def cmd_spectral(case_tag, j, a, b, alpha, fmt, output):
    """Grid, weights and norms; weight sums against alpha / 1-alpha."""
    cfg = _build_config("spectral", case_tag, a, b, alpha, j, fmt=fmt, output=output)
    params = cfg.params()
    report = check_positivity(params)
    if not report.admissible:
        click.echo(
            f"warning: inadmissible parameters (u_{report.first_violation} <= 0); "
            "emitting grid only",
            err=True,
        )
        pts = grid(params)
        if fmt == "json":
            text = json.dumps(
                {
                    "params": _param_header(cfg),
                    "grid": [format_rational(x) for x in pts],
                },
                indent=2,
            )
        elif fmt == "csv":
            text = "\n".join(
                ["s,x"] + [f"{s},{format_rational(x)}" for s, x in enumerate(pts)]
            )
        else:
            text = "grid: " + " ".join(format_rational(x) for x in pts)
        _emit(text, output)
        return
    data = spectral_data(params)
    even_sum = sum(data.weights[0::2], Fraction(0))
    odd_sum = sum(data.weights[1::2], Fraction(0))
    if fmt == "json":
        payload = {"params": _param_header(cfg)}
        payload.update(data.to_jsonable())
        payload["weight_sums"] = {
            "even": format_rational(even_sum),
            "odd": format_rational(odd_sum),
            "even_target": format_rational(params.alpha),
            "odd_target": format_rational(1 - params.alpha),
        }
        text = json.dumps(payload, indent=2)
    elif fmt == "csv":
        lines = ["s,x,w"]
        for s, (x, w) in enumerate(zip(data.grid, data.weights)):
            lines.append(f"{s},{format_rational(x)},{format_rational(w)}")
        text = "\n".join(lines)
    else:
        lines = ["grid: " + " ".join(format_rational(x) for x in data.grid)]
        lines.append("weights: " + " ".join(format_rational(w) for w in data.weights))
        lines.append("u: " + " ".join(format_rational(v) for v in data.u))
        lines.append("h2: " + " ".join(format_rational(v) for v in data.h2))
        lines.append(
            f"alpha={format_rational(params.alpha)}, "
            f"even_sum={format_rational(even_sum)}, "
            f"odd_sum={format_rational(odd_sum)}"
        )
        text = "\n".join(lines)
    _emit(text, output)


def _verify_sections(params: ParamSet, corrupt: bool) -> List[Tuple[str, bool]]:
    n_top = params.N + 1
    diag = [diagonal(params, n) for n in range(n_top)]
    if corrupt:
        diag[0] += Fraction(1, 1000)
    # regenerate the chain from (possibly corrupted) coefficients
    from .exactpoly import ONE, Poly, X

    polys = [ONE]
    prev: Poly = Poly()
    for n in range(n_top):
        nxt = (X - diag[n]) * polys[-1] - offdiagonal(params, n) * prev
        prev = polys[-1]
        polys.append(nxt)

    pts = grid(params)
    w = weights_direct(params)
    u, h2 = norms(params)
    sections: List[Tuple[str, bool]] = []

    sample = [Fraction(2 * k + 1, 3) for k in range(params.N + 3)]
    sections.append(
        (
            "recurrence-explicit",
            all(
                explicit_eval(params, n, x) == polys[n](x)
                for n in range(params.N + 1)
                for x in sample
            ),
        )
    )
    sections.append(("spectrum-grid", all(polys[n_top](x) == 0 for x in pts)))
    if params.case is FamilyCase.P0:
        sections.append(
            ("saalschutz-product", char_poly_product(params) == polys[n_top])
        )
    values = [[p(x) for x in pts] for p in polys[: params.N + 1]]
    ortho = all(
        sum(w_s * vn * vm for w_s, vn, vm in zip(w, values[n], values[m]))
        == (h2[n] if n == m else 0)
        for n in range(params.N + 1)
        for m in range(n, params.N + 1)
    )
    sections.append(("orthogonality", ortho))
    even_sum = sum(w[0::2], Fraction(0))
    odd_sum = sum(w[1::2], Fraction(0))
    sections.append(
        ("weight-sums", even_sum == params.alpha and odd_sum == 1 - params.alpha)
    )
    if params.alpha == HALF:
        sections.append(("persymmetry", persymmetry_check(params)))
    betas = [Fraction(0), Fraction(1)] if not params.case.odd_length else [Fraction(0)]
    dunkl_ok = True
    for beta in betas:
        spec = operator_for(params, beta)
        for n, poly in enumerate(polys[: params.N + 1]):
            lam = eigenvalue(params.case, n, params.j, beta)
            dunkl_ok = dunkl_ok and all(
                apply_operator(spec, poly, x) == lam * poly(x)
                for x in sample[: poly.degree + 2]
            )
    sections.append(("dunkl-bispectrality", dunkl_ok))
    if params.case.odd_length:
        base_case = FamilyCase.P0 if params.j % 2 == 0 else FamilyCase.P2
        base = ParamSet(params.a, params.b, params.alpha, params.j, base_case)
        base_polys = generate_polys(base, base.N + 1)
        sections.append(
            (
                "geronimus",
                all(
                    polys[n] == base_polys[n] - recurrence_c(params, n) * base_polys[n - 1]
                    for n in range(1, params.N + 1)
                ),
            )
        )
    if params.b == 0 and params.alpha == HALF and params.j % 2 == 0:
        from .limits import reduction_general_cbi, reduction_krawtchouk

        sections.append(("reduction-general-cbi", reduction_general_cbi(params)))
        if params.a == -(params.j + 1):
            sections.append(("reduction-krawtchouk", reduction_krawtchouk(params)))
    if params.case is FamilyCase.P0 and -params.a - params.j - 1 >= 0 and abs(params.b) <= 1:
        sections.append(
            ("lattice-spacings", lattice_spacings(params).matches_closed_forms)
        )
    return sections


@main.command("verify")
@_family_options
@click.option("--corrupt", is_flag=True, hidden=True)
def cmd_verify(case_tag, j, a, b, alpha, corrupt):
    """Run every applicable identity check; exit 0 iff all pass."""
    cfg = _build_config("verify", case_tag, a, b, alpha, j)
    params = cfg.params()
    report = check_positivity(params)
    click.echo(f"admissibility: {'PASS' if report.admissible else 'FAIL'}")
    sections = _verify_sections(params, corrupt)
    first_fail = None if report.admissible else "admissibility"
    for name, ok in sections:
        click.echo(f"{name}: {'PASS' if ok else 'FAIL'}")
        if not ok and first_fail is None:
            first_fail = name
    if first_fail is not None:
        raise click.ClickException(f"first failing identity: {first_fail}")


def _gap_labels(params: ParamSet) -> List[Tuple[Fraction, Fraction, str]]:
    """(left, right, label) for each gap, with the origin as a virtual tick."""
    sp = lattice_spacings(params)
    pts = sorted(grid(params).points)
    ticks = sorted(set(pts) | {Fraction(0)})
    gaps = {right - left for left, right in zip(ticks, ticks[1:])}
    uniform = len(gaps) == 1
    out = []
    for left, right in zip(ticks, ticks[1:]):
        gap = right - left
        if uniform:
            label = "d"
        elif left == 0:
            label = "d2"
        elif right == 0:
            label = "d1"
        elif params.b == 0:
            label = "d3"
        else:
            label = "d3" if gap == sp.d3 else ("d4" if gap == sp.d4 else "?")
        out.append((left, right, label))
    return out


def _diagram_ascii(params: ParamSet) -> str:
    pts = sorted(grid(params).points)
    in_regime = (
        params.case is FamilyCase.P0
        and -params.a - params.j - 1 >= 0
        and abs(params.b) <= 1
    )
    lo, hi = pts[0], pts[-1]
    width = 64
    span = hi - lo

    def col(x: Fraction) -> int:
        return int(round(float((x - lo) / span * (width - 1))))

    axis = ["-"] * width
    for x in pts:
        axis[col(x)] = "x"
    lines = ["".join(axis)]
    lines.append("points: " + " ".join(format_rational(x) for x in pts))
    if in_regime:
        sp = lattice_spacings(params)
        lines.append(
            "gaps: "
            + " ".join(
                f"{label}={format_rational(right - left)}"
                for left, right, label in _gap_labels(params)
            )
        )
        lines.append(
            f"d1={format_rational(sp.d1)} d2={format_rational(sp.d2)} "
            f"d3={format_rational(sp.d3)} d4={format_rational(sp.d4)}"
        )
    return "\n".join(lines)


def _diagram_svg(params: ParamSet) -> str:
    pts = sorted(grid(params).points)
    in_regime = (
        params.case is FamilyCase.P0
        and -params.a - params.j - 1 >= 0
        and abs(params.b) <= 1
    )
    lo, hi = pts[0], pts[-1]
    span = hi - lo
    width, height, margin = 800, 120, 40

    def sx(x: Fraction) -> str:
        return f"{float(margin + (x - lo) / span * (width - 2 * margin)):.2f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<line x1="{margin}" y1="60" x2="{width - margin}" y2="60" '
        'stroke="black" stroke-width="1"/>',
    ]
    for x in pts:
        parts.append(
            f'<circle cx="{sx(x)}" cy="60" r="4" fill="black"/>'
        )
        parts.append(
            f'<text x="{sx(x)}" y="85" font-size="10" text-anchor="middle">'
            f"{format_rational(x)}</text>"
        )
    if in_regime:
        for left, right, label in _gap_labels(params):
            mid = (left + right) / 2
            parts.append(
                f'<text x="{sx(mid)}" y="45" font-size="10" text-anchor="middle">'
                f"{label}</text>"
            )
    parts.append("</svg>")
    return "\n".join(parts)


@main.command("diagram")
@_family_options
@click.option("--svg", is_flag=True, default=False)
@click.option("--output", "-o", "output", type=str, default=None)
def cmd_diagram(case_tag, j, a, b, alpha, svg, output):
    """Bi-lattice depiction with gap labels (ASCII, or SVG with --svg)."""
    cfg = _build_config("diagram", case_tag, a, b, alpha, j, svg=svg, output=output)
    params = cfg.params()
    text = _diagram_svg(params) if svg else _diagram_ascii(params)
    _emit(text, output)


@main.command("limit")
@click.option("-j", "j", type=int, default=2, show_default=True)
@click.option("-a", "a", type=RATIONAL, default=Fraction(-4), show_default="-4")
@click.option("-b", "b", type=RATIONAL, default=Fraction(0), show_default="0")
@click.option(
    "--alpha", type=RATIONAL, default=HALF, show_default="1/2", callback=_alpha_cb
)
@click.option("--eps", "epsilons", type=float, multiple=True, required=True)
@_output_options
def cmd_limit(j, a, b, alpha, epsilons, fmt, output):
    """Deviation of scaled q-deformed recurrence data from the exact family."""
    cfg = _build_config(
        "limit", "p1", a, b, alpha, j, epsilons=tuple(epsilons), fmt=fmt, output=output
    )
    study = limit_study(cfg.params(), list(cfg.epsilons))
    rows = list(
        zip(study.epsilons, study.max_dev_diag, study.max_dev_offdiag, study.max_imag)
    )
    if fmt == "json":
        text = json.dumps(
            {
                "params": _param_header(cfg),
                "epsilons": list(study.epsilons),
                "max_dev_diag": list(study.max_dev_diag),
                "max_dev_offdiag": list(study.max_dev_offdiag),
                "max_imag": list(study.max_imag),
                "fitted_order": study.fitted_order,
            },
            indent=2,
        )
    elif fmt == "csv":
        lines = ["epsilon,max_dev_diag,max_dev_offdiag,max_imag"]
        for eps, dd, du, di in rows:
            lines.append(f"{eps:.6e},{dd:.6e},{du:.6e},{di:.6e}")
        text = "\n".join(lines)
    else:
        lines = [
            f"eps={eps:.1e}  max_dev_diag={dd:.3e}  "
            f"max_dev_offdiag={du:.3e}  max_imag={di:.3e}"
            for eps, dd, du, di in rows
        ]
        if study.fitted_order is not None:
            lines.append(f"fitted convergence order: {study.fitted_order:.3f}")
        text = "\n".join(lines)
    _emit(text, output)


if __name__ == "__main__":
    main()
