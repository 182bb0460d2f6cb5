"""Command-line front end.

Exit status: 0 on success or when every check passes, 1 when a verification fails,
2 on usage or parse errors.
"""

from __future__ import annotations

import json
import sys
from typing import Sequence

import click

from . import cactus_verify as cv
from .core_tableaux import TableauError, normalize_shape, parse, render, split_tableau, kn_violation, weight
from .crystal import CrystalError, apply_ops, branch, character, crystal_of_shape, is_symmetric_character, xi_oracle
from .sjdt import SlideError, rectify_with_journal, slide_trace, Grid
from .symplectic_involutions import (
    SwitchingError,
    colorful_switching,
    evacuation_C,
    partial_xi_C,
    reflection_xi_i,
    reversal_C,
    symplectic_bk,
)
from .virtualization import VirtualizationError, check_diagram, embed_E_with_Q, invert_E, lambda_A
from .words_plactic import KnuthError, parse_word, plactic_equivalent, plactic_normal_form, render_word
from .worked_examples import FIXTURES, FixtureError, run_fixture

INPUT_ERRORS = (TableauError, KnuthError, CrystalError, VirtualizationError, FixtureError, cv.VerifyError)


class InputError(click.ClickException):
    exit_code = 2


def _emit(as_json: bool, data: dict, text: str) -> None:
    click.echo(json.dumps(data, indent=2, sort_keys=True) if as_json else text)


def _tableau(text: str, n: int, kind: str = "C", check: bool = True):
    try:
        return parse(text, n, kind, check=check)
    except TableauError as ex:
        raise InputError(f"cannot parse tableau {text!r}: {ex}") from None


def _kn(text: str, n: int):
    t = _tableau(text, n)
    reason = kn_violation(t)
    if reason is not None:
        raise InputError(f"{text!r} is not KN: {reason}")
    return t


def _pair(text: str, what: str) -> tuple[int, int]:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"{what} must look like p,q (got {text!r})") from None
    return p, q


def _shape(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    outer, _, inner = text.partition("/")
    try:
        o = normalize_shape([int(x) for x in outer.split(",") if x])
        i = normalize_shape([int(x) for x in inner.split(",") if x])
    except (ValueError, TableauError) as ex:
        raise InputError(f"bad shape {text!r}: {ex}") from None
    return o, i


json_opt = click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
n_opt = click.option("--n", "n", type=click.IntRange(1), required=True, help="Rank n (alphabet [+-n]).")


@click.group()
def cli() -> None:
    """Kashiwara-Nakashima tableaux, symplectic jeu de taquin, cactus and Berenstein-Kirillov actions."""


# ---------------------------------------------------------------------------
# tab


@cli.group()
def tab() -> None:
    """Inspect a tableau given as rows, e.g. ".,2,-2,-1/-2,-2,-1/-1"."""


@tab.command("check")
@click.argument("tableau")
@n_opt
@json_opt
def tab_check(tableau: str, n: int, as_json: bool) -> int:
    t = _tableau(tableau, n, check=False)
    reason = kn_violation(t)
    data = {"tableau": render(t), "kn": reason is None, "reason": reason}
    _emit(as_json, data, "KN" if reason is None else f"not KN: {reason}")
    return 0 if reason is None else 1


@tab.command("split")
@click.argument("tableau")
@n_opt
@json_opt
def tab_split(tableau: str, n: int, as_json: bool) -> int:
    t = _kn(tableau, n)
    cols = split_tableau(t)
    data = {"columns": [{"top": top, "left": list(lc), "right": list(rc)} for top, (lc, rc) in cols]}
    lines = [f"column {k + 1}: lC = {render_word(lc)} | rC = {render_word(rc)}" for k, (_, (lc, rc)) in enumerate(cols)]
    _emit(as_json, data, "\n".join(lines))
    return 0


@tab.command("weight")
@click.argument("tableau")
@n_opt
@click.option("--kind", type=click.Choice(["C", "A"]), default="C")
@json_opt
def tab_weight(tableau: str, n: int, kind: str, as_json: bool) -> int:
    t = _tableau(tableau, n, kind)
    wt = list(weight(t))
    _emit(as_json, {"weight": wt}, " ".join(map(str, wt)))
    return 0


# ---------------------------------------------------------------------------
# word


@cli.group()
def word() -> None:
    """Words and plactic classes."""


@word.command("knuth")
@click.argument("word_text")
@click.argument("other", required=False)
@n_opt
@json_opt
def word_knuth(word_text: str, other: str | None, n: int, as_json: bool) -> int:
    """Plactic normal form of WORD; with OTHER, test plactic equivalence."""
    w = parse_word(word_text)
    p = plactic_normal_form(w, n)
    data = {"word": w, "P": render(p)}
    text = render(p)
    code = 0
    if other is not None:
        w2 = parse_word(other)
        same = plactic_equivalent(w, w2, n)
        data.update(other=w2, equivalent=same)
        text += "\n" + ("equivalent" if same else "not equivalent")
        code = 0 if same else 1
    _emit(as_json, data, text)
    return code


@word.command("rect")
@click.argument("tableau")
@n_opt
@click.option("--trace", is_flag=True, help="Print every punctured intermediate.")
@json_opt
def word_rect(tableau: str, n: int, trace: bool, as_json: bool) -> int:
    """Rectify a skew KN tableau by symplectic jeu de taquin."""
    t = _kn(tableau, n)
    steps = []
    if trace:
        cur = t
        while cur.inner:
            corner = max(Grid.from_tableau(cur).inner_corners())
            chain = slide_trace(cur, corner)
            steps += [render(x) for x in chain]
            cur = chain[-1]
    r, journal = rectify_with_journal(t)
    data = {"rect": render(r), "slides": len(journal),
            "contractions": sum(1 for ev in journal if ev.contraction), "trace": steps}
    _emit(as_json, data, "\n".join(steps + [render(r)]))
    return 0


# ---------------------------------------------------------------------------
# crystal


def _graph(shape: str, n: int, colors: str | None):
    outer, inner = _shape(shape)
    if inner:
        raise InputError("crystals are built from straight shapes")
    if len(outer) > n:
        raise InputError(f"shape {outer} has more than {n} rows")
    g = crystal_of_shape(outer, n)
    if colors:
        try:
            g = branch(g, [int(x) for x in colors.split(",")])
        except ValueError as ex:
            raise InputError(f"bad colors {colors!r}: {ex}") from None
    return g


colors_opt = click.option("--colors", default=None, help="Restrict to these colors, e.g. 1,2.")
out_opt = click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="Write to file.")


def _write(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
    else:
        with open(out, "w") as fh:
            fh.write(text)


@cli.group()
def crystal() -> None:
    """Crystal graphs KN(lambda, n) from the Yamanouchi tableau."""


@crystal.command("build")
@click.argument("shape")
@n_opt
@colors_opt
@json_opt
def crystal_build(shape: str, n: int, colors: str | None, as_json: bool) -> int:
    g = _graph(shape, n, colors)
    ss = g.sources_sinks()
    data = {"vertices": len(g), "arrows": len(g.arrows), "components": len(ss),
            "colors": list(g.colors), "highest": [render(g.vertices[s[0]]) for s, _ in ss if len(s) == 1]}
    _emit(as_json, data, f"{len(g)} vertices, {len(g.arrows)} arrows, {len(ss)} components")
    return 0


@crystal.command("dot")
@click.argument("shape")
@n_opt
@colors_opt
@out_opt
def crystal_dot(shape: str, n: int, colors: str | None, out: str | None) -> int:
    _write(_graph(shape, n, colors).to_dot(), out)
    return 0


@crystal.command("json")
@click.argument("shape")
@n_opt
@colors_opt
@out_opt
def crystal_json(shape: str, n: int, colors: str | None, out: str | None) -> int:
    _write(_graph(shape, n, colors).dumps() + "\n", out)
    return 0


@crystal.command("character")
@click.argument("shape")
@n_opt
@json_opt
def crystal_character(shape: str, n: int, as_json: bool) -> int:
    g = _graph(shape, n, None)
    ch = character(g)
    sym = is_symmetric_character(ch, n)
    rows = sorted(ch.items(), reverse=True)
    data = {"character": [{"weight": list(w), "multiplicity": m} for w, m in rows], "weyl_symmetric": sym}
    text = "\n".join(f"{m} x ({', '.join(map(str, w))})" for w, m in rows)
    _emit(as_json, data, text + f"\nWeyl symmetric: {sym}")
    return 0 if sym else 1


# ---------------------------------------------------------------------------
# op


@cli.group()
def op() -> None:
    """Crystal operators."""


@op.command("apply")
@click.argument("ops")
@click.argument("tableau")
@n_opt
@json_opt
def op_apply(ops: str, tableau: str, n: int, as_json: bool) -> int:
    """Apply OPS such as f1,e2 left to right; prints 0 when an operator is undefined."""
    t = _kn(tableau, n)
    out = apply_ops(t, ops.split(","))
    text = "0" if out is None else render(out)
    _emit(as_json, {"result": None if out is None else text}, text)
    return 0


# ---------------------------------------------------------------------------
# inv


@cli.group()
def inv() -> None:
    """Involutions: evacuation, reversal, partial xi, Bender-Knuth, reflections."""


@inv.command("evac")
@click.argument("tableau")
@n_opt
@json_opt
def inv_evac(tableau: str, n: int, as_json: bool) -> int:
    t = _kn(tableau, n)
    if t.inner:
        raise InputError("evacuation needs a straight tableau; use 'inv reversal'")
    out = render(evacuation_C(t))
    _emit(as_json, {"result": out}, out)
    return 0


def _switch_output(t, j: int, trace: bool, as_json: bool) -> int:
    res = colorful_switching(t, j)
    data = {"result": render(res.result), "rect": render(res.rect), "evac": render(res.evac), "V": res.V,
            "trace": [{"step": cap, "state": s} for cap, s in res.state.trace] if trace else []}
    lines = [f"{cap:<36} {s}" for cap, s in res.state.trace] if trace else []
    _emit(as_json, data, "\n".join(lines + [render(res.result)]))
    return 0


@inv.command("reversal")
@click.argument("tableau")
@n_opt
@click.option("--trace", is_flag=True, help="Show the colorful switching states.")
@json_opt
def inv_reversal(tableau: str, n: int, trace: bool, as_json: bool) -> int:
    t = _kn(tableau, n)
    if trace:
        return _switch_output(t, 1, True, as_json)
    out = render(reversal_C(t))
    _emit(as_json, {"result": out}, out)
    return 0


@inv.command("partial")
@click.argument("tableau")
@n_opt
@click.option("--interval", required=True, help="p,q with 1 <= p <= q <= n.")
@click.option("--trace", is_flag=True, help="Show the colorful switching states (q = n only).")
@json_opt
def inv_partial(tableau: str, n: int, interval: str, trace: bool, as_json: bool) -> int:
    t = _kn(tableau, n)
    p, q = _pair(interval, "--interval")
    if not 1 <= p <= q <= n:
        raise InputError(f"--interval {p},{q} is not inside [1, {n}]")
    if trace:
        if q != n or p == n:
            raise InputError("--trace needs an interval [p, n] with p < n")
        return _switch_output(t, p, True, as_json)
    out = render(partial_xi_C(t, (p, q)))
    _emit(as_json, {"result": out}, out)
    return 0


@inv.command("bk")
@click.argument("tableau")
@n_opt
@click.option("--i", "i", type=int, required=True, help="Index 1 <= i <= 2n-1.")
@json_opt
def inv_bk(tableau: str, n: int, i: int, as_json: bool) -> int:
    t = _kn(tableau, n)
    if not 1 <= i <= 2 * n - 1:
        raise InputError(f"--i {i} is not inside [1, {2 * n - 1}]")
    out = render(symplectic_bk(t, i))
    _emit(as_json, {"result": out}, out)
    return 0


@inv.command("reflect")
@click.argument("tableau")
@n_opt
@click.option("--i", "i", type=int, required=True, help="Color 1 <= i <= n.")
@json_opt
def inv_reflect(tableau: str, n: int, i: int, as_json: bool) -> int:
    t = _kn(tableau, n)
    if not 1 <= i <= n:
        raise InputError(f"--i {i} is not inside [1, {n}]")
    out = render(reflection_xi_i(t, i))
    _emit(as_json, {"result": out}, out)
    return 0


# ---------------------------------------------------------------------------
# virt


@cli.group()
def virt() -> None:
    """The embedding E of KN(lambda, n) into type A_{2n-1} tableaux."""


@virt.command("embed")
@click.argument("tableau")
@n_opt
@json_opt
def virt_embed(tableau: str, n: int, as_json: bool) -> int:
    t = _kn(tableau, n)
    if t.inner:
        raise InputError("E needs a straight tableau")
    p, q = embed_E_with_Q(t)
    data = {"E": render(p), "Q": render(q), "lambda_A": list(lambda_A(t.outer, n).lam_A)}
    _emit(as_json, data, render(p))
    return 0


@virt.command("invert")
@click.argument("tableau")
@n_opt
@click.option("--shape", default=None, help="lambda, when it should be checked rather than inferred.")
@json_opt
def virt_invert(tableau: str, n: int, shape: str | None, as_json: bool) -> int:
    """E^-1 of a type A tableau on [2n]; exit 1 when it is not in the image."""
    p = _tableau(tableau, 2 * n, "A")
    lam = _shape(shape)[0] if shape else None
    try:
        out = render(invert_E(p, lam, n))
    except VirtualizationError as ex:
        _emit(as_json, {"in_image": False, "reason": str(ex)}, f"not in the image of E: {ex}")
        return 1
    _emit(as_json, {"in_image": True, "result": out}, out)
    return 0


@virt.command("check")
@click.argument("tableau")
@n_opt
@click.option("--interval", default=None, help="p,q; every interval when omitted.")
@json_opt
def virt_check(tableau: str, n: int, interval: str | None, as_json: bool) -> int:
    """Check E xi_[p,q] = xi^E_[p,q] E and E^-1 E = id on TABLEAU."""
    t = _kn(tableau, n)
    if t.inner:
        raise InputError("E needs a straight tableau")
    if interval:
        p, q = _pair(interval, "--interval")
        if not 1 <= p <= q <= n:
            raise InputError(f"--interval {p},{q} is not inside [1, {n}]")
        ivs = [(p, q)]
    else:
        ivs = [(p, q) for p in range(1, n + 1) for q in range(p, n + 1)]
    results = {f"{p},{q}": check_diagram(t, (p, q)) for p, q in ivs}
    results["round trip"] = invert_E(embed_E_with_Q(t)[0], t.outer, n) == t
    ok = all(results.values())
    text = "\n".join(f"{'ok  ' if v else 'FAIL'} {k}" for k, v in results.items())
    _emit(as_json, {"passed": ok, "checks": results}, text)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# verify and fixtures


@cli.command("verify")
@click.option("--suite", required=True, type=click.Choice(cv.SUITES, case_sensitive=False))
@click.option("--rank", type=click.IntRange(2), required=True)
@click.option("--max-cells", type=click.IntRange(1), required=True)
@json_opt
def verify_cmd(suite: str, rank: int, max_cells: int, as_json: bool) -> int:
    """Exhaustive relation or property suite; 'probes' passes when every non-relation has a witness."""
    report = cv.run_suite(suite, rank, max_cells)
    _emit(as_json, report.to_json(), report.text())
    return 0 if report.passed else 1


@cli.group()
def fixture() -> None:
    """Worked examples shipped with the package."""


@fixture.command("list")
def fixture_list() -> int:
    click.echo("\n".join(FIXTURES))
    return 0


@fixture.command("run")
@click.argument("name", type=click.Choice(FIXTURES + ("all",)))
@json_opt
def fixture_run(name: str, as_json: bool) -> int:
    names = FIXTURES if name == "all" else (name,)
    reports = [run_fixture(x) for x in names]
    data = {"passed": all(r.passed for r in reports), "fixtures": [r.to_json() for r in reports]}
    _emit(as_json, data, "\n".join(r.text() for r in reports))
    return 0 if data["passed"] else 1


# ---------------------------------------------------------------------------


def main(argv: Sequence[str] | None = None) -> int:
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="kncactus", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 2
    except click.ClickException as ex:
        ex.show()
        return 2 if isinstance(ex, (click.UsageError, InputError)) else ex.exit_code
    except INPUT_ERRORS as ex:
        click.echo(f"error: {ex}", err=True)
        return 2
    except (SlideError, SwitchingError) as ex:
        click.echo(f"internal error: {ex}", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(main())
