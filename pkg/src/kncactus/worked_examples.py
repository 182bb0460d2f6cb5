"""Replays the worked examples shipped as JSON fixtures and compares every recorded intermediate.

A fixture is a list of checks ``{"id", "compare", "expected"}``.  ``compare`` is ``equal`` or
``subsequence`` (for slide chains, which list only some of the intermediate states).  An expected
entry may be ``{"printed", "corrected", "reason"}`` for a misprinted display: matching uses
``corrected`` (or skips the entry when there is none), and the printed value must fail the
consistency test named by ``reason``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from .core_tableaux import Tableau, is_admissible, parse, render, weight
from .crystal import xi_oracle
from .symplectic_involutions import colorful_switching, symplectic_bk
from .type_a_ops import bender_knuth_A, bk_word, evacuation_A, partial_xi_A
from .virtualization import (
    VirtualizationError,
    build_Q_lambda,
    embed_E,
    embed_E_with_Q,
    invert_E,
    lambda_A,
    psi,
    psi_inv,
    virtual_bk_C,
    virtual_partial_xi,
)

FIXTURES = ("full-reversal-c3", "partial-reversal-c4", "virtualization-n6", "bk-c2", "counterexample-c2")


class FixtureError(ValueError):
    pass


def load_fixture(name: str) -> dict:
    if name not in FIXTURES:
        raise FixtureError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    text = resources.files("kncactus").joinpath("fixtures", f"{name}.json").read_text()
    return json.loads(text)


# ---------------------------------------------------------------------------
# Normalization of displayed tableaux


def normalize(display: str, labels: dict | None = None) -> str:
    """Empty cells and the puncture read as ``.``; trailing empty cells are dropped."""
    rows = []
    for row in display.split("/"):
        cells = ["." if x in ("", "*") else (labels or {}).get(x, x) for x in row.split(",")]
        while cells and cells[-1] == ".":
            cells.pop()
        rows.append(",".join(cells))
    while rows and rows[-1] == "":
        rows.pop()
    return "/".join(rows)


def _letters(display: str) -> Counter:
    return Counter(x for row in display.split("/") for x in row.split(",") if x not in ("", ".", "*"))


def _is_subsequence(wanted: list, seen: list) -> tuple[bool, object]:
    it = iter(seen)
    for w in wanted:
        if not any(w == s for s in it):
            return False, w
    return True, None


# ---------------------------------------------------------------------------
# Misprint tests: each returns True when the printed value is inconsistent


def _content_changes(printed: str, ctx: dict) -> bool:
    """Slides preserve the multiset of letters; compare with the neighbouring display."""
    nb = ctx.get("neighbour")
    return nb is not None and _letters(printed) != _letters(nb)


def _deferred_contraction(printed: str, ctx: dict) -> bool:
    """The display keeps a non-admissible column that the slide has already contracted."""
    n, j = ctx["n"], ctx["j"]
    rows = [row.split(",") for row in printed.split("/")]
    width = max(len(r) for r in rows)
    for c in range(width):
        col = []
        for r in rows:
            x = r[c] if c < len(r) else "."
            if x.lstrip("-").isdigit() and abs(int(x)) >= j:
                col.append(int(x) - (j - 1) if int(x) > 0 else int(x) + (j - 1))
        if col and not is_admissible(col, n - j + 1):
            return True
    return False


def _not_virtual_split(printed: dict, ctx: dict) -> bool:
    try:
        psi_inv(printed["left"], printed["right"], ctx["n"])
    except VirtualizationError:
        return True
    return False


def _window_weight(printed: str, ctx: dict) -> bool:
    """Reversal on letters ``lo..hi`` reverses their multiplicities."""
    lo, hi = ctx["window"]
    before, after = _letters(ctx["source"]), _letters(printed)
    want = [before[str(a)] for a in range(hi, lo - 1, -1)]
    return [after[str(a)] for a in range(lo, hi + 1)] != want


def _weight(printed: str, ctx: dict) -> bool:
    """Letter multiplicities disagree with the displayed weight."""
    seen = _letters(printed)
    return [seen[str(a)] for a in range(1, len(ctx["weight"]) + 1)] != ctx["weight"]


def _barred_weight(printed: str, ctx: dict) -> bool:
    n, seen = ctx["n"], _letters(printed)
    return [seen[str(a)] for a in range(n + 1, 2 * n + 1)] != ctx["weight"][n:]


MISPRINT_TESTS: dict[str, Callable] = {
    "weight": _weight,
    "barred_weight": _barred_weight,
    "content": _content_changes,
    "deferred_contraction": _deferred_contraction,
    "not_virtual_split": _not_virtual_split,
    "window_weight": _window_weight,
}


# ---------------------------------------------------------------------------
# Results


@dataclass
class CheckResult:
    id: str
    ok: bool
    detail: str = ""
    notes: list = field(default_factory=list)

    def line(self) -> str:
        return f"{'ok  ' if self.ok else 'FAIL'} {self.id}" + (f": {self.detail}" if self.detail else "")


@dataclass
class FixtureReport:
    name: str
    title: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def text(self) -> str:
        lines = [f"fixture {self.name}: {self.title}"]
        for c in self.checks:
            lines.append("  " + c.line())
            lines += [f"       note: {x}" for x in c.notes]
        lines.append(f"{'PASS' if self.passed else 'FAIL'} {self.name}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "fixture": self.name,
            "passed": self.passed,
            "checks": [{"id": c.id, "ok": c.ok, "detail": c.detail, "notes": c.notes} for c in self.checks],
        }


def _compare(check: dict, actual, fixture: dict, labels: dict, ctx: dict) -> CheckResult:
    cid, mode, expected = check["id"], check["compare"], check["expected"]
    notes: list[str] = []

    def resolve(entry, k: int, seq: list):
        if not (isinstance(entry, dict) and "reason" in entry):
            return entry, True
        test = MISPRINT_TESTS[entry["reason"]]
        local = dict(ctx)
        if isinstance(seq, list) and seq:
            nb = seq[k - 1] if k > 0 else seq[k + 1]
            local["neighbour"] = nb["corrected"] if isinstance(nb, dict) else nb
        confirmed = test(entry["printed"], local)
        shown = entry["printed"] if isinstance(entry["printed"], str) else json.dumps(entry["printed"])
        notes.append(f"printed {shown} is inconsistent ({entry['reason']}): "
                     f"{'confirmed' if confirmed else 'NOT confirmed'}")
        return entry.get("corrected"), confirmed

    if mode == "subsequence":
        wanted, all_confirmed = [], True
        for k, entry in enumerate(expected):
            value, confirmed = resolve(entry, k, expected)
            all_confirmed &= confirmed
            if value is not None:
                wanted.append(normalize(value, labels))
        seen = [normalize(s) for s in actual]
        ok, missing = _is_subsequence(wanted, seen)
        detail = "" if ok else f"display {missing} not reached in order"
        if not all_confirmed:
            ok, detail = False, detail or "a misprint note did not hold"
        return CheckResult(cid, ok, detail, notes)

    if isinstance(expected, list) and any(isinstance(x, dict) and "reason" in x for x in expected):
        values, all_confirmed = [], True
        for k, entry in enumerate(expected):
            value, confirmed = resolve(entry, k, expected)
            all_confirmed &= confirmed
            values.append(value)
        expected = values
    elif isinstance(expected, dict) and "reason" in expected:
        expected, all_confirmed = resolve(expected, 0, [])
    else:
        all_confirmed = True
    if isinstance(expected, str):
        ok = normalize(expected, labels) == normalize(actual)
    else:
        ok = expected == actual
    detail = "" if ok else f"expected {expected} got {actual}"
    if not all_confirmed:
        ok, detail = False, detail or "a misprint note did not hold"
    return CheckResult(cid, ok, detail, notes)


# ---------------------------------------------------------------------------
# Computations per fixture


def _shift_display(display: str, j: int) -> str:
    """Letters of a shifted window ``[+-1, n-j+1]`` back to ``[+-j, n]``."""
    def one(x: str) -> str:
        if not x.lstrip("-").isdigit():
            return x
        v = int(x)
        return str(v + j - 1 if v > 0 else v - (j - 1))
    return "/".join(",".join(one(x) for x in row.split(",")) for row in display.split("/"))


def _switching(fx: dict) -> dict:
    n, j = fx["n"], fx["j"]
    t = parse(fx["input"], n)
    res = colorful_switching(t, j)
    trace = res.state.trace
    cut = next(k for k, (cap, _) in enumerate(trace) if cap == "evacuated")
    window = "/".join(
        ",".join(x if x.lstrip("-").isdigit() and abs(int(x)) >= j else "." for x in row.split(","))
        for row in render(res.result).split("/")
    )
    lo = j
    return {
        "weight": list(weight(t)),
        "forward": [s for _, s in trace[:cut]],
        "rect": render(res.rect),
        "V": res.V,
        "evac_chain": [_shift_display(render(x), j) for x in res.evac_trace],
        "evac": render(res.evac),
        "backward": [s for _, s in trace[cut:]],
        "window": window,
        "result": render(res.result),
        "window_weight": list(weight(res.result))[lo - 1:],
        "oracle": render(xi_oracle(t, list(range(j, n + 1)))),
    }


def _psi_pair(col, n: int) -> dict:
    left, right = psi(col, n)
    return {"left": list(left), "right": list(right)}


def _part(p: Tableau, keep: Callable[[int], bool]) -> str:
    return "/".join(",".join(str(x) if x is not None and keep(x) else "." for x in row) for row in p.rows)


def _virtualization(fx: dict) -> dict:
    n = fx["n"]
    p_, q_ = fx["interval"]
    t = parse(fx["input"], n)
    e_t, q_word = embed_E_with_Q(t)
    q_lam = build_Q_lambda(t.outer, n)
    x = virtual_partial_xi(e_t, p_, q_)
    out = invert_E(x, t.outer, n)
    cols = t.columns()
    return {
        "weight": list(weight(t)),
        "lambda_A": list(lambda_A(t.outer, n).lam_A),
        "Q_lambda": render(q_lam),
        "Q_cells": q_lam.size(),
        "psi_C": [_psi_pair(c, n) for c in reversed(cols)],
        "E": render(e_t),
        "Q_of_word": render(q_word),
        "weight_E": list(weight(e_t)),
        "unbarred_part": _part(e_t, lambda a: a <= n),
        "evac_unbarred": _part(x, lambda a: a <= n),
        "barred_part": _part(e_t, lambda a: a > n),
        "rev_barred": _part(x, lambda a: a > n),
        "psi_C_prime": [_psi_pair(c, n) for c in reversed(out.columns())],
        "result": render(out),
        "window_weight": list(weight(out)),
        "oracle": render(xi_oracle(t, list(range(p_, q_ + 1)))),
    }


def _bk(fx: dict) -> dict:
    n = fx["n"]
    t = parse(fx["input"], n)
    e_t = embed_E(t)
    t1, t2, t3 = (symplectic_bk(t, i) for i in (1, 2, 3))
    bar2 = 2 * n - 1
    t1a = bender_knuth_A(e_t, 1)

    def back(p: Tableau) -> str:
        return render(invert_E(p, t.outer, n))

    return {
        "weight": list(weight(t)),
        "t1": render(t1), "t1_weight": list(weight(t1)),
        "t2": render(t2), "t2_weight": list(weight(t2)),
        "t3": render(t3), "t3_weight": list(weight(t3)),
        "E": render(e_t),
        "E_t1": render(embed_E(t1)),
        "t1A_E": render(t1a),
        "xi3_t1A_E": render(partial_xi_A(t1a, bar2, bar2)),
        "t1A_xi3_E": render(bender_knuth_A(partial_xi_A(e_t, bar2, bar2), 1)),
        "virtual_t1": back(partial_xi_A(t1a, bar2, bar2)),
        "xi2_E": render(partial_xi_A(e_t, n, n)),
        "E_t2": render(embed_E(t2)),
        "virtual_t2": back(partial_xi_A(e_t, n, n)),
        "virtual_t3_evac": back(partial_xi_A(evacuation_A(e_t, 2 * n), n, n)),
        # t1 (t2 t1)(t3 t2 t1), rightmost first
        "virtual_t3_word": back(partial_xi_A(bk_word(e_t, [1, 2, 3, 1, 2, 1]), n, n)),
        "virtual_bk": [render(virtual_bk_C(t, i)) for i in (1, 2, 3)],
    }


def _counterexample(fx: dict) -> dict:
    n = fx["n"]
    t = parse(fx["input"], n)

    def word(idx: list[int]) -> Tableau:
        out = t
        for i in reversed(idx):
            out = symplectic_bk(out, i)
        return out

    a, b = word([2, 1, 2, 1]), word([1, 2, 1, 2])
    x = xi_oracle(t, list(range(1, n + 1)))
    return {
        "t2t1t2t1": render(a),
        "t1t2t1t2": render(b),
        "xi": render(x),
        "weight_t2t1t2t1": list(weight(a)),
        "weight_xi": list(weight(x)),
        "differ": a != x,
    }


COMPUTE = {
    "full-reversal-c3": _switching,
    "partial-reversal-c4": _switching,
    "virtualization-n6": _virtualization,
    "bk-c2": _bk,
    "counterexample-c2": _counterexample,
}


def run_fixture(name: str) -> FixtureReport:
    fx = load_fixture(name)
    actual = COMPUTE[name](fx)
    labels = fx.get("labels", {})
    ctx = {"n": fx["n"], "j": fx.get("j", 1)}
    if name == "virtualization-n6":
        lo, hi = fx["interval"]
        ctx["window"] = (2 * fx["n"] - hi, 2 * fx["n"] - lo)
        ctx["source"] = actual["barred_part"]
        ctx["weight"] = next(c["expected"] for c in fx["checks"] if c["id"] == "weight_E")
    checks = []
    for check in fx["checks"]:
        if check["id"] not in actual:
            checks.append(CheckResult(check["id"], False, "no computation for this check"))
            continue
        checks.append(_compare(check, actual[check["id"]], fx, labels, ctx))
    return FixtureReport(name, fx["title"], checks)
