"""Cactus and Berenstein-Kirillov relations checked as equalities of permutations of finite tableau sets."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core_tableaux import (
    Tableau,
    enumerate_kn,
    enumerate_ssyt,
    is_kn_tableau,
    partitions_of,
    partitions_upto,
    render,
    weight,
)
from .crystal import (
    branch,
    character,
    crystal_of_shape,
    e,
    eps_phi,
    f,
    pairing,
    reflect_weight,
    simple_root,
    xi_oracle,
)
from .sjdt import Grid, anti_rectify, complete_slide, rectify, rectify_with_journal
from .symplectic_involutions import partial_xi_C, reflection_xi_i, symplectic_bk
from .type_a_ops import bender_knuth_A, bk_word, partial_xi_A, q_word
from .virtualization import (
    build_Q_lambda,
    check_diagram,
    embed_E,
    embed_E_with_Q,
    invert_E,
    virtual_bk,
    virtual_e,
    virtual_f,
    virtual_partial_xi,
    virtual_partial_xi_C,
)

FAMILIES = ("cactus_A", "cactus_C", "virtual", "bk_A", "bk_C", "q_A", "q_C", "reflection", "virtual_bk")


class VerifyError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    family: str
    params: tuple

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise VerifyError(f"unknown generator family {self.family!r}")

    def __str__(self) -> str:
        names = {"cactus_A": "s", "cactus_C": "s", "virtual": "vs", "bk_A": "t", "bk_C": "t",
                 "q_A": "q", "q_C": "q", "reflection": "xi", "virtual_bk": "vt"}
        p = self.params
        body = f"[{p[0]},{p[1]}]" if len(p) == 2 else f"{p[0]}"
        return names[self.family] + body


def s_C(p: int, q: int) -> Generator:
    return Generator("cactus_C", (p, q))


def s_A(p: int, q: int) -> Generator:
    return Generator("cactus_A", (p, q))


def s_v(p: int, q: int) -> Generator:
    return Generator("virtual", (p, q))


def t_C(i: int) -> Generator:
    return Generator("bk_C", (i,))


def t_A(i: int) -> Generator:
    return Generator("bk_A", (i,))


def q_C(p: int, q: int) -> Generator:
    return Generator("q_C", (p, q))


def q_A(p: int, q: int) -> Generator:
    return Generator("q_A", (p, q))


def xi(i: int) -> Generator:
    return Generator("reflection", (i,))


def t_v(i: int) -> Generator:
    return Generator("virtual_bk", (i,))


GroupWord = tuple  # tuple of Generator, applied right to left


def word_str(w: Sequence[Generator]) -> str:
    return " ".join(str(g) for g in w) if w else "1"


def _q_A_word(p: int, q: int) -> list[int]:
    """``q_[p,q]`` as Bender-Knuth indices: ``q_[1,q] q_[1,q-p+1] q_[1,q]`` when ``p > 1``."""
    if p == 1:
        return q_word(q)
    return q_word(q) + q_word(q - p + 1) + q_word(q)


def apply_generator(g: Generator, t: Tableau) -> Tableau:
    fam, p = g.family, g.params
    if fam == "cactus_C":
        return partial_xi_C(t, p)
    if fam == "q_C":
        return t if p[1] < p[0] else partial_xi_C(t, p)
    if fam == "cactus_A":
        return partial_xi_A(t, *p)
    if fam == "virtual":
        return virtual_partial_xi(t, *p)
    if fam == "bk_A":
        return bender_knuth_A(t, p[0])
    if fam == "q_A":
        return t if p[1] < p[0] else bk_word(t, _q_A_word(*p))
    if fam == "bk_C":
        return symplectic_bk(t, p[0])
    if fam == "reflection":
        return reflection_xi_i(t, p[0])
    if fam == "virtual_bk":
        return virtual_bk(t, p[0])
    raise VerifyError(f"no implementation for {g}")


def act(word: Sequence[Generator], t: Tableau) -> Tableau:
    """Right-to-left action of a group word."""
    for g in reversed(list(word)):
        t = apply_generator(g, t)
    return t


# ---------------------------------------------------------------------------
# Universes


@dataclass
class Universe:
    """A finite set of tableaux with cached generator permutations."""

    name: str
    vertices: list
    index: dict = field(default_factory=dict)
    perms: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.index = {v: k for k, v in enumerate(self.vertices)}

    def perm(self, g: Generator) -> list[int]:
        if g not in self.perms:
            out = []
            for v in self.vertices:
                w = apply_generator(g, v)
                k = self.index.get(w)
                if k is None:
                    raise VerifyError(f"{g} maps {render(v)} outside the universe")
                out.append(k)
            self.perms[g] = out
        return self.perms[g]

    def act_index(self, word: Sequence[Generator], k: int) -> int:
        for g in reversed(list(word)):
            k = self.perm(g)[k]
        return k


def kn_universe(n: int, max_cells: int) -> Universe:
    verts = []
    for lam in partitions_upto(max_cells, n):
        if lam:
            verts.extend(enumerate_kn(lam, n))
    return Universe(f"KN(lambda,{n}), |lambda|<={max_cells}", verts)


def ssyt_universe(m: int, max_cells: int) -> Universe:
    verts = []
    for lam in partitions_upto(max_cells, m):
        if lam:
            verts.extend(enumerate_ssyt(lam, m))
    return Universe(f"SSYT(lambda,{m}), |lambda|<={max_cells}", verts)


def virtual_universe(n: int, max_cells: int) -> Universe:
    base = kn_universe(n, max_cells)
    return Universe(f"E(KN(lambda,{n})), |lambda|<={max_cells}", [embed_E(t) for t in base.vertices])


# ---------------------------------------------------------------------------
# Relation suites


@dataclass(frozen=True)
class Relation:
    label: str
    lhs: tuple
    rhs: tuple = ()


@dataclass
class RelationSuite:
    name: str
    rank: int
    relations: list
    expect_hold: bool = True


def _intervals(lo: int, hi: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(lo, hi + 1) for q in range(p, hi + 1)]


def _disconnected(J: tuple[int, int], K: tuple[int, int]) -> bool:
    return J[1] + 1 < K[0] or K[1] + 1 < J[0]


def _power(w: Sequence[Generator], k: int) -> tuple:
    return tuple(w) * k


def _cactus_relations(nodes: int, gen: Callable[[int, int], Generator], typ: str) -> list[Relation]:
    """1, 2 and 3 relations of the cactus group on the nodes ``1..nodes``.

    ``typ = "C"`` treats node ``nodes`` as the special node (3C(i) for intervals containing it).
    """
    rels = []
    ivs = _intervals(1, nodes)
    tag = typ
    for J in ivs:
        rels.append(Relation(f"1{tag} {gen(*J)}^2", (gen(*J), gen(*J))))
    for a, J in enumerate(ivs):
        for K in ivs[a + 1:]:
            if _disconnected(J, K):
                rels.append(Relation(f"2{tag} {gen(*J)} {gen(*K)}", (gen(*J), gen(*K)), (gen(*K), gen(*J))))
    for p, q in ivs:
        for k, l in ivs:
            if not (p <= k and l <= q):
                continue
            if typ == "C" and q == nodes:
                rels.append(Relation(f"3C(i) [{p},{q}] [{k},{l}]", (gen(p, q), gen(k, l)), (gen(k, l), gen(p, q))))
            else:
                if typ == "A" and (k, l) == (p, q):
                    continue
                label = "3C(ii)" if typ == "C" else "3A"
                rels.append(Relation(f"{label} [{p},{q}] [{k},{l}]", (gen(p, q), gen(k, l)),
                                     (gen(p + q - l, p + q - k), gen(p, q))))
    return rels


def _bk_C_relations(n: int, t: Callable[[int], Generator], q: Callable[[int, int], Generator]) -> list[Relation]:
    rels = []
    for i in range(1, 2 * n):
        rels.append(Relation(f"BK1 t{i}^2", (t(i), t(i))))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rels.append(Relation(f"BK2 (t{n + i - 1} t{n + j - 1})^2", _power((t(n + i - 1), t(n + j - 1)), 2)))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                rels.append(Relation(f"BK3 (t{i} t{j})^2", _power((t(i), t(j)), 2)))
    for i in range(1, n):
        for j in range(1, n + 1):
            if i < n - j:
                rels.append(Relation(f"BK4 (t{i} t{n + j - 1})^2", _power((t(i), t(n + j - 1)), 2)))
    for i in range(1, n):
        for j in range(i + 2, n + 1):
            for k in range(j + 1, n + 1):
                rels.append(Relation(f"BK5 (t{i} q[{j},{k - 1}])^2", _power((t(i), q(j, k - 1)), 2)))
    for i in range(1, n):
        for j in range(i + 2, n + 1):
            rels.append(Relation(f"BK6 (t{i} q[{j},{n}])^2", _power((t(i), q(j, n)), 2)))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rels.append(Relation(f"BK7 (t{n + i - 1} q[{j},{n}])^2", _power((t(n + i - 1), q(j, n)), 2)))
    for i in range(1, n + 1):
        for j in range(n - i + 2, n + 1):
            for k in range(j + 1, n + 1):
                rels.append(Relation(f"BK8 (t{n + i - 1} q[{j},{k - 1}])^2", _power((t(n + i - 1), q(j, k - 1)), 2)))
    if n >= 3:
        rels.append(Relation("BK9 (t1 t2)^6", _power((t(1), t(2)), 6)))
    chain = [t(k) for k in range(n - 1, 0, -1)] + [t(k) for k in range(2, n)] + [t(n)]
    label = " ".join(str(g) for g in chain)
    rels.append(Relation(f"BK10 ({label})^4", _power(chain, 4)))
    return rels


def _bk_A_relations(m: int) -> list[Relation]:
    """Known relations among Bender-Knuth moves on the alphabet ``[m]``."""
    t = t_A
    top = m - 1
    rels = [Relation(f"t{i}^2", (t(i), t(i))) for i in range(1, top + 1)]
    for i in range(1, top + 1):
        for j in range(i + 2, top + 1):
            rels.append(Relation(f"t{i} t{j}", (t(i), t(j)), (t(j), t(i))))
    for i in range(3, top + 1):
        rels.append(Relation(f"(t1 q[1,{i}])^4", _power((t(1), q_A(1, i)), 4)))
    if top >= 2:
        rels.append(Relation("(t1 t2)^6", _power((t(1), t(2)), 6)))
    for i in range(1, top + 1):
        for j in range(i + 2, top + 1):
            for k in range(j + 1, top + 2):
                rels.append(Relation(f"(t{i} q[{j},{k - 1}])^2", _power((t(i), q_A(j, k - 1)), 2)))
    return rels


def _reflection_relations(n: int) -> list[Relation]:
    rels = [Relation(f"xi{i}^2", (xi(i), xi(i))) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if j == i + 1:
                order = 4 if j == n else 3
            else:
                order = 2
            rels.append(Relation(f"(xi{i} xi{j})^{order}", _power((xi(i), xi(j)), order)))
    return rels


def enumerate_relations(kind: str, rank: int) -> RelationSuite:
    """All relation instances of one family at a given rank.

    ``J_n``: cactus group of ``A_{rank-1}``.  ``J_sp``, ``vJ_2n``, ``BK_C``, ``B_n``: rank ``n``.
    ``BK_A``: alphabet ``[rank]``.  ``vBK_2n``: the ``BK_C`` list on virtual generators.
    """
    if rank < 2:
        raise VerifyError("rank must be at least 2")
    k = kind.replace("-", "_")
    if k in ("J_n", "jn"):
        return RelationSuite("J_n", rank, _cactus_relations(rank - 1, s_A, "A"))
    if k in ("J_sp", "jsp"):
        return RelationSuite("J_sp", rank, _cactus_relations(rank, s_C, "C"))
    if k in ("vJ_2n", "vj2n"):
        return RelationSuite("vJ_2n", rank, _cactus_relations(rank, s_v, "C"))
    if k in ("BK_C", "bkc"):
        return RelationSuite("BK_C", rank, _bk_C_relations(rank, t_C, q_C))
    if k in ("vBK_2n", "vbk"):
        return RelationSuite("vBK_2n", rank, _bk_C_relations(rank, t_v, s_v))
    if k in ("BK_A", "bka"):
        return RelationSuite("BK_A", rank, _bk_A_relations(rank))
    if k in ("B_n", "bn", "B_n_reflections", "reflections"):
        return RelationSuite("B_n", rank, _reflection_relations(rank))
    raise VerifyError(f"unknown relation family {kind!r}")


def non_relation_probes(n: int = 3) -> RelationSuite:
    """Words that do not act trivially: ``(t1 t2)^3`` and the braid relation ``t1 t2 t1 = t2 t1 t2``."""
    rels = [
        Relation("(t1 t2)^3", _power((t_C(1), t_C(2)), 3)),
        Relation("t1 t2 t1 = t2 t1 t2", (t_C(1), t_C(2), t_C(1)), (t_C(2), t_C(1), t_C(2))),
        Relation("virtual t1 t2 t1 = t2 t1 t2", (t_v(1), t_v(2), t_v(1)), (t_v(2), t_v(1), t_v(2))),
    ]
    return RelationSuite("BK_C non-relations", n, rels, expect_hold=False)


# ---------------------------------------------------------------------------
# Verification


@dataclass
class Witness:
    relation: str
    tableau: str
    lhs: str
    rhs: str


@dataclass
class Report:
    suite: str
    universe: str
    instances: int
    checked: int
    failures: list
    expect_hold: bool = True

    @property
    def passed(self) -> bool:
        """Suites of relations pass with no failures; probes pass when every word has a witness."""
        if self.expect_hold:
            return not self.failures
        return len({w.relation for w in self.failures}) == self.instances

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "universe": self.universe,
            "instances": self.instances,
            "checked": self.checked,
            "expect_hold": self.expect_hold,
            "passed": self.passed,
            "witnesses": [w.__dict__ for w in self.failures],
        }

    def text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.suite} on {self.universe}: {self.instances} relations, {self.checked} checks, "
                 f"{len(self.failures)} witnesses"]
        for w in self.failures:
            lines.append(f"  {w.relation}: T={w.tableau} lhs={w.lhs} rhs={w.rhs}")
        return "\n".join(lines)


def _filter(suite: RelationSuite, universe: Universe) -> list[Relation]:
    rels = suite.relations
    if universe.vertices and universe.vertices[0].kind == "C":
        rels = [r for r in rels if all(g.family != "virtual_bk" for g in r.lhs + r.rhs)]
    else:
        rels = [r for r in rels if all(g.family not in ("bk_C", "q_C", "cactus_C", "reflection")
                                       for g in r.lhs + r.rhs)]
    return rels


def verify(suite: RelationSuite, universe: Universe, first_only: bool = True) -> Report:
    """Check every relation on every vertex; record the first witness per relation (or all)."""
    rels = _filter(suite, universe)
    failures, checked = [], 0
    for rel in rels:
        for k, v in enumerate(universe.vertices):
            checked += 1
            a = universe.act_index(rel.lhs, k)
            b = universe.act_index(rel.rhs, k)
            if a != b:
                failures.append(Witness(rel.label, render(v), render(universe.vertices[a]),
                                        render(universe.vertices[b])))
                if first_only:
                    break
    return Report(suite.name, universe.name, len(rels), checked, failures, suite.expect_hold)


# ---------------------------------------------------------------------------
# Folding


def fold_gamma(word: Iterable[Generator], n: int) -> tuple:
    """``s_[p,q] -> s_[p,q] s_[2n-q,2n-p]`` for ``q < n`` and ``s_[p,n] -> s_[p,2n-p]``."""
    out: list[Generator] = []
    for g in word:
        if g.family != "cactus_C":
            raise VerifyError(f"fold_gamma expects symplectic cactus generators, got {g}")
        p, q = g.params
        if q == n:
            out.append(s_A(p, 2 * n - p))
        else:
            out += [s_A(p, q), s_A(2 * n - q, 2 * n - p)]
    return tuple(out)


def check_folding(word: Sequence[Generator], t: Tableau) -> bool:
    """``act(Gamma(w), E(t)) == E(act(w, t))``."""
    return act(fold_gamma(word, t.n), embed_E(t)) == embed_E(act(word, t))


# ---------------------------------------------------------------------------
# Property suites on the same universes


def skew_kn(n: int, max_cells: int, max_rows: int | None = None) -> list[Tableau]:
    """Skew KN tableaux with at most ``max_cells`` letters and a nonempty inner shape."""
    rows = n + 1 if max_rows is None else max_rows
    out = []
    for size in range(2, max_cells + rows + 1):
        for outer in partitions_of(size, rows):
            for isz in range(max(1, size - max_cells), size):
                for inner in partitions_of(isz, rows, outer[0]):
                    if len(inner) <= len(outer) and all(a <= b for a, b in zip(inner, outer)):
                        out.extend(enumerate_kn(outer, n, inner))
    return out


class _Probe:
    """Collects property failures into a ``Report``; one witness per property."""

    def __init__(self, suite: str, universe: str, props: Sequence[str]):
        self.suite, self.universe, self.props = suite, universe, list(props)
        self.checked = 0
        self.failures: dict[str, Witness] = {}

    def check(self, prop: str, ok: bool, t: Tableau | str, lhs: object = "", rhs: object = "") -> None:
        self.checked += 1
        if not ok and prop not in self.failures:
            self.failures[prop] = Witness(prop, t if isinstance(t, str) else render(t), _show(lhs), _show(rhs))

    def report(self) -> Report:
        return Report(self.suite, self.universe, len(self.props), self.checked, list(self.failures.values()))


def _show(x: object) -> str:
    if x is None:
        return "0"
    return render(x) if isinstance(x, Tableau) else str(x)


def _guard(probe: _Probe, prop: str, t: Tableau, fn: Callable[[], object]) -> object:
    try:
        return fn()
    except (ValueError, RuntimeError) as ex:
        probe.check(prop, False, t, type(ex).__name__, str(ex))
        return _FAILED


_FAILED = object()


def check_crystal_axioms(n: int, max_cells: int) -> Report:
    """Operator axioms on every ``KN(lambda, n)`` and unique source/sink per component of every Levi branching."""
    props = ["closure", "e f = id", "phi - eps = <wt, alpha>", "weight shift", "unique source/sink"]
    probe = _Probe("crystal", f"KN(lambda,{n}), |lambda|<={max_cells}", props)
    colors = range(1, n + 1)
    subsets = [J for k in range(1, n + 1) for J in itertools.combinations(colors, k)]
    for lam in partitions_upto(max_cells, n):
        if not lam:
            continue
        g = crystal_of_shape(lam, n)
        probe.check("closure", set(g.vertices) == set(enumerate_kn(lam, n)), str(lam))
        for v in g.vertices:
            wt = weight(v)
            for i in colors:
                eps, phi = eps_phi(v, i)
                probe.check("phi - eps = <wt, alpha>", phi - eps == pairing(wt, i, n), v, phi - eps, pairing(wt, i, n))
                w = f(v, i)
                if w is not None:
                    probe.check("e f = id", e(w, i) == v, v, e(w, i), v)
                    shifted = tuple(a - b for a, b in zip(wt, simple_root(i, n)))
                    probe.check("weight shift", weight(w) == shifted, v, weight(w), shifted)
        for J in subsets:
            for k, (src, snk) in enumerate(branch(g, J).sources_sinks()):
                probe.check("unique source/sink", len(src) == 1 and len(snk) == 1,
                            f"{lam} J={J} component {k}", len(src), len(snk))
    return probe.report()


def check_coplacticity(n: int, max_cells: int) -> Report:
    """Every complete slide and the rectification commute with ``e_i`` and ``f_i`` on skew KN tableaux."""
    props = ["slide is KN", "slide commutes with f", "slide commutes with e", "rectification order",
             "anti-rectify round trip"]
    probe = _Probe("coplactic", f"skew KN(-,{n}), <= {max_cells} letters", props)
    for t in skew_kn(n, max_cells):
        grid = Grid.from_tableau(t)
        for corner in grid.inner_corners():
            s = _guard(probe, "slide is KN", t, lambda: complete_slide(t, corner))
            if s is _FAILED:
                continue
            probe.check("slide is KN", is_kn_tableau(s), t, s)
            for i in range(1, n + 1):
                for name, op in (("f", f), ("e", e)):
                    a, b = op(t, i), op(s, i)
                    moved = None if a is None else complete_slide(a, corner)
                    probe.check(f"slide commutes with {name}", moved == b, t, moved, b)
        r = rectify(t)
        r2 = rectify(t, choose=lambda g: min(g.inner_corners()))
        probe.check("rectification order", r == r2, t, r, r2)
        r, journal = rectify_with_journal(t)
        back = _guard(probe, "anti-rectify round trip", t, lambda: anti_rectify(r, journal))
        if back is not _FAILED:
            probe.check("anti-rectify round trip", back == t, t, back, t)
    return probe.report()


def check_virtualization(n: int, max_cells: int) -> Report:
    """``E`` is injective with recording tableau ``Q_lambda``, intertwines all operators and every partial ``xi``."""
    props = ["Q = Q_lambda", "E injective", "E^-1 E = id", "f^E E = E f", "e^E E = E e", "xi square"]
    probe = _Probe("virtual", f"KN(lambda,{n}), |lambda|<={max_cells}", props)
    for lam in partitions_upto(max_cells, n):
        if not lam:
            continue
        q_lam = build_Q_lambda(lam, n)
        images: dict[Tableau, Tableau] = {}
        for t in enumerate_kn(lam, n):
            p, q = embed_E_with_Q(t)
            probe.check("Q = Q_lambda", q == q_lam, t, q, q_lam)
            probe.check("E injective", p not in images, t, images.get(p), p)
            images[p] = t
            back = _guard(probe, "E^-1 E = id", t, lambda: invert_E(p))
            if back is not _FAILED:
                probe.check("E^-1 E = id", back == t, t, back, t)
            for i in range(1, n + 1):
                for name, op, vop in (("f", f, virtual_f), ("e", e, virtual_e)):
                    a, b = op(t, i), vop(p, i)
                    ea = None if a is None else embed_E(a)
                    probe.check(f"{name}^E E = E {name}", ea == b, t, ea, b)
            for lo in range(1, n + 1):
                for hi in range(lo, n + 1):
                    probe.check("xi square", check_diagram(t, (lo, hi)), t, f"[{lo},{hi}]")
    return probe.report()


def check_switching(n: int, max_cells: int) -> Report:
    """``xi_[j,n]`` by colorful switching equals the virtual route and the crystal-path oracle."""
    props = ["switching = virtual", "switching = oracle"]
    probe = _Probe("switching", f"KN(lambda,{n}), |lambda|<={max_cells}", props)
    for lam in partitions_upto(max_cells, n):
        if not lam:
            continue
        for t in enumerate_kn(lam, n):
            for j in range(1, n + 1):
                a = _guard(probe, "switching = virtual", t, lambda: partial_xi_C(t, (j, n)))
                if a is _FAILED:
                    continue
                b = virtual_partial_xi_C(t, j, n)
                o = xi_oracle(t, list(range(j, n + 1)))
                probe.check("switching = virtual", a == b, t, a, b)
                probe.check("switching = oracle", a == o, t, a, o)
    return probe.report()


def check_character_symmetry(n: int, max_cells: int) -> Report:
    """The character of each ``KN(lambda, n)`` is invariant under the simple reflections."""
    props = [f"r_{i}" for i in range(1, n + 1)]
    probe = _Probe("character", f"KN(lambda,{n}), |lambda|<={max_cells}", props)
    for lam in partitions_upto(max_cells, n):
        if not lam:
            continue
        ch = character(crystal_of_shape(lam, n))
        for i in range(1, n + 1):
            moved = Counter({reflect_weight(w, i, n): m for w, m in ch.items()})
            probe.check(f"r_{i}", moved == ch, str(lam))
    return probe.report()


PROPERTY_SUITES = {
    "crystal": check_crystal_axioms,
    "coplactic": check_coplacticity,
    "virtual": check_virtualization,
    "switching": check_switching,
    "character": check_character_symmetry,
}

RELATION_SUITES = {
    "jsp": ("J_sp", "kn"),
    "jn": ("J_n", "ssyt"),
    "vjsp": ("vJ_2n", "virtual"),
    "bkc": ("BK_C", "kn"),
    "vbkc": ("vBK_2n", "virtual"),
    "bka": ("BK_A", "ssyt"),
    "bn": ("B_n", "kn"),
}

SUITES = tuple(RELATION_SUITES) + ("probes",) + tuple(PROPERTY_SUITES)


def run_suite(name: str, rank: int, max_cells: int) -> Report:
    """Run a named suite; relation suites act on the universe matching their generators."""
    key_ = name.lower().replace("-", "").replace("_", "")
    if key_ in PROPERTY_SUITES:
        return PROPERTY_SUITES[key_](rank, max_cells)
    if key_ == "probes":
        return verify(non_relation_probes(rank), kn_universe(rank, max_cells))
    if key_ not in RELATION_SUITES:
        raise VerifyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    kind, uni = RELATION_SUITES[key_]
    suite = enumerate_relations(kind, rank)
    if uni == "kn":
        universe = kn_universe(rank, max_cells)
    elif uni == "virtual":
        universe = virtual_universe(rank, max_cells)
    else:
        universe = ssyt_universe(rank, max_cells)
    return verify(suite, universe)
