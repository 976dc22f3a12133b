"""Exhaustive bounded verification of the package's structural theorems.

Each named check enumerates a full instance space at configurable
bounds, reruns the claimed identity instance by instance, and reports
every counterexample with a serialized witness.  Checks are
deterministic and independent of enumeration order; the CLI ``verify``
subcommand and the acceptance tests drive them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Callable, Hashable, Iterator

from .errors import ValidationError
from .factorization import (
    DecreasingFactorization,
    enumerate_factorizations,
    excess,
    to_biword,
    weight,
)
from .graphs import ColoredDigraph, build_component
from .grothendieck import (
    grassmannian_element,
    grothendieck_poly,
    schur_coeffs_via_crystal,
    schur_dict,
    series_via_expansion,
)
from .hecke import HeckeElement, fully_commutative_elements, is_fully_commutative
from .insertion import micro_class, star_insert, star_insert_word, star_inverse, hecke_insert
from .local3 import all_factorizations3, crystal_graph_local3, e3, f3
from .residue import canonical_form, res, res_inv
from .star_crystal import e_star, f_star, pairing
from .svt_crystal import e_classical, e_svt, f_classical, f_svt
from .tableaux import SkewSetValuedTableau, SkewShape, weight_of
from .uncrowding import star_tilde, uncrowd

__all__ = ["Bounds", "CheckReport", "check_theorem", "stembridge_audit",
           "available_checks", "default_bounds", "run_all"]


@dataclass(frozen=True)
class Bounds:
    """Instance-space bounds; every checker documents which it reads."""

    n: int = 4                # permutations live in S_n
    m: int = 3                # number of blocks / maximum entry
    max_letters: int = 6      # total letters of a factorization
    max_cells: int = 4        # cells of a skew shape
    max_rows: int = 4
    max_cols: int = 4
    max_excess: int = 2
    max_beta: int = 2


@dataclass
class CheckReport:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, witness: str) -> None:
        if len(self.failures) < 50:
            self.failures.append(witness)
        else:
            self.failures.append("... further failures suppressed")
            raise _StopCheck

    def summary(self) -> str:
        verdict = "ok" if self.ok else f"{len(self.failures)} failures"
        return f"{self.name}: {self.instances} instances, {verdict} ({self.elapsed:.2f}s)"


class _StopCheck(Exception):
    pass


# ---------------------------------------------------------------------------
# instance generators

def partitions_in_box(max_rows: int, max_cols: int) -> Iterator[tuple[int, ...]]:
    def rec(prev: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if rows_left == 0:
            return
        for part in range(1, prev + 1):
            for rest in rec(part, rows_left - 1):
                yield (part,) + rest

    yield from rec(max_cols, max_rows)


def skew_shapes(b: Bounds) -> Iterator[SkewShape]:
    """All shapes with 1..max_cells cells inside the bounding box,
    including shapes with empty rows."""
    for outer in partitions_in_box(b.max_rows, b.max_cols):
        if not outer:
            continue
        for inner in partitions_in_box(len(outer), outer[0]):
            try:
                sh = SkewShape(outer, inner)
            except ValidationError:
                continue
            if 1 <= sh.size() <= b.max_cells:
                yield sh


def svt_fillings(shape: SkewShape, m: int,
                 max_excess: int | None = None) -> Iterator[SkewSetValuedTableau]:
    """Every semistandard set-valued filling of ``shape`` with entries at
    most ``m`` (and bounded surplus when requested)."""
    cells = list(shape.cells())
    subsets = [tuple(sorted(s)) for r in range(1, m + 1)
               for s in combinations(range(1, m + 1), r)]
    filling: dict[tuple[int, int], tuple[int, ...]] = {}

    def rec(idx: int, extra: int) -> Iterator[dict]:
        if idx == len(cells):
            yield dict(filling)
            return
        i, j = cells[idx]
        left = filling.get((i, j - 1))
        below = filling.get((i - 1, j))
        lo = 1
        if left is not None:
            lo = max(lo, left[-1])
        strict_lo = below[-1] if below is not None else 0
        for s in subsets:
            if s[0] < lo or s[0] <= strict_lo:
                continue
            surplus = extra + len(s) - 1
            if max_excess is not None and surplus > max_excess:
                continue
            filling[(i, j)] = s
            yield from rec(idx + 1, surplus)
            del filling[(i, j)]

    for cells_map in rec(0, 0):
        yield SkewSetValuedTableau(
            shape,
            tuple(tuple(cells_map[(i, j)]
                        for j in range(shape.inner_at(i) + 1, shape.outer_at(i) + 1))
                  for i in range(1, shape.rows + 1)))


def fc_factorizations(b: Bounds) -> Iterator[DecreasingFactorization]:
    """All factorizations of fully-commutative elements of S_n into m
    blocks using at most ``max_letters`` letters."""
    for w in fully_commutative_elements(b.n):
        slack = b.max_letters - w.length()
        if slack < 0:
            continue
        yield from enumerate_factorizations(w, b.m, slack)


def fc_words(b: Bounds) -> Iterator[tuple[int, ...]]:
    from .hecke import HeckeWord, eval_word

    def rec(word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if word and not is_fully_commutative(eval_word(HeckeWord(word, b.n))):
            return
        yield word
        if len(word) < b.max_letters:
            for a in range(1, b.n):
                yield from rec(word + (a,))

    for w in rec(()):
        if w:
            yield w


# ---------------------------------------------------------------------------
# Stembridge audit on abstract colored digraphs

def stembridge_audit(g: ColoredDigraph) -> CheckReport:
    """String bookkeeping, the local axioms for adjacent and distant
    colors, and uniqueness of the highest weight per component."""
    report = CheckReport("stembridge-audit")
    start = time.perf_counter()
    out: dict[tuple[Hashable, int], Hashable] = {}
    inn: dict[tuple[Hashable, int], Hashable] = {}
    for a, c, v in g.edges:
        if (a, c) in out and out[(a, c)] != v:
            report.fail(f"two {c}-edges out of {a}")
        if (v, c) in inn and inn[(v, c)] != a:
            report.fail(f"two {c}-edges into {v}")
        out[(a, c)] = v
        inn[(v, c)] = a

    eps: dict[tuple[Hashable, int], int] = {}
    phi: dict[tuple[Hashable, int], int] = {}

    def walk(u: Hashable, c: int, table: dict, step: dict) -> int:
        k, cur = 0, u
        while (cur, c) in step:
            cur = step[(cur, c)]
            k += 1
            if k > len(g.weights):
                raise ValidationError(f"color {c} string through {u} cycles")
        table[(u, c)] = k
        return k

    try:
        for u in g.weights:
            for c in g.colors:
                e = walk(u, c, eps, inn)
                f = walk(u, c, phi, out)
                wt = g.weights[u]
                if f - e != wt[c - 1] - wt[c]:
                    report.fail(f"string lengths at {u} color {c} disagree with weight")
            for c in g.colors:
                v = out.get((u, c))
                if v is None:
                    continue
                wu, wv = g.weights[u], g.weights[v]
                expected = list(wu)
                expected[c - 1] -= 1
                expected[c] += 1
                if list(wv) != expected:
                    report.fail(f"edge {u} -{c}-> {v} moves weight incorrectly")

        # Under a raising step, an adjacent phi_j drops by one or eps_j
        # rises by one; lowering steps mirror this.  Distant colors never
        # interact.
        for u in g.weights:
            for i in g.colors:
                ei_u = inn.get((u, i))
                fi_u = out.get((u, i))
                for j in g.colors:
                    if i == j:
                        continue
                    if ei_u is not None:
                        d_eps = eps[(ei_u, j)] - eps[(u, j)]
                        d_phi = phi[(ei_u, j)] - phi[(u, j)]
                        if abs(i - j) >= 2 and (d_eps, d_phi) != (0, 0):
                            report.fail(f"distant colors {i},{j} interact at {u}")
                        if abs(i - j) == 1 and (d_phi, d_eps) not in ((-1, 0), (0, 1)):
                            report.fail(f"adjacent raise deltas at {u} colors {i},{j}: "
                                        f"{(d_phi, d_eps)}")
                    if fi_u is not None:
                        d_phi = phi[(fi_u, j)] - phi[(u, j)]
                        d_eps = eps[(fi_u, j)] - eps[(u, j)]
                        if abs(i - j) >= 2 and (d_eps, d_phi) != (0, 0):
                            report.fail(f"distant colors {i},{j} interact at {u}")
                        if abs(i - j) == 1 and (d_phi, d_eps) not in ((1, 0), (0, -1)):
                            report.fail(f"adjacent lower deltas at {u} colors {i},{j}: "
                                        f"{(d_phi, d_eps)}")

        def up(u, *colors):
            for c in colors:
                u = inn.get((u, c)) if u is not None else None
            return u

        def down(u, *colors):
            for c in colors:
                u = out.get((u, c)) if u is not None else None
            return u

        for u in g.weights:
            for i in g.colors:
                for j in g.colors:
                    if j <= i:
                        continue
                    ei, ej = inn.get((u, i)), inn.get((u, j))
                    if ei is not None and ej is not None:
                        d_i_of_j = eps[(ei, j)] - eps[(u, j)]
                        d_j_of_i = eps[(ej, i)] - eps[(u, i)]
                        if abs(i - j) >= 2 or (d_i_of_j == 0 and d_j_of_i == 0):
                            if up(u, i, j) != up(u, j, i) or up(u, i, j) is None:
                                report.fail(f"raising {i},{j} fail to commute at {u}")
                        elif d_i_of_j == 1 and d_j_of_i == 1:
                            left = up(u, i, j, j, i)
                            right = up(u, j, i, i, j)
                            if left is None or left != right:
                                report.fail(f"raising braid relation fails at {u} ({i},{j})")
                    fi, fj = out.get((u, i)), out.get((u, j))
                    if fi is not None and fj is not None:
                        d_i_of_j = phi[(fi, j)] - phi[(u, j)]
                        d_j_of_i = phi[(fj, i)] - phi[(u, i)]
                        if abs(i - j) >= 2 or (d_i_of_j == 0 and d_j_of_i == 0):
                            if down(u, i, j) != down(u, j, i) or down(u, i, j) is None:
                                report.fail(f"lowering {i},{j} fail to commute at {u}")
                        elif d_i_of_j == 1 and d_j_of_i == 1:
                            left = down(u, i, j, j, i)
                            right = down(u, j, i, i, j)
                            if left is None or left != right:
                                report.fail(f"lowering braid relation fails at {u} ({i},{j})")

        for comp in g.components():
            report.instances += len(comp)
            if len(g.sources(comp)) != 1:
                report.fail(f"component of {next(iter(comp))} has "
                            f"{len(g.sources(comp))} highest weights")
    except _StopCheck:
        pass
    report.elapsed = time.perf_counter() - start
    return report


def _component_characters(g: ColoredDigraph, m: int, report: CheckReport) -> None:
    """Character of each component must be the Schur polynomial of the
    sorted sink weight."""
    for comp in g.components():
        sinks = g.sinks(comp)
        if len(sinks) != 1:
            report.fail(f"component of {next(iter(comp))} has {len(sinks)} sinks")
            continue
        mu = tuple(sorted((v for v in g.weights[sinks[0]] if v), reverse=True))
        char: dict[tuple[int, ...], int] = {}
        for u in comp:
            wt = tuple(g.weights[u])
            char[wt] = char.get(wt, 0) + 1
        if char != schur_dict(mu, m):
            report.fail(f"component of {sinks[0]} has a non-Schur character")


# ---------------------------------------------------------------------------
# individual checks

def _timed(fn: Callable[[Bounds, CheckReport], None], name: str
           ) -> Callable[[Bounds], CheckReport]:
    def run(bounds: Bounds) -> CheckReport:
        report = CheckReport(name)
        start = time.perf_counter()
        try:
            fn(bounds, report)
        except _StopCheck:
            pass
        except Exception as exc:  # noqa: BLE001 - a broken operator is a failure
            report.failures.append(f"exception: {exc!r}")
        report.elapsed = time.perf_counter() - start
        return report

    return run


def _check_residue_intertwining(b: Bounds, report: CheckReport) -> None:
    """res maps the tableau operators to the factorization operators."""
    for shape in skew_shapes(b):
        for t in svt_fillings(shape, b.m):
            f = res(t, b.m)
            for i in range(1, b.m):
                report.instances += 1
                for tab_op, fac_op, tag in ((f_svt, f_star, "lower"),
                                            (e_svt, e_star, "raise")):
                    t2 = tab_op(t, i)
                    f2 = fac_op(f, i)
                    lhs = None if t2 is None else res(t2, b.m).factors
                    rhs = None if f2 is None else f2.factors
                    if lhs != rhs:
                        report.fail(f"{tag} {i} on {shape}: {t.rows} -> {lhs} vs {rhs}")


def _check_hecke_recording(b: Bounds, report: CheckReport) -> None:
    """Hecke insertion of a straight-shape residue records the tableau."""
    for outer in partitions_in_box(b.max_rows, b.max_cols):
        if not 0 < sum(outer) <= b.max_cells:
            continue
        shape = SkewShape(outer, ())
        for t in svt_fillings(shape, b.m):
            report.instances += 1
            q = hecke_insert(to_biword(res(t, b.m))).q
            if q != t:
                report.fail(f"recording mismatch for {t.rows} on {shape}")


def _check_star_bijection(b: Bounds, report: CheckReport) -> None:
    """Star insertion round-trips against its inverse."""
    from .hecke import HeckeWord, eval_word

    for f in fc_factorizations(b):
        report.instances += 1
        biword = to_biword(f)
        result = star_insert(biword)
        word = f.flatten()
        p_word = tuple(v for row in reversed(result.p.rows) for v in row)
        insertion_order = tuple(reversed(word.letters))
        if word.letters and eval_word(HeckeWord(p_word, f.n)) != eval_word(
                HeckeWord(insertion_order, f.n)):
            report.fail(f"row word of P not equivalent for {f}")
            continue
        back = star_inverse(result.p, result.q)
        if (back.top, back.bottom) != (biword.top, biword.bottom):
            report.fail(f"round trip failed for {f}: got {back}")


def _check_insertion_invariance(b: Bounds, report: CheckReport) -> None:
    """Micro-equivalent insertion sequences share the insertion tableau."""
    seen: set[tuple[int, ...]] = set()
    for word in fc_words(b):
        if word in seen:
            continue
        cls = micro_class(word)
        seen.update(cls)
        report.instances += 1
        tableaux = {star_insert_word(u).p for u in cls}
        if len(tableaux) != 1:
            report.fail(f"class of {word} has {len(tableaux)} distinct tableaux")


def _check_operator_rewrites(b: Bounds, report: CheckReport) -> None:
    """Crystal moves rewrite the reversed word by micro-moves."""
    for f in fc_factorizations(b):
        rev = tuple(reversed(f.flatten().letters))
        cls = None
        for i in range(1, f.m):
            for op in (f_star, e_star):
                g = op(f, i)
                if g is None:
                    continue
                report.instances += 1
                if cls is None:
                    cls = micro_class(rev)
                if tuple(reversed(g.flatten().letters)) not in cls:
                    report.fail(f"{op.__name__} {i} of {f} leaves the rewrite class")


def _check_recording_intertwining(b: Bounds, report: CheckReport) -> None:
    """Q of the star insertion carries the classical crystal action."""
    for f in fc_factorizations(b):
        q = star_insert(to_biword(f)).q
        for i in range(1, f.m):
            report.instances += 1
            g = f_star(f, i)
            q2 = f_classical(q, i)
            if (g is None) != (q2 is None):
                report.fail(f"definedness differs for {f} color {i}")
                continue
            if g is not None and star_insert(to_biword(g)).q != q2:
                report.fail(f"recording tableaux differ for {f} color {i}")


def _check_uncrowding_compat(b: Bounds, report: CheckReport) -> None:
    """Padded star insertion records the uncrowding of the canonical
    representative of the residue class."""
    seen: set[tuple] = set()
    for shape in skew_shapes(b):
        for t in svt_fillings(shape, b.m, max_excess=b.max_excess):
            h = res(t, b.m)
            if h.factors in seen:
                continue
            seen.add(h.factors)
            report.instances += 1
            canonical = canonical_form(t, b.m)
            p_tilde, _ = uncrowd(canonical)
            q = star_tilde(h).q
            if q != p_tilde:
                report.fail(f"uncrowding mismatch for {h} (from {t.rows} on {shape})")


def _check_uncrowding_intertwining(b: Bounds, report: CheckReport) -> None:
    """Uncrowding commutes with the crystal operators and fixes the
    recording side."""
    for shape in skew_shapes(b):
        for t in svt_fillings(shape, b.m, max_excess=b.max_excess):
            p1, q1 = uncrowd(t)
            for i in range(1, b.m):
                report.instances += 1
                t2 = f_svt(t, i)
                p2 = f_classical(p1, i)
                if (t2 is None) != (p2 is None):
                    report.fail(f"definedness differs for {t.rows} color {i}")
                    continue
                if t2 is None:
                    continue
                p3, q3 = uncrowd(t2)
                if p3 != p2 or q3 != q1:
                    report.fail(f"uncrowding fails to intertwine for {t.rows} color {i}")


def _check_sink_rows(b: Bounds, report: CheckReport) -> None:
    """At a sink, row i of the insertion tableau is block m+1-i, and the
    shape is the sorted weight."""
    for f in fc_factorizations(b):
        if any(f_star(f, i) is not None for i in range(1, f.m)):
            continue
        report.instances += 1
        p = star_insert(to_biword(f)).p
        wt = weight(f)
        expected_shape = tuple(sorted((v for v in wt if v), reverse=True))
        if p.shape.outer != expected_shape:
            report.fail(f"sink {f} has shape {p.shape.outer}, weight {wt}")
            continue
        for i in range(1, p.shape.rows + 1):
            if tuple(reversed(p.rows[i - 1])) != f.factor(f.m + 1 - i):
                report.fail(f"sink {f} row {i} differs from block {f.m + 1 - i}")
                break


def _check_pairing_side_conditions(b: Bounds, report: CheckReport) -> None:
    """The largest unpaired letter x of the lower block never sees x-1
    above, and the placement of x+1 is one of three exclusive cases."""
    for f in fc_factorizations(b):
        for i in range(1, f.m):
            pr = pairing(f, i)
            if not pr.unpaired_lower:
                continue
            report.instances += 1
            x = pr.unpaired_lower[0]
            lo, up = f.factor(i), f.factor(i + 1)
            if x - 1 in up:
                report.fail(f"{f} color {i}: {x - 1} present above")
            cases = [(x + 1 in lo and x + 1 in up),
                     (x + 1 not in lo and x + 1 not in up),
                     (x + 1 in up and x + 1 not in lo)]
            if sum(cases) != 1:
                report.fail(f"{f} color {i}: letter {x + 1} breaks the trichotomy")


def _star_graph(b: Bounds) -> ColoredDigraph:
    return build_component(fc_factorizations(b), tuple(range(1, b.m)),
                           lower=f_star, raise_=e_star, weight=weight)


def _check_stembridge_star(b: Bounds, report: CheckReport) -> None:
    g = _star_graph(b)
    sub = stembridge_audit(g)
    report.instances += sub.instances
    report.failures.extend(sub.failures)
    _component_characters(g, b.m, report)


def _check_stembridge_svt(b: Bounds, report: CheckReport) -> None:
    for shape in skew_shapes(b):
        seeds = list(svt_fillings(shape, b.m))
        g = build_component(seeds, tuple(range(1, b.m)),
                            lower=f_svt, raise_=e_svt,
                            weight=lambda t: weight_of(t) + (0,) * (b.m - len(weight_of(t))))
        sub = stembridge_audit(g)
        report.instances += sub.instances
        for msg in sub.failures:
            report.fail(f"{shape}: {msg}")
        _component_characters(g, b.m, report)


def _check_stembridge_local3(b: Bounds, report: CheckReport) -> None:
    seeds = all_factorizations3(b.m, b.max_letters)
    g = build_component(seeds, tuple(range(1, b.m)), lower=f3, raise_=e3, weight=weight)
    sub = stembridge_audit(g)
    report.instances += sub.instances
    report.failures.extend(sub.failures)
    _component_characters(g, b.m, report)


def _check_local3_consistency(b: Bounds, report: CheckReport) -> None:
    """Local operators preserve the Hecke class and the letter surplus."""
    for f in all_factorizations3(b.m, b.max_letters):
        for i in range(1, b.m):
            report.instances += 1
            for op in (f3, e3):
                g = op(f, i)
                if g is None:
                    continue
                if g.eval() != f.eval() or g.num_letters() != f.num_letters():
                    report.fail(f"{op.__name__} {i} of {f} changes class or surplus")
                back = e3(g, i) if op is f3 else f3(g, i)
                if back != f:
                    report.fail(f"{op.__name__} {i} of {f} is not invertible")


def _check_dual_pipeline(b: Bounds, report: CheckReport) -> None:
    """Sink counting and monomial peeling give the same Schur series."""
    for w in fully_commutative_elements(b.n):
        report.instances += 1
        via_crystal = schur_coeffs_via_crystal(w, b.m, b.max_beta)
        via_poly = series_via_expansion(w, b.m, b.max_beta)
        if via_crystal != via_poly:
            report.fail(f"pipelines disagree for {w}: "
                        f"{via_crystal.coeffs} vs {via_poly.coeffs}")


def _check_grassmannian(b: Bounds, report: CheckReport) -> None:
    """The set-valued generating function of a straight shape matches the
    factorization generating function of its one-descent permutation."""
    for mu in partitions_in_box(b.max_rows, b.max_cols):
        if not 0 < sum(mu) <= b.max_cells or len(mu) > b.m:
            continue
        report.instances += 1
        shape = SkewShape(mu, ())
        svt_side: dict[int, dict[tuple[int, ...], int]] = {}
        top = 0
        for t in svt_fillings(shape, b.m):
            d = sum(len(c) for _, _, c in t.cells()) - shape.size()
            wt = weight_of(t) + (0,) * (b.m - len(weight_of(t)))
            svt_side.setdefault(d, {})
            svt_side[d][wt] = svt_side[d].get(wt, 0) + 1
            top = max(top, d)
        w = grassmannian_element(mu, b.m)
        fact_side = grothendieck_poly(w, b.m, top + 1)
        for d in range(top + 2):
            if svt_side.get(d, {}) != {k: v for k, v in fact_side.get(d, {}).items() if v}:
                report.fail(f"shape {mu} degree {d}: generating functions differ")


_CHECKS: dict[str, Callable[[Bounds], CheckReport]] = {}
_DEFAULTS: dict[str, Bounds] = {}


def _register(name: str, fn, bounds: Bounds) -> None:
    _CHECKS[name] = _timed(fn, name)
    _DEFAULTS[name] = bounds


_register("residue-intertwining", _check_residue_intertwining,
          Bounds(m=3, max_cells=4, max_rows=4, max_cols=4))
_register("hecke-recording", _check_hecke_recording,
          Bounds(m=3, max_cells=5, max_rows=5, max_cols=5))
_register("star-bijection", _check_star_bijection,
          Bounds(n=4, m=4, max_letters=6))
_register("insertion-invariance", _check_insertion_invariance,
          Bounds(n=4, max_letters=6))
_register("operator-rewrites", _check_operator_rewrites,
          Bounds(n=4, m=4, max_letters=6))
_register("recording-intertwining", _check_recording_intertwining,
          Bounds(n=4, m=4, max_letters=6))
_register("uncrowding-compat", _check_uncrowding_compat,
          Bounds(m=3, max_cells=5, max_rows=4, max_cols=4, max_excess=2))
_register("uncrowding-intertwining", _check_uncrowding_intertwining,
          Bounds(m=3, max_cells=5, max_rows=4, max_cols=4, max_excess=2))
_register("sink-rows", _check_sink_rows, Bounds(n=4, m=4, max_letters=6))
_register("pairing-side-conditions", _check_pairing_side_conditions,
          Bounds(n=4, m=4, max_letters=6))
_register("stembridge-star", _check_stembridge_star,
          Bounds(n=5, m=4, max_letters=6))
_register("stembridge-svt", _check_stembridge_svt,
          Bounds(m=4, max_cells=6, max_rows=3, max_cols=3))
_register("stembridge-local3", _check_stembridge_local3,
          Bounds(m=5, max_letters=6))
_register("local3-consistency", _check_local3_consistency,
          Bounds(m=5, max_letters=6))
_register("dual-pipeline", _check_dual_pipeline, Bounds(n=4, m=4, max_beta=2))
_register("grassmannian-match", _check_grassmannian,
          Bounds(m=3, max_cells=4, max_rows=4, max_cols=4))

_DEEP_SCALE = {
    "residue-intertwining": Bounds(m=3, max_cells=6, max_rows=4, max_cols=4),
    "hecke-recording": Bounds(m=3, max_cells=5, max_rows=5, max_cols=5),
    "star-bijection": Bounds(n=5, m=4, max_letters=7),
    "stembridge-svt": Bounds(m=4, max_cells=6, max_rows=4, max_cols=4),
    "uncrowding-compat": Bounds(m=3, max_cells=6, max_rows=4, max_cols=4, max_excess=3),
}


def available_checks() -> list[str]:
    return sorted(_CHECKS)


def default_bounds(name: str, deep: bool = False) -> Bounds:
    if name not in _CHECKS:
        raise ValidationError(f"unknown check {name!r}; known: {available_checks()}")
    if deep and name in _DEEP_SCALE:
        return _DEEP_SCALE[name]
    return _DEFAULTS[name]


def check_theorem(name: str, bounds: Bounds | None = None,
                  deep: bool = False) -> CheckReport:
    if name not in _CHECKS:
        raise ValidationError(f"unknown check {name!r}; known: {available_checks()}")
    return _CHECKS[name](bounds or default_bounds(name, deep))


def run_all(deep: bool = False) -> list[CheckReport]:
    return [check_theorem(name, deep=deep) for name in available_checks()]
