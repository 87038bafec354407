"""Deterministic verification suites: every cross-check in the package,
aggregated into a pass/fail report.

Each case compares two independent derivation paths (closed formula vs
brute force, equation iteration vs generation, bijection round trips,
differential systems vs series iteration) with exact arithmetic.  The
report is a list of (suite, case, expected, got, pass) rows in a fixed
order, so its rendering is byte-deterministic.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction


class CaseResult:
    __slots__ = ("suite", "case", "expected", "got", "ok")

    def __init__(self, suite, case, expected, got, ok=None):
        self.suite = suite
        self.case = case
        self.expected = str(expected)
        self.got = str(got)
        self.ok = (self.expected == self.got) if ok is None else bool(ok)

    def row(self):
        return {"suite": self.suite, "case": self.case,
                "expected": self.expected, "got": self.got,
                "pass": self.ok}


def _bool_case(suite, case, ok):
    return CaseResult(suite, case, True, bool(ok))


# -- suites --------------------------------------------------------------------


def suite_counts():
    from tuttelab.closed_forms import maps_count
    from tuttelab.generate import all_maps, all_maps_oracle
    out = []
    for n in range(7):
        want = maps_count(n)
        out.append(CaseResult("counts", f"maps({n}) generator", want,
                              len(all_maps(n))))
        if n <= 4:
            out.append(CaseResult("counts", f"maps({n}) oracle", want,
                                  len(all_maps_oracle(n))))
    return out


def suite_potts():
    from tuttelab.generate import all_maps
    from tuttelab.potts import (potts, potts_by_interpolation,
                                potts_from_tutte, potts_subset_oracle)
    out = []
    for n in range(5):
        ok = all(potts(m) == potts_subset_oracle(m)
                 == potts_by_interpolation(m) == potts_from_tutte(m)
                 for m in all_maps(n))
        out.append(_bool_case("potts", f"triple equivalence, {n} edges", ok))
    return out


# expand vs brute-force caps: symbolic coefficients throughout
_EQ_CAPS = (
    ("MAPS_1CAT", 6),
    ("NT", 6),
    ("NQ", 4),
    ("BIP", 4),
    ("EULER_NT", 2),
    ("POTTS_MAPS", 4),
    ("TUTTE_MAPS", 3),
    ("TUTTE_NONSEP_TRI", 3),
    ("POTTS_QUASI_TRI", 4),
    ("TUTTE_QUASI_TRI", 4),
    ("BIPOLAR_MAPS", 5),
    ("BIPOLAR_TRI", 3),
)


def suite_equations():
    from tuttelab.equations import EquationId, brute_force_gf, expand
    out = []
    for name, cap in _EQ_CAPS:
        eq = EquationId[name]
        lhs = expand(eq, cap)
        if name.endswith("QUASI_TRI"):
            lhs = lhs.subs({"x": 0})
        ok = lhs == brute_force_gf(eq, cap)
        out.append(_bool_case("equations", f"{name} vs brute force (order "
                              f"{cap})", ok))
    lo = expand(EquationId.MAPS_1CAT, 4)
    hi = expand(EquationId.MAPS_1CAT, 8)
    ok = all(lo.coeff(k) == hi.coeff(k) for k in range(5))
    out.append(_bool_case("equations", "prefix stability (MAPS_1CAT 4 vs 8)",
                          ok))
    return out


def suite_closed_forms():
    from tuttelab import closed_forms as cf
    from tuttelab.generate import all_maps, four_valent
    from tuttelab.kernels import (_bipolar_formula_vs_brute_force,
                                  _bipolar_tri_formula_vs_brute_force,
                                  _tree_rooted_formula_vs_brute_force,
                                  _tree_rooted_tri_formula_vs_brute_force)
    from tuttelab.potts import spanning_tree_count
    out = [
        CaseResult("closed_forms", "maps(2)", 9, cf.maps_count(2)),
        CaseResult("closed_forms", "tree_rooted(1,1)", 6,
                   cf.tree_rooted_count(1, 1)),
        _bool_case("closed_forms", "bipolar maps formulas, <= 4 edges",
                   _bipolar_formula_vs_brute_force()),
        _bool_case("closed_forms", "bipolar near-triangulations, m <= 3",
                   _bipolar_tri_formula_vs_brute_force()),
        _bool_case("closed_forms", "tree-rooted maps, i+j <= 4",
                   _tree_rooted_formula_vs_brute_force()),
        _bool_case("closed_forms", "tree-rooted near-triangulations, i <= 3",
                   _tree_rooted_tri_formula_vs_brute_force()),
    ]
    for n in range(2):
        want = cf.nt1_count(n)
        got = sum(1 for m in all_maps(3 * n + 2)
                  if m.is_near_triangulation() and m.root_face_degree == 1)
        out.append(CaseResult("closed_forms",
                              f"outer-degree-1 near-triangulations, n={n}",
                              want, got))
    for n in range(4):
        want = cf.spanning_tree_series_coeff(n)
        got = (1 if n == 0 else
               sum(spanning_tree_count(m) for m in all_maps(n)))
        out.append(CaseResult("closed_forms",
                              f"spanning-tree series coefficient t^{n}",
                              want, got))
    for n in range(1, 5):
        out.append(CaseResult("closed_forms", f"four_valent({n}) generator",
                              cf.four_valent_count(n), len(four_valent(n))))
    for n in range(5):
        want = sum(cf.shuffle_count(i, n - i) for i in range(n + 1))
        got = sum(cf.tree_rooted_count(i, n - i) for i in range(n + 1))
        out.append(CaseResult("closed_forms",
                              f"shuffle count = tree-rooted count, i+j={n}",
                              want, got))
    return out


def suite_kernels():
    from tuttelab.kernels import check_kernel_solutions, check_tree_rooted
    out = []
    for name, ok in check_kernel_solutions().items():
        out.append(_bool_case("kernels", f"bipolar {name}", ok))
    for name, ok in check_tree_rooted().items():
        out.append(_bool_case("kernels", f"tree_rooted {name}", ok))
    return out


def suite_algebraic():
    from tuttelab.algebraic import all_algebraic_checks
    return [_bool_case("algebraic", name, ok)
            for name, ok in all_algebraic_checks().items()]


def suite_desystems():
    from tuttelab.desystems import check_de_maps, check_de_tri, check_tutte_ode
    out = []
    for q, nu, w in ((2, 2, 1), (3, 2, 1), (Fraction(5, 2), 3, 1)):
        ok = check_de_maps(Fraction(q), Fraction(nu), Fraction(w), 6)
        out.append(_bool_case(
            "desystems", f"maps system reconstructs M(1,1) at "
            f"(q,nu,w)=({q},{nu},{w})", ok))
    for q in (2, 3):
        out.append(_bool_case("desystems",
                              f"triangulation system T2 at q={q}, order 12",
                              check_de_tri(Fraction(q), 12)))
        out.append(_bool_case("desystems",
                              f"Tutte ODE residual at q={q}, order 12",
                              check_tutte_ode(Fraction(q), 12)))
    return out


def suite_bijections():
    from tuttelab import closed_forms as cf
    from tuttelab.bijections import (BijectionError, cvs_backward,
                                     cvs_forward, ising_erase,
                                     ising_series_identity, ising_subdivide,
                                     mullin_decode, mullin_decompose,
                                     mullin_encode, phi_bar, phi_close,
                                     psi_open, tprime_degrees, tree_root_key,
                                     unbalanced_join, unbalanced_split)
    from tuttelab.generate import (all_maps, all_spanning_trees, four_valent,
                                   quadrangulations)
    from tuttelab.trees import BlossomingTree, DyckShuffle
    out = []

    for n in range(1, 5):
        ok = all(phi_close(psi_open(m)) == m for m in four_valent(n))
        out.append(_bool_case("bijections",
                              f"phi(psi(m)) = m, 4-valent, {n} vertices", ok))
    for n in range(1, 4):
        bal = 0
        for t in BlossomingTree.all_trees(n):
            try:
                m = phi_close(t)
            except BijectionError:
                continue
            bal += 1
            if psi_open(m) != t:
                bal = -1
                break
        out.append(CaseResult("bijections",
                              f"balanced trees with {n} nodes (psi(phi)=id)",
                              cf.balanced_blossoming_count(n), bal))
    for n in range(1, 4):
        seen = set()
        for t in BlossomingTree.all_trees(n):
            for s in ("+", "-"):
                cm, fi = phi_bar(t, s)
                seen.add((cm.code, fi))
        want = 2 * cf.blossoming_count(n)
        out.append(CaseResult("bijections",
                              f"phi_bar image size, {n} nodes", want,
                              len(seen)))
    for n in range(1, 5):
        faces = sum(m.n_faces for m in four_valent(n))
        out.append(CaseResult("bijections",
                              f"(n+2)m_n = 2t_n at n={n}",
                              2 * cf.blossoming_count(n), faces))
    ok = True
    for n in range(1, 4):
        for t in BlossomingTree.all_trees(n):
            try:
                phi_close(t)
                continue
            except BijectionError:
                pass
            if unbalanced_join(*unbalanced_split(t)) != t:
                ok = False
    out.append(_bool_case("bijections",
                          "unbalanced split/join round trips, <= 3 nodes",
                          ok))

    for n in range(1, 5):
        cnt = 0
        ok = True
        for q in quadrangulations(n):
            for v0 in range(q.n_vertices):
                try:
                    t = cvs_forward(q, v0)
                except BijectionError:
                    continue
                cnt += 1
                ok = ok and t.is_valid() and cvs_backward(t) == (q, v0)
            ok = ok and cvs_forward(q, q.vertex_of[q.root]).is_valid(well=True)
        out.append(_bool_case("bijections",
                              f"cvs round trips, {n} faces", ok))
        out.append(CaseResult("bijections",
                              f"3^n C_n = (n+2)q_n/2 at n={n}",
                              cf.labelled_tree_count(n), cnt))

    for n in range(5):
        cnt = 0
        ok = True
        for m in all_maps(n):
            trees = [()] if m.is_atomic else all_spanning_trees(m)
            for tr in trees:
                w = mullin_encode(m, tr)
                m2, tr2 = mullin_decode(w)
                ok = (ok and tree_root_key(m2, tr2) == tree_root_key(m, tr)
                      and mullin_encode(m2, tr2) == w)
                cnt += 1
        out.append(_bool_case("bijections",
                              f"mullin round trips, {n} edges", ok))
        want = sum(cf.shuffle_count(i, n - i) for i in range(n + 1))
        out.append(CaseResult("bijections",
                              f"tree-rooted maps with {n} edges", want, cnt))
    m, tr = mullin_decode(DyckShuffle("bbaaBBAbBA"))
    out.append(CaseResult("bijections", "fig-word re-encodes", "bbaaBBAbBA",
                          mullin_encode(m, tr).word))
    ok = all(tprime_degrees(mullin_decompose(m, tr)[1]) == m.vertex_degrees()
             for n in range(1, 4) for m in all_maps(n)
             for tr in all_spanning_trees(m))
    out.append(_bool_case("bijections",
                          "decomposition degree multisets, <= 3 edges", ok))

    ok = True
    import itertools
    for n in range(1, 4):
        for m in all_maps(n):
            vo = m.vertex_of
            edges = m.edges()
            for col in itertools.product((0, 1), repeat=m.n_vertices):
                base = [1 if col[vo[d1]] == col[vo[d2]] else 0
                        for d1, d2 in edges]
                for extra in itertools.product((0, 2), repeat=len(edges)):
                    counts = [b + e for b, e in zip(base, extra)]
                    m2, col2, squares = ising_subdivide(m, col, counts)
                    ok = (ok and m2.is_bipartite()
                          and ising_erase(m2, squares) == m)
    out.append(_bool_case("bijections",
                          "subdivide/erase round trips, <= 3 edges", ok))
    lhs, rhs = ising_series_identity(4)
    out.append(_bool_case("bijections",
                          "bipartite series identity to t^4", lhs == rhs))
    return out


SUITES = {
    "counts": suite_counts,
    "potts": suite_potts,
    "equations": suite_equations,
    "closed_forms": suite_closed_forms,
    "kernels": suite_kernels,
    "algebraic": suite_algebraic,
    "desystems": suite_desystems,
    "bijections": suite_bijections,
}


def run(names=None):
    """Run the named suites (all by default, in catalog order)."""
    if names is None or names == ["all"]:
        names = list(SUITES)
    results = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown verification suite {name!r}")
        results.extend(SUITES[name]())
    return results


def all_pass(results) -> bool:
    return all(r.ok for r in results)


def format_report(results, fmt: str = "plain") -> str:
    """Render a result list as plain text, JSON or CSV (deterministic)."""
    if fmt == "json":
        return json.dumps([r.row() for r in results], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "case", "expected", "got", "pass"])
        for r in results:
            writer.writerow([r.suite, r.case, r.expected, r.got,
                             "pass" if r.ok else "FAIL"])
        return buf.getvalue()
    if fmt != "plain":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    for r in results:
        status = "pass" if r.ok else "FAIL"
        detail = "" if r.expected == "True" and r.got in ("True", "False") \
            else f" (expected {r.expected}, got {r.got})"
        lines.append(f"[{status}] {r.suite}: {r.case}{detail}")
    n_ok = sum(1 for r in results if r.ok)
    lines.append(f"{n_ok}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
