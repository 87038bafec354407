"""Differential systems characterising coloured-map generating functions.

Two systems are solved order by order in the main series variable:

* the planar-map system: unique polynomials A(t,v) (degree 4 in v),
  B(t,v) (degree 2), C(t,v) (degree 2) with

      A(0,v) = (1-v)^2,  A(t,0) = 1,
      B(0,v) = 1-v,      C(t,0) = w(q+2b) - 1 - nu     (b = nu - 1),

  satisfying, with Delta(t,v) = (q nu + b^2) - q(nu+1)v + (bt(q-4)(wq+b)+q)v^2
  and D = A Delta^2,

      (1/C) d/dv (v^4 C^2 / D)  =  (v^2/B) d/dt (B^2 / D).

  A linear combination of A_2, B_1, B_2 then gives the Potts generating
  function of planar maps at x = y = 1.

* the near-triangulation system: unique A(z,v) (degree 3 in v), B(z,v)
  (degree 1) with A(0,v) = 1 + v/4, A(z,0) = 1, B(0,v) = 1 and, with
  Delta(v) = v + 4 - q,

      -(4z/v) d/dv (v^3 / A)  =  (1/(B Delta)) d/dz (B^2 / A),

  from which the chromatic generating function T_2(q,z;1) of non-separable
  near-triangulations of outer degree 2 is recovered.

Both identities are cleared of denominators before coefficient matching.
After clearing, every unknown coefficient enters linearly at each order of
the main variable (the apparent C^2 nonlinearity cancels against the 1/C
prefactor), so each order is one exact rational linear solve.  The solved
series are cross-checked against the functional-equation iterates, giving
two independent derivations of the same numbers.
"""

from __future__ import annotations

from fractions import Fraction

from tuttelab.equations import EquationId, expand
from tuttelab.poly import MultiPoly
from tuttelab.series import TSeries


class DESolveError(ValueError):
    """Raised when an order-by-order linear system is singular or
    inconsistent; carries the failing order."""

    def __init__(self, message, order):
        super().__init__(f"{message} (at order {order})")
        self.order = order


V = MultiPoly.var("v")


def _is_linear(p: MultiPoly, pendingset) -> bool:
    idx = [i for i, name in enumerate(p.vars) if name in pendingset]
    return all(sum(exps[i] for i in idx) <= 1 for exps in p.terms)


def _rows(linear_eqs, pending):
    """Affine equations as (row, const) pairs: row . pending + const = 0."""
    zeros = {u: 0 for u in pending}
    eqs = []
    for p in linear_eqs:
        row = [Fraction(p.coeff(u, 1).subs(zeros).constant_value())
               for u in pending]
        const = Fraction(p.subs(zeros).constant_value())
        eqs.append((row, const))
    return eqs


def _eliminate(eqs, pending, order):
    """Row-reduce the affine system and return a substitution mapping each
    pivot unknown to its expression in the remaining free unknowns.

    Pending unknowns are listed oldest first, so the oldest ones are
    resolved preferentially; unknowns that stay free are determined by the
    equations of later orders.  Raises on an inconsistent system."""
    k = len(pending)
    rows = [list(r) + [c] for r, c in eqs]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = pr = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(col)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][k] != 0:
            raise DESolveError("inconsistent linear system", order)
    sub = {}
    for i, col in enumerate(pivots):
        expr = MultiPoly.const(-rows[i][k])
        for j in range(col + 1, k):
            if rows[i][j] != 0:
                expr = expr - MultiPoly.const(rows[i][j]) * MultiPoly.var(pending[j])
        sub[pending[col]] = expr
    return sub


def _as_vector(p: MultiPoly, pendingset):
    """A constraint as {pending-monomial: rational}; the key () is the
    constant term.  Monomials are tuples of (name, exponent) pairs."""
    vec = {}
    for exps, c in p.terms.items():
        key = tuple((name, e) for name, e in zip(p.vars, exps)
                    if e and name in pendingset)
        stray = [(name, e) for name, e in zip(p.vars, exps)
                 if e and name not in pendingset]
        if stray:
            raise ValueError(f"constraint mentions non-unknowns {stray}")
        vec[key] = vec.get(key, Fraction(0)) + Fraction(c)
    return {k: v for k, v in vec.items() if v}


def _from_vector(vec) -> MultiPoly:
    out = MultiPoly.zero()
    for key, c in vec.items():
        term = MultiPoly.const(c)
        for name, e in key:
            term = term * MultiPoly.var(name, e)
        out = out + term
    return out


def _linear_consequences(constraints, pending):
    """Eliminate the quadratic monomials among the constraints by row
    operations.  Returns (derived, remaining): linear combinations free of
    quadratic terms, and the spent still-quadratic rows."""
    pendingset = set(pending)
    vecs = [_as_vector(p, pendingset) for p in constraints]
    quad_cols = sorted({k for v in vecs for k in v
                        if sum(e for _, e in k) >= 2})
    remaining = []
    rows = vecs
    for col in quad_cols:
        piv = next((i for i, v in enumerate(rows) if v.get(col)), None)
        if piv is None:
            continue
        pv = rows.pop(piv)
        remaining.append(pv)
        inv = Fraction(1) / pv[col]
        for v in rows:
            f = v.get(col)
            if f:
                fi = f * inv
                for k, c in pv.items():
                    nc = v.get(k, Fraction(0)) - fi * c
                    if nc:
                        v[k] = nc
                    else:
                        v.pop(k, None)
    derived = [_from_vector(v) for v in rows if v]
    return derived, [_from_vector(v) for v in remaining]


def _reduce(constraints, pending, coeff_lists, order):
    """Propagate constraints: repeatedly solve the currently-affine subset,
    substitute the solution into the stored coefficient lists and into the
    remaining constraints, and retry.  Nonlinear (bilinear) constraints are
    used two ways: they become affine once one factor is resolved, and
    affine consequences are extracted from them by cancelling quadratic
    monomials between constraints.  Returns the surviving constraints and
    unknowns."""
    while True:
        pendingset = set(pending)
        linear = [c for c in constraints if _is_linear(c, pendingset)]
        nonlinear = [c for c in constraints if not _is_linear(c, pendingset)]
        if not linear and nonlinear:
            derived, nonlinear = _linear_consequences(nonlinear, pending)
            linear = [d for d in derived if not d.is_zero()]
        if not linear:
            return nonlinear, pending
        sub = _eliminate(_rows(linear, pending), pending, order)
        if not sub:
            if not nonlinear:
                return [], pending
            constraints = nonlinear
            continue
        pending = [u for u in pending if u not in sub]
        for lst in coeff_lists:
            lst[:] = [p.subs(sub) for p in lst]
        constraints = [c for c in (p.subs(sub) for p in nonlinear)
                       if not c.is_zero()]


def _unknown_poly(names, powers):
    out = MultiPoly.zero()
    for name, p in zip(names, powers):
        out = out + MultiPoly.var(name) * V ** p
    return out


def _require_resolved(coeffs, pending, order):
    for p in coeffs:
        if any(p.degree(u) > 0 for u in pending):
            raise DESolveError("coefficients remain undetermined", order)


def solve_de_maps(q, nu, w, N):
    """Solve the planar-map differential system to t-order N.

    Returns (A, B, C, M11): A, B, C as series in t with polynomial-in-v
    coefficients (to order N), and M11 the reconstructed Potts generating
    function of planar maps at x = y = 1 (to order N).

    Empirically the order-by-order solve degenerates (coefficients stay
    undetermined) exactly at nu = 1 and at q in {0, 4}; all other rational
    parameter points tried solve uniquely.
    """
    q, nu, w = Fraction(q), Fraction(nu), Fraction(w)
    b = nu - 1
    c0 = w * (q + 2 * b) - 1 - nu
    delta0 = MultiPoly.const(q * nu + b * b) - q * (nu + 1) * V + q * V ** 2
    delta1 = b * (q - 4) * (w * q + b) * V ** 2

    A = [(MultiPoly.one() - V) ** 2]
    B = [MultiPoly.one() - V]
    C = []
    pending = []
    constraints = []
    stages = N + 4
    for n in range(stages):
        a_names = [f"_a{j}n{n}" for j in (1, 2, 3, 4)]
        b_names = [f"_b{j}n{n}" for j in (0, 1, 2)]
        c_names = [f"_c{j}n{n}" for j in (1, 2)]
        A.append(_unknown_poly(a_names, [1, 2, 3, 4]))
        B.append(_unknown_poly(b_names, [0, 1, 2]))
        C.append((MultiPoly.const(c0) if n == 0 else MultiPoly.zero())
                 + _unknown_poly(c_names, [1, 2]))
        pending = pending + a_names + b_names + c_names
        Ax = TSeries("t", n + 1, A)
        Bx = TSeries("t", n + 1, B)
        Cx = TSeries("t", n, C)
        Delta = TSeries("t", n + 1, [delta0, delta1])
        D = Ax * Delta * Delta
        E = ((4 * V ** 3) * Cx + (2 * V ** 4) * Cx.diff("v")) * D \
            - (V ** 4) * Cx * D.diff("v") \
            - (V ** 2) * (2 * Bx.diff_main() * D - Bx * D.diff_main())
        constraints = constraints + [p for p in
                                     E.coeff(n).by_powers("v").values()
                                     if not p.is_zero()]
        constraints, pending = _reduce(constraints, pending, [A, B, C], n)
    _require_resolved(A[:N + 3] + B[:N + 3] + C[:N + 2], pending, stages)

    hi = N + 2
    a2 = TSeries("t", hi, [p.coeff("v", 2) for p in A[:hi + 1]])
    b1 = TSeries("t", hi, [p.coeff("v", 1) for p in B[:hi + 1]])
    b2 = TSeries("t", hi, [p.coeff("v", 2) for p in B[:hi + 1]])
    t = TSeries.t("t", hi)
    rhs = 4 * t * (1 - 3 * (b + 2) ** 2 * t
                   + (6 * (b + 2) * (q + 2 * b) * t + q + 3 * b) * w
                   - 3 * (q + 2 * b) ** 2 * w ** 2 * t)
    numerator = rhs + a2 - 2 * b2 + 8 * c0 * t * b1 - b1 * b1
    scale = 12 * w * (q * nu + b * b)
    if scale == 0:
        raise ValueError("M(1,1) extraction needs w != 0 and q nu + (nu-1)^2 != 0")
    m11 = numerator.divide_by_var(2) * Fraction(1, 1) / scale
    return (TSeries("t", N, A[:N + 1]), TSeries("t", N, B[:N + 1]),
            TSeries("t", N, C[:N + 1]), m11.truncate(N))


def check_de_maps(q, nu, w, N=6) -> bool:
    """The reconstructed M(1,1) agrees with the functional-equation iterate."""
    _, _, _, m11 = solve_de_maps(q, nu, w, N)
    ref = expand(EquationId.POTTS_MAPS, N,
                 {"q": Fraction(q), "nu": Fraction(nu), "w": Fraction(w)})
    return m11 == ref.subs({"x": 1, "y": 1})


def solve_de_tri(q, N):
    """Solve the near-triangulation differential system to z-order N.

    Returns (A, B, T2): A, B as series in z with polynomial-in-v
    coefficients, and T2 the reconstructed chromatic generating function of
    non-separable near-triangulations of outer degree 2, all to order N.
    """
    q = Fraction(q)
    if q == 4:
        raise ValueError("T2 extraction is singular at q = 4")
    delta = V + MultiPoly.const(4 - q)

    A = [MultiPoly.one() + Fraction(1, 4) * V]
    B = [MultiPoly.one()]
    pending = []
    constraints = []
    stages = N + 6
    for n in range(stages):
        a_names = [f"_a{j}n{n}" for j in (1, 2, 3)]
        b_names = [f"_b{j}n{n}" for j in (0, 1)]
        A.append(_unknown_poly(a_names, [1, 2, 3]))
        B.append(_unknown_poly(b_names, [0, 1]))
        pending = pending + a_names + b_names
        Ax = TSeries("z", n + 1, A)
        Bx = TSeries("z", n + 1, B)
        E = (4 * delta * (3 * V * Ax - V ** 2 * Ax.diff("v"))).shift(1) \
            + 2 * Bx.diff_main() * Ax - Bx * Ax.diff_main()
        constraints = constraints + [p for p in
                                     E.coeff(n).by_powers("v").values()
                                     if not p.is_zero()]
        constraints, pending = _reduce(constraints, pending, [A, B], n)
    _require_resolved(A[:N + 5] + B[:N + 5], pending, stages)

    hi = N + 4
    a2 = TSeries("z", hi, [p.coeff("v", 2) for p in A[:hi + 1]])
    b1 = TSeries("z", hi, [p.coeff("v", 1) for p in B[:hi + 1]])
    z = TSeries.t("z", hi)
    z2 = z * z
    numerator = (2 * b1 * b1 + (96 * z2 - 24 * q * z2 + 1) * b1 - 2 * a2
                 + 2 * z2 * (10 - q + 432 * z2 - 216 * q * z2
                             + 27 * q * q * z2))
    t2 = numerator.divide_by_var(4) * (q / (20 * (q - 4)))
    return (TSeries("z", N, A[:N + 1]), TSeries("z", N, B[:N + 1]),
            t2.truncate(N))


def tri_t2_series(q, N) -> TSeries:
    """T_2(q,z;1) by functional-equation iteration: the y^2 coefficient at
    x = 1 of the non-separable near-triangulation series."""
    full = expand(EquationId.TUTTE_NONSEP_TRI, N, {"q": Fraction(q)})
    return full.subs({"x": 1}).coeff_of("y", 2)


def check_de_tri(q, N=12) -> bool:
    """The reconstructed T2 agrees with the functional-equation iterate."""
    _, _, t2 = solve_de_tri(q, N)
    return t2 == tri_t2_series(q, N)


def check_tutte_ode(q, N=12) -> bool:
    """With t = z^2 and H(t) = t^2 T_2(1), verify

        2q^2(1-q)t + (qt + 10H - 6tH')H'' + q(4-q)(20H - 18tH' + 9t^2 H'') = 0

    exactly to the order supported by a z-order-N expansion of T_2.  Also
    checks that T_2 is supported on even z-powers (an Euler-relation parity
    consequence), so H is a genuine series in t."""
    q = Fraction(q)
    t2 = tri_t2_series(q, N)
    if any(not t2.coeff(n).is_zero() for n in range(1, N + 1, 2)):
        raise DESolveError("T2 has odd-order z terms", 0)
    half = N // 2
    # H = t^2 T2 with t = z^2
    h = TSeries("t", half + 2,
                [MultiPoly.zero(), MultiPoly.zero()]
                + [t2.coeff(2 * k) for k in range(half + 1)])
    hp = h.diff_main()
    hpp = hp.diff_main()
    t = TSeries.t("t", half + 2)
    resid = (2 * q * q * (1 - q) * t
             + (q * t + 10 * h - 6 * t * hp) * hpp
             + q * (4 - q) * (20 * h - 18 * t * hp + 9 * t * t * hpp))
    return resid.truncate(half).is_zero()
