"""Algebraic Jacobi pairs, their rank theory, and the contact/l.c.s. dictionaries.

A Jacobi pair on a Lie algebra g is a 2-vector r and a vector X0 with
  [r, r] = 2 X0 ^ r   and   [X0, r] = 0.
Rank counts the characteristic subspace im(#_r) + <X0>, which is always a
subalgebra; odd rank restricts to a contact form, even rank to a locally
conformal symplectic (l.c.s.) pair.  The conversions here are exact inverses
of each other and every constructor re-verifies the defining identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from liejacobi.exterior import Form, Multivector, contract, evaluate, pair, wedge, wedge_power
from liejacobi.liealg import LieAlgebra, LinearMap, Subspace, abelian, direct_product
from liejacobi.linalg import ZERO, invert, mat_vec, solve
from liejacobi.schouten import ce_differential, schouten


@dataclass(frozen=True)
class JacobiPair:
    """Candidate pair (r, X0) on an algebra; check_jacobi decides validity."""

    algebra: LieAlgebra
    r: Multivector
    x0: Multivector

    def __post_init__(self):
        n = self.algebra.dim
        if not isinstance(self.r, Multivector) or not isinstance(self.x0, Multivector):
            raise TypeError("jacobi pair needs multivector entries")
        if self.r.dim != n or self.x0.dim != n:
            raise ValueError("dimension mismatch with the algebra")
        if not self.r.is_zero() and self.r.grade != 2:
            raise ValueError("r must have grade 2")
        if not self.x0.is_zero() and self.x0.grade != 1:
            raise ValueError("x0 must have grade 1")


@dataclass(frozen=True)
class JacobiReport:
    pair: JacobiPair
    self_residual: Multivector     # [r,r] - 2 X0^r
    vector_residual: Multivector   # [X0,r]

    @property
    def passed(self) -> bool:
        return self.self_residual.is_zero() and self.vector_residual.is_zero()

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        labels = self.pair.algebra.basis_labels
        if self.passed:
            return "jacobi pair: both defining identities hold"
        return (
            "jacobi pair fails:\n"
            f"  [r,r] - 2*x0^r = {self.self_residual.render(labels)}\n"
            f"  [x0,r] = {self.vector_residual.render(labels)}"
        )


def check_jacobi(jp: JacobiPair) -> JacobiReport:
    """Evaluate both defining identities and report the exact residuals."""
    g = jp.algebra
    self_res = schouten(g, jp.r, jp.r) - wedge(jp.x0, jp.r).scale(2)
    vec_res = schouten(g, jp.x0, jp.r)
    return JacobiReport(jp, self_res, vec_res)


def sharp(obj: JacobiPair | Multivector) -> LinearMap:
    """Matrix of #_r : g* -> g, fixed by beta(#_r(alpha)) = r(alpha, beta)."""
    r = obj.r if isinstance(obj, JacobiPair) else obj
    if not isinstance(r, Multivector):
        raise TypeError("sharp expects a jacobi pair or a 2-vector")
    if not r.is_zero() and r.grade != 2:
        raise ValueError("sharp is defined for 2-vectors")
    n = r.dim
    cols = [contract(Form.basis(n, j), r).coeffs() for j in range(n)]
    return LinearMap.from_columns(cols)


def _span_with_x0(jp: JacobiPair) -> Subspace:
    vectors = [row for row in sharp(jp).transpose().rows]
    vectors.append(jp.x0.coeffs())
    return Subspace.from_vectors(jp.algebra.dim, vectors)


def rank(jp: JacobiPair) -> int:
    """Dimension of the characteristic subspace im(#_r) + <X0>."""
    return _span_with_x0(jp).rank


@dataclass(frozen=True)
class CharacteristicSubalgebra:
    """Characteristic subalgebra of a Jacobi pair with the pair restricted to it.

    `tag` records the induced structure: "contact" for odd dimension, "lcs"
    for even.  `inclusion` maps restricted coordinates back into the ambient
    algebra (columns are the subspace basis).
    """

    subspace: Subspace
    algebra: LieAlgebra
    pair: JacobiPair
    tag: str
    inclusion: LinearMap


def _express_in(h_vectors: list[list[Fraction]], coeffs: list[Fraction]):
    cols = [[h_vectors[a][i] for a in range(len(h_vectors))] for i in range(len(coeffs))]
    return solve(cols, list(coeffs))


def characteristic_subalgebra(jp: JacobiPair) -> CharacteristicSubalgebra:
    """im(#_r) + <X0> with the bracket, r and X0 re-expressed in its basis.

    The subspace is provably bracket-closed for every valid Jacobi pair, so a
    closure failure is reported as an error carrying the witness bracket.
    """
    report = check_jacobi(jp)
    if not report.passed:
        raise ValueError("not a jacobi pair:\n" + report.describe())
    g = jp.algebra
    sub = _span_with_x0(jp)
    m = sub.rank
    h_vectors = [list(row) for row in sub.rows]
    structure = {}
    for a in range(m):
        for b in range(a + 1, m):
            bracket = g.bracket(Multivector.from_coeffs(h_vectors[a]),
                                Multivector.from_coeffs(h_vectors[b]))
            sol = _express_in(h_vectors, bracket.coeffs())
            if sol is None:
                raise ValueError(
                    "characteristic subspace is not bracket-closed: "
                    f"[{Multivector.from_coeffs(h_vectors[a]).render(g.basis_labels)}, "
                    f"{Multivector.from_coeffs(h_vectors[b]).render(g.basis_labels)}] = "
                    f"{bracket.render(g.basis_labels)} lies outside"
                )
            value = Multivector.from_coeffs(sol[0])
            if not value.is_zero():
                structure[(a, b)] = value
    restricted = LieAlgebra(f"{g.name}.char", m, tuple(f"e{a + 1}" for a in range(m)), structure)

    r_terms = {}
    if not jp.r.is_zero():
        # r lives in Lambda^2 of the subspace whenever the pair is valid:
        # solve for its coordinates against the wedge basis of h.
        pairs = list(combinations(range(m), 2))
        ambient = list(combinations(range(g.dim), 2))
        cols = []
        for (a, b) in pairs:
            w = wedge(Multivector.from_coeffs(h_vectors[a]), Multivector.from_coeffs(h_vectors[b]))
            cols.append([w.coefficient(idx) for idx in ambient])
        matrix = [[cols[c][row] for c in range(len(pairs))] for row in range(len(ambient))]
        target = [jp.r.coefficient(idx) for idx in ambient]
        sol = solve(matrix, target)
        if sol is None:
            raise ValueError("r does not lie in the second exterior power of the characteristic subspace")
        r_terms = {pairs[c]: sol[0][c] for c in range(len(pairs)) if sol[0][c] != 0}
    r_h = Multivector.from_terms(m, 2, r_terms) if m >= 2 else Multivector.zero(max(m, 0), min(2, max(m, 0)))
    x0_sol = _express_in(h_vectors, jp.x0.coeffs()) if m else None
    if m and x0_sol is None:
        raise ValueError("x0 does not lie in the characteristic subspace")
    x0_h = Multivector.from_coeffs(x0_sol[0]) if m else Multivector.zero(0, 0)
    restricted_pair = JacobiPair(restricted, r_h, x0_h)
    tag = "contact" if m % 2 else "lcs"
    inclusion = LinearMap.from_columns(h_vectors) if m else LinearMap.from_rows([[] for _ in range(g.dim)])
    return CharacteristicSubalgebra(sub, restricted, restricted_pair, tag, inclusion)


@dataclass(frozen=True)
class ContactStructure:
    """A 1-form eta on an odd-dimensional algebra with eta ^ (d eta)^k != 0."""

    algebra: LieAlgebra
    eta: Form

    def __post_init__(self):
        n = self.algebra.dim
        if n % 2 == 0:
            raise ValueError("contact structures need odd dimension")
        if not isinstance(self.eta, Form) or self.eta.dim != n:
            raise TypeError("eta must be a 1-form on the algebra")
        if self.eta.is_zero() or self.eta.grade != 1:
            raise ValueError("eta must be a nonzero 1-form")
        k = n // 2
        volume = wedge(self.eta, wedge_power(ce_differential(self.algebra, self.eta), k))
        if volume.is_zero():
            raise ValueError("eta ^ (d eta)^k = 0: not an algebraic contact form")


@dataclass(frozen=True)
class LcsStructure:
    """A nondegenerate 2-form with Lee 1-form: omega2^k != 0, d(omega2) = lee ^ omega2."""

    algebra: LieAlgebra
    omega2: Form
    lee: Form

    def __post_init__(self):
        n = self.algebra.dim
        if n % 2:
            raise ValueError("l.c.s. structures need even dimension")
        if not isinstance(self.omega2, Form) or self.omega2.dim != n:
            raise TypeError("omega2 must be a 2-form on the algebra")
        if self.omega2.is_zero() or self.omega2.grade != 2:
            raise ValueError("omega2 must be a nonzero 2-form")
        if not isinstance(self.lee, Form) or self.lee.dim != n:
            raise TypeError("lee must be a 1-form on the algebra")
        if not self.lee.is_zero() and self.lee.grade != 1:
            raise ValueError("lee must have grade 1")
        if wedge_power(self.omega2, n // 2).is_zero():
            raise ValueError("omega2 is degenerate: omega2^k = 0")
        if not ce_differential(self.algebra, self.lee).is_zero():
            raise ValueError("lee form is not a 1-cocycle")
        residual = ce_differential(self.algebra, self.omega2) - wedge(self.lee, self.omega2)
        if not residual.is_zero():
            raise ValueError("d(omega2) != lee ^ omega2")


def _flat_contact(cs: ContactStructure) -> LinearMap:
    # b_eta(X) = i(X)(d eta) + eta(X) eta, written in dual coordinates.
    g, eta = cs.algebra, cs.eta
    d_eta = ce_differential(g, eta)
    cols = []
    for j in range(g.dim):
        x = Multivector.basis(g.dim, j)
        form = contract(x, d_eta) + eta.scale(pair(eta, x))
        cols.append(form.coeffs())
    return LinearMap.from_columns(cols)


def contact_to_jacobi(cs: ContactStructure) -> JacobiPair:
    """Reeb vector and 2-vector of a contact form: X0 = b^{-1}(eta), r = d eta pulled back."""
    g, eta = cs.algebra, cs.eta
    n = g.dim
    d_eta = ce_differential(g, eta)
    binv = invert(_flat_contact(cs).rows)
    x0 = Multivector.from_coeffs(mat_vec(binv, eta.coeffs()))
    if not contract(x0, d_eta).is_zero() or pair(eta, x0) != 1:
        raise ValueError("flat map inversion did not produce the Reeb vector")
    inverse_images = [Multivector.from_coeffs(mat_vec(binv, Form.basis(n, i).coeffs()))
                      for i in range(n)]
    terms = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = evaluate(d_eta, inverse_images[i], inverse_images[j])
            if c != 0:
                terms[(i, j)] = c
    jp = JacobiPair(g, Multivector.from_terms(n, 2, terms), x0)
    report = check_jacobi(jp)
    if not report.passed:
        raise ValueError("contact data produced an invalid pair:\n" + report.describe())
    return jp


def jacobi_to_contact(jp: JacobiPair) -> ContactStructure:
    """Inverse of contact_to_jacobi for pairs of full odd rank.

    eta is the unique 1-form vanishing on im(#_r) with eta(X0) = 1.
    """
    g = jp.algebra
    n = g.dim
    if n % 2 == 0 or rank(jp) != n:
        raise ValueError("jacobi pair does not have full odd rank")
    sharp_cols = [contract(Form.basis(n, j), jp.r).coeffs() for j in range(n)]
    rows = [list(col) for col in sharp_cols]
    rhs = [ZERO for _ in rows]
    rows.append(jp.x0.coeffs())
    rhs.append(Fraction(1))
    sol = solve(rows, rhs)
    if sol is None or sol[1]:
        raise ValueError("contact form reconstruction is not determined")
    eta = Form.from_coeffs(sol[0])
    cs = ContactStructure(g, eta)
    back = contact_to_jacobi(cs)
    if back.r != jp.r or back.x0 != jp.x0:
        raise ValueError("contact reconstruction failed to invert the pair")
    return cs


def _flat_lcs(ls: LcsStructure) -> LinearMap:
    # b_Omega(X) = i(X) Omega in dual coordinates.
    g = ls.algebra
    cols = [contract(Multivector.basis(g.dim, j), ls.omega2).coeffs() for j in range(g.dim)]
    return LinearMap.from_columns(cols)


def lcs_to_jacobi(ls: LcsStructure) -> JacobiPair:
    """X0 = b^{-1}(lee) and r with #_r = -b^{-1} for the 2-form's flat map b."""
    g = ls.algebra
    n = g.dim
    binv = invert(_flat_lcs(ls).rows)
    x0 = Multivector.from_coeffs(mat_vec(binv, ls.lee.coeffs()))
    terms = {}
    for i in range(n):
        for j in range(i + 1, n):
            # r(e^i, e^j) = e^j(#_r e^i) with #_r = -b^{-1}
            c = -binv[j][i]
            if c != 0:
                terms[(i, j)] = c
    jp = JacobiPair(g, Multivector.from_terms(n, 2, terms), x0)
    report = check_jacobi(jp)
    if not report.passed:
        raise ValueError("l.c.s. data produced an invalid pair:\n" + report.describe())
    return jp


def jacobi_to_lcs(jp: JacobiPair) -> LcsStructure:
    """Inverse of lcs_to_jacobi for pairs of full even rank: b = -#_r^{-1}."""
    g = jp.algebra
    n = g.dim
    if n % 2 or rank(jp) != n:
        raise ValueError("jacobi pair does not have full even rank")
    sharp_matrix = sharp(jp).rows
    flat = [[-c for c in row] for row in invert(sharp_matrix)]
    terms = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = flat[j][i]   # Omega(e_i, e_j) = b(e_i)(e_j)
            if c != 0:
                terms[(i, j)] = c
    omega2 = Form.from_terms(n, 2, terms)
    lee = Form.from_coeffs(mat_vec(flat, jp.x0.coeffs()))
    ls = LcsStructure(g, omega2, lee)
    back = lcs_to_jacobi(ls)
    if back.r != jp.r or back.x0 != jp.x0:
        raise ValueError("l.c.s. reconstruction failed to invert the pair")
    return ls


def lcs_from_contact_times_line(jp: JacobiPair, name: str | None = None) -> JacobiPair:
    """Extend a full-rank contact pair on h to an l.c.s. pair on h x R.

    The product algebra gets r = r_h + e_new ^ X0 with the same X0; the
    result has full even rank.
    """
    h = jp.algebra
    n = h.dim
    if n % 2 == 0 or rank(jp) != n:
        raise ValueError("input pair must have full odd rank")
    g = direct_product(h, abelian(1), name=name or f"{h.name}xR")
    r_ext = Multivector.from_terms(n + 1, 2, dict(jp.r.terms))
    x0_ext = Multivector.from_terms(n + 1, 1, dict(jp.x0.terms))
    line = Multivector.basis(n + 1, n)
    ext = JacobiPair(g, r_ext + wedge(line, x0_ext), x0_ext)
    report = check_jacobi(ext)
    if not report.passed:
        raise ValueError("product construction produced an invalid pair:\n" + report.describe())
    return ext
