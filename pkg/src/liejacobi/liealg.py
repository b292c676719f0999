"""Finite-dimensional Lie algebras given by rational structure constants.

A LieAlgebra stores brackets of basis pairs (i, j) for i < j only; the rest
follows by antisymmetry.  Structural computations (center, derived algebra,
cocycles, derivations, Killing form, compactness) reduce to exact rational
linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from liejacobi import linalg
from liejacobi.exterior import Form, Multivector, evaluate, pair, wedge
from liejacobi.linalg import ZERO, Matrix, frac


def dual_label(label: str) -> str:
    """Dual basis label: e1 -> e^1, x -> x^."""
    head = label.rstrip("0123456789")
    tail = label[len(head):]
    return f"{head}^{tail}" if tail else f"{label}^"


def standard_labels(n: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(n))


@dataclass(frozen=True)
class LieAlgebra:
    """Lie algebra over the rationals, described by structure constants.

    structure maps (i, j) with i < j to the bracket [e_i, e_j] as a grade-1
    multivector; absent pairs bracket to zero.  Construction does not check
    the Jacobi identity; use validate() for that.
    """

    name: str
    dim: int
    basis_labels: tuple[str, ...]
    structure: Mapping[tuple[int, int], Multivector] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.basis_labels) != self.dim:
            raise ValueError("label count does not match dimension")
        if len(set(self.basis_labels)) != self.dim:
            raise ValueError("basis labels must be distinct")
        for (i, j), value in self.structure.items():
            if not (0 <= i < j < self.dim):
                raise ValueError(f"structure key {(i, j)} must satisfy 0 <= i < j < dim")
            if not isinstance(value, Multivector) or value.dim != self.dim or value.grade != 1:
                raise ValueError(f"structure value for {(i, j)} must be a grade-1 multivector")
            if value.is_zero():
                raise ValueError("zero brackets must be omitted")

    @classmethod
    def from_brackets(cls, name: str, dim: int, brackets: Mapping[tuple[int, int], Iterable],
                      labels: tuple[str, ...] | None = None) -> "LieAlgebra":
        """Build from {(i, j): coefficient list} with i < j."""
        structure = {}
        for (i, j), coeffs in brackets.items():
            v = Multivector.from_coeffs(list(coeffs))
            if v.dim != dim:
                raise ValueError("coefficient list length must equal dim")
            if not v.is_zero():
                structure[(i, j)] = v
        return cls(name, dim, labels or standard_labels(dim), structure)

    @property
    def dual_labels(self) -> tuple[str, ...]:
        return tuple(dual_label(x) for x in self.basis_labels)

    def label_index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def zero_vector(self) -> Multivector:
        return Multivector.zero(self.dim, 1)

    def basis_vector(self, i: int) -> Multivector:
        return Multivector.basis(self.dim, i)

    def basis_form(self, i: int) -> Form:
        return Form.basis(self.dim, i)

    def bracket_basis(self, i: int, j: int) -> Multivector:
        if i == j:
            return self.zero_vector()
        if i < j:
            return self.structure.get((i, j), self.zero_vector())
        v = self.structure.get((j, i))
        return -v if v is not None else self.zero_vector()

    def bracket(self, x: Multivector, y: Multivector) -> Multivector:
        """Bilinear extension of the basis brackets to grade-1 elements."""
        if x.grade != 1 or y.grade != 1:
            raise ValueError("bracket arguments must have grade 1")
        out = self.zero_vector()
        for (i,), a in x.terms.items():
            for (j,), b in y.terms.items():
                if i != j:
                    out = out + (a * b) * self.bracket_basis(i, j)
        return out

    def ad_matrix(self, x: Multivector) -> Matrix:
        """Matrix of ad_x = [x, .] over the basis (columns are images)."""
        cols = [self.bracket(x, self.basis_vector(j)).coeffs() for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def validate(self) -> "ValidationReport":
        """Check the Jacobi identity on all basis triples."""
        violations = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    ei, ej, ek = map(self.basis_vector, (i, j, k))
                    res = (self.bracket(self.bracket(ei, ej), ek)
                           + self.bracket(self.bracket(ej, ek), ei)
                           + self.bracket(self.bracket(ek, ei), ej))
                    if not res.is_zero():
                        violations.append(((i, j, k), res))
        return ValidationReport(self, tuple(violations))

    def rename(self, name: str) -> "LieAlgebra":
        return LieAlgebra(name, self.dim, self.basis_labels, self.structure)


@dataclass(frozen=True)
class ValidationReport:
    algebra: LieAlgebra
    violations: tuple[tuple[tuple[int, int, int], Multivector], ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"{self.algebra.name}: Jacobi identity holds on all basis triples"
        lines = [f"{self.algebra.name}: Jacobi identity fails on {len(self.violations)} triple(s)"]
        labels = self.algebra.basis_labels
        for (i, j, k), res in self.violations:
            lines.append(f"  ({labels[i]},{labels[j]},{labels[k]}): residual {res.render(list(labels))}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Subspace:
    """Subspace of an algebra or of its dual, kept in reduced echelon form."""

    dim: int
    rows: tuple[tuple[Fraction, ...], ...]
    dual: bool = False

    @classmethod
    def from_vectors(cls, dim: int, vectors: Iterable[Iterable], dual: bool = False) -> "Subspace":
        mat = [[frac(c) for c in v] for v in vectors]
        for row in mat:
            if len(row) != dim:
                raise ValueError("vector length must equal the ambient dimension")
        basis = linalg.row_space_basis(mat)
        return cls(dim, tuple(tuple(r) for r in basis), dual)

    @classmethod
    def from_elements(cls, elements: Iterable) -> "Subspace":
        elems = list(elements)
        if not elems:
            raise ValueError("need at least one element to infer the ambient space")
        dual = isinstance(elems[0], Form)
        return cls.from_vectors(elems[0].dim, [e.coeffs() for e in elems], dual)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, coeffs: Iterable) -> bool:
        v = [frac(c) for c in coeffs]
        mat = [list(r) for r in self.rows]
        return linalg.rank(mat + [v]) == self.rank

    def contains_element(self, e) -> bool:
        if e.grade != 1 and not e.is_zero():
            raise ValueError("membership is defined for grade-1 elements")
        return self.contains(e.coeffs() if not e.is_zero() else [ZERO] * self.dim)

    def elements(self) -> list:
        cls = Form if self.dual else Multivector
        return [cls.from_coeffs(r) for r in self.rows]


def annihilator(s: Subspace) -> Subspace:
    """All covectors (or vectors, if s is dual) vanishing on s."""
    rows = [list(r) for r in s.rows]
    basis = linalg.nullspace(rows) if rows else [list(r) for r in linalg.identity(s.dim)]
    return Subspace.from_vectors(s.dim, basis, dual=not s.dual)


def center(g: LieAlgebra) -> Subspace:
    """{x : [x, y] = 0 for all y}."""
    rows = []
    for j in range(g.dim):
        ad_cols = [g.bracket_basis(i, j).coeffs() for i in range(g.dim)]
        for component in range(g.dim):
            rows.append([ad_cols[i][component] for i in range(g.dim)])
    basis = linalg.nullspace(rows) if rows else []
    return Subspace.from_vectors(g.dim, basis)


def derived_algebra(g: LieAlgebra) -> Subspace:
    """Span of all brackets [e_i, e_j]."""
    vectors = [v.coeffs() for v in g.structure.values()]
    return Subspace.from_vectors(g.dim, vectors)


def one_cocycles(g: LieAlgebra) -> Subspace:
    """Covectors vanishing on the derived algebra: the closed 1-forms."""
    return annihilator(derived_algebra(g))


@dataclass(frozen=True)
class LinearMap:
    """Linear map between coordinate spaces; matrix columns are basis images."""

    matrix: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "LinearMap":
        return cls(tuple(tuple(frac(c) for c in row) for row in rows))

    @classmethod
    def from_columns(cls, cols: Iterable[Iterable]) -> "LinearMap":
        cols = [list(c) for c in cols]
        return cls.from_rows(linalg.transpose([[frac(x) for x in c] for c in cols]))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls.from_rows(linalg.identity(n))

    @property
    def rows(self) -> Matrix:
        return [list(r) for r in self.matrix]

    @property
    def domain_dim(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def codomain_dim(self) -> int:
        return len(self.matrix)

    def apply(self, coeffs: Iterable) -> list[Fraction]:
        return linalg.mat_vec(self.rows, [frac(c) for c in coeffs])

    def apply_element(self, e):
        if e.is_zero():
            return type(e).zero(self.codomain_dim, 1)
        return type(e).from_coeffs(self.apply(e.coeffs()))

    def transpose(self) -> "LinearMap":
        return LinearMap.from_rows(linalg.transpose(self.rows))

    def compose(self, other: "LinearMap") -> "LinearMap":
        return LinearMap.from_rows(linalg.mat_mul(self.rows, other.rows))

    def add(self, other: "LinearMap") -> "LinearMap":
        return LinearMap.from_rows(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def scale(self, c) -> "LinearMap":
        f = frac(c)
        return LinearMap.from_rows([[f * x for x in row] for row in self.rows])

    def is_symmetric(self) -> bool:
        return self.rows == linalg.transpose(self.rows)

    def value(self, x_coeffs: Iterable, y_coeffs: Iterable) -> Fraction:
        """Bilinear form value when the matrix is square: x^T M y."""
        my = self.apply(y_coeffs)
        return sum((frac(a) * b for a, b in zip(x_coeffs, my)), ZERO)


def is_derivation(g: LieAlgebra, psi: LinearMap) -> bool:
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = psi.apply_element(g.bracket_basis(i, j))
            rhs = (g.bracket(psi.apply_element(g.basis_vector(i)), g.basis_vector(j))
                   + g.bracket(g.basis_vector(i), psi.apply_element(g.basis_vector(j))))
            if lhs != rhs:
                return False
    return True


def derivations(g: LieAlgebra) -> list[LinearMap]:
    """Basis of the derivation algebra, by solving the Leibniz constraints."""
    n = g.dim
    rows = []
    # unknowns: psi[a][b] flattened as a * n + b
    for i in range(n):
        for j in range(i + 1, n):
            cij = g.bracket_basis(i, j).coeffs()
            for component in range(n):
                row = [ZERO] * (n * n)
                for b in range(n):
                    # psi applied to [e_i, e_j]
                    row[component * n + b] += cij[b]
                for a in range(n):
                    # [psi e_i, e_j] contributes psi[a][i] [e_a, e_j]
                    row[a * n + i] -= g.bracket_basis(a, j).coeffs()[component]
                    # [e_i, psi e_j] contributes psi[a][j] [e_i, e_a]
                    row[a * n + j] -= g.bracket_basis(i, a).coeffs()[component]
                rows.append(row)
    if not rows:
        basis = [list(r) for r in linalg.identity(n * n)]
    else:
        basis = linalg.nullspace(rows)
    maps = []
    for flat in basis:
        maps.append(LinearMap.from_rows([[flat[a * n + b] for b in range(n)] for a in range(n)]))
    return maps


def killing_form(g: LieAlgebra) -> LinearMap:
    """K(x, y) = trace(ad_x ad_y), as a symmetric matrix over the basis."""
    n = g.dim
    ads = [g.ad_matrix(g.basis_vector(i)) for i in range(n)]
    k = linalg.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            prod = linalg.mat_mul(ads[i], ads[j])
            tr = sum((prod[t][t] for t in range(n)), ZERO)
            k[i][j] = tr
            k[j][i] = tr
    return LinearMap.from_rows(k)


@dataclass(frozen=True)
class CompactnessReport:
    """Outcome of the compactness test g = Z(g) + [g, g] with definite Killing form."""

    algebra: LieAlgebra
    center: Subspace
    derived: Subspace
    splits: bool
    killing_definite: bool
    killing_pivots: tuple[Fraction, ...]

    @property
    def compact(self) -> bool:
        return self.splits and self.killing_definite

    def __bool__(self) -> bool:
        return self.compact

    def describe(self) -> str:
        return (f"{self.algebra.name}: center dim {self.center.rank}, derived dim {self.derived.rank}, "
                f"direct sum: {self.splits}, Killing negative definite on derived: {self.killing_definite}")


def _restrict_bilinear(b: LinearMap, vectors: list[list[Fraction]]) -> Matrix:
    return [[b.value(v, w) for w in vectors] for v in vectors]


def is_compact(g: LieAlgebra) -> CompactnessReport:
    """Compact type: the center and derived algebra span g independently and
    the Killing form is negative definite on the derived algebra."""
    z = center(g)
    d = derived_algebra(g)
    splits = (z.rank + d.rank == g.dim
              and linalg.rank([list(r) for r in z.rows + d.rows]) == g.dim)
    k = killing_form(g)
    restricted = _restrict_bilinear(k, [list(r) for r in d.rows])
    definite, pivots = linalg.is_definite(restricted, positive=False)
    return CompactnessReport(g, z, d, splits, definite, tuple(pivots))


def invariant_scalar_product(g: LieAlgebra) -> LinearMap:
    """Ad-invariant positive definite product on a compact-type algebra.

    Minus the Killing form on the derived algebra, the standard product on the
    chosen center basis, and the two blocks orthogonal to each other.
    """
    report = is_compact(g)
    if not report.compact:
        raise ValueError(f"{g.name} is not of compact type")
    basis = [list(r) for r in report.derived.rows] + [list(r) for r in report.center.rows]
    nd = report.derived.rank
    k = killing_form(g)
    n = g.dim
    b_adapted = linalg.zeros(n, n)
    for i in range(n):
        for j in range(n):
            if i < nd and j < nd:
                b_adapted[i][j] = -k.value(basis[i], basis[j])
            elif i == j:
                b_adapted[i][j] = Fraction(1)
    p = linalg.transpose(basis)  # columns are the adapted basis vectors
    p_inv = linalg.invert(p)
    b = linalg.mat_mul(linalg.transpose(p_inv), linalg.mat_mul(b_adapted, p_inv))
    return LinearMap.from_rows(b)


def direct_product(g: LieAlgebra, h: LieAlgebra, name: str | None = None) -> LieAlgebra:
    """Product algebra on fresh labels e1..e_{m+n}; blocks do not interact."""
    n = g.dim + h.dim
    structure: dict[tuple[int, int], Multivector] = {}
    for (i, j), v in g.structure.items():
        structure[(i, j)] = Multivector.from_coeffs(v.coeffs() + [ZERO] * h.dim)
    for (i, j), v in h.structure.items():
        structure[(i + g.dim, j + g.dim)] = Multivector.from_coeffs([ZERO] * g.dim + v.coeffs())
    return LieAlgebra(name or f"{g.name}(+){h.name}", n, standard_labels(n), structure)


def abelian(n: int, name: str | None = None) -> LieAlgebra:
    return LieAlgebra(name or f"abelian({n})", n, standard_labels(n), {})


def central_extension(h: LieAlgebra, omega: Form, name: str | None = None) -> LieAlgebra:
    """Extension of h by a central line, twisted by a closed 2-form.

    [(x, a), (y, b)] = ([x, y], -omega(x, y)).  omega must be a 2-cocycle of
    h (closed for the Chevalley-Eilenberg differential).
    """
    from liejacobi.schouten import ce_differential

    if omega.dim != h.dim or (omega.grade != 2 and not omega.is_zero()):
        raise ValueError("omega must be a 2-form on h")
    if not ce_differential(h, omega).is_zero():
        raise ValueError("omega is not closed, so the extension would not be a Lie algebra")
    n = h.dim + 1
    structure: dict[tuple[int, int], Multivector] = {}
    for i in range(h.dim):
        for j in range(i + 1, h.dim):
            head = h.bracket_basis(i, j).coeffs()
            tail = -evaluate(omega, h.basis_vector(i), h.basis_vector(j))
            v = Multivector.from_coeffs(head + [tail])
            if not v.is_zero():
                structure[(i, j)] = v
    return LieAlgebra(name or f"{h.name}+center", n, standard_labels(n), structure)


def semidirect_by_derivation(h: LieAlgebra, psi: LinearMap, name: str | None = None) -> LieAlgebra:
    """h extended by a line acting through a derivation:
    [(x, a), (y, b)] = ([x, y] + a psi(y) - b psi(x), 0)."""
    if psi.codomain_dim != h.dim or psi.domain_dim != h.dim:
        raise ValueError("psi must be an endomorphism of h")
    if not is_derivation(h, psi):
        raise ValueError("psi is not a derivation of h")
    n = h.dim + 1
    structure: dict[tuple[int, int], Multivector] = {}
    for i in range(h.dim):
        for j in range(i + 1, h.dim):
            v = Multivector.from_coeffs(h.bracket_basis(i, j).coeffs() + [ZERO])
            if not v.is_zero():
                structure[(i, j)] = v
        # [e_i, e_{n}] = -psi(e_i)
        v = Multivector.from_coeffs([-c for c in psi.apply([ZERO] * i + [Fraction(1)] + [ZERO] * (h.dim - i - 1))] + [ZERO])
        if not v.is_zero():
            structure[(i, h.dim)] = v
    return LieAlgebra(name or f"{h.name}:line", n, standard_labels(n), structure)


def change_basis(g: LieAlgebra, columns: Matrix, name: str | None = None,
                 labels: tuple[str, ...] | None = None) -> LieAlgebra:
    """Structure constants in a new basis; columns are the new basis vectors."""
    p = [list(r) for r in columns]
    p_inv = linalg.invert(p)
    n = g.dim
    structure: dict[tuple[int, int], Multivector] = {}
    for i in range(n):
        for j in range(i + 1, n):
            fi = Multivector.from_coeffs([p[r][i] for r in range(n)])
            fj = Multivector.from_coeffs([p[r][j] for r in range(n)])
            br = g.bracket(fi, fj)
            v = Multivector.from_coeffs(linalg.mat_vec(p_inv, br.coeffs()))
            if not v.is_zero():
                structure[(i, j)] = v
    return LieAlgebra(name or g.name, n, labels or standard_labels(n), structure)
