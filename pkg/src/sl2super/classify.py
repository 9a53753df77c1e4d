"""Symbolic constraint generation and exact solution for the unknown
odd-times-odd products of a superalgebra skeleton.

Given an even Leibniz algebra and a validated bimodule, the products of two
odd basis vectors are the only undetermined part of a superalgebra table.
Writing each such product with unknown coefficients over the even basis, the
Leibniz superidentity on every basis triple with at least two odd members
becomes a homogeneous linear system in those unknowns: each identity term
contains exactly one odd-times-odd bracket composed with known actions, so
no unknown ever multiplies another.  Triples with at most one odd member
hold automatically because the even part and the bimodule are validated
beforehand.

``generate_constraints`` expands that system symbolically, ``solve`` returns
its canonical nullspace, and ``classify`` packages the solutions as actual
superalgebra tables, re-verified from scratch.  ``residual_matrix`` builds
the same linear map by direct bracket evaluation on assembled tables, as an
independent cross-check of the symbolic route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (BimoduleSpec, SuperAlgebra, Vec, check_bimodule_axioms,
                      check_leibniz, check_leibniz_super)
from .catalog import (OddBracketTable, assemble, module_n1, sl2,
                      superalgebra_s1, superalgebra_s2)
from .linalg import Matrix, RowSpace, format_scalar, parse_scalar, rational_sqrt


class InvalidStructure(ValueError):
    """A precondition table fails its identity checks; carries the report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True, order=True)
class UnknownId:
    """Coefficient unknown: coordinate ``kind`` of the product of odd basis
    vectors i and j.  For a 3-dimensional even part the kinds are named
    a, b, c (coefficients of the first, second, third even vector)."""

    kind: int
    i: int
    j: int

    @property
    def name(self) -> str:
        letter = "abc"[self.kind] if self.kind < 3 else f"u{self.kind}"
        return f"{letter}_{self.i}_{self.j}"

    def __repr__(self):
        return f"UnknownId({self.name})"


@dataclass(frozen=True)
class ConstraintRow:
    """One linear equation: sum of coeff * unknown = 0, tagged with the
    basis triple whose superidentity produced it and the component of the
    residual it equates."""

    coeffs: tuple[tuple[int, Fraction], ...]
    triple: tuple[str, str, str]
    component: str

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)


@dataclass(frozen=True)
class ConstraintSystem:
    unknowns: tuple[UnknownId, ...]
    rows: tuple[ConstraintRow, ...]

    def unknown_names(self) -> tuple[str, ...]:
        return tuple(u.name for u in self.unknowns)

    def to_json_dict(self) -> dict:
        return {
            "unknowns": list(self.unknown_names()),
            "rows": [
                {
                    "coeffs": {self.unknowns[p].name: format_scalar(v)
                               for p, v in row.coeffs},
                    "triple": list(row.triple),
                    "component": row.component,
                }
                for row in self.rows
            ],
        }


@dataclass(frozen=True)
class SolutionSpace:
    """Canonical nullspace of a constraint system."""

    unknowns: tuple[UnknownId, ...]
    vectors: tuple[tuple[Fraction, ...], ...]
    rank: int
    pivots: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def free_columns(self) -> tuple[int, ...]:
        taken = set(self.pivots)
        return tuple(c for c in range(len(self.unknowns)) if c not in taken)

    def nonzero_named(self, vector: tuple[Fraction, ...]) -> dict[str, Fraction]:
        return {self.unknowns[p].name: v for p, v in enumerate(vector) if v != 0}

    def to_json_dict(self) -> dict:
        return {
            "unknowns": [u.name for u in self.unknowns],
            "dimension": self.dimension,
            "rank": self.rank,
            "vectors": [
                {name: format_scalar(v)
                 for name, v in self.nonzero_named(vec).items()}
                for vec in self.vectors
            ],
        }


class _RowCollector:
    """Accumulates generated rows, deduplicating scalar multiples while
    keeping the first provenance tag."""

    def __init__(self):
        self.rows: list[ConstraintRow] = []
        self._seen: set[tuple] = set()

    def add(self, coeffs: dict[int, Fraction],
            triple: tuple[str, str, str], component: str) -> None:
        items = tuple(sorted((p, Fraction(v)) for p, v in coeffs.items()
                             if v != 0))
        if not items:
            return
        lead = items[0][1]
        key = tuple((p, v / lead) for p, v in items)
        if key in self._seen:
            return
        self._seen.add(key)
        self.rows.append(ConstraintRow(items, triple, component))


def _check_preconditions(even: SuperAlgebra, mod: BimoduleSpec) -> None:
    rep = check_leibniz(even)
    if not rep.ok:
        raise InvalidStructure(
            "even part fails the Leibniz identity:\n" + rep.describe(5), rep)
    rep = check_bimodule_axioms(mod)
    if not rep.ok:
        raise InvalidStructure(
            "module fails the bimodule axioms:\n" + rep.describe(10), rep)


def _action_columns(mod: BimoduleSpec):
    """Sparse column views of the module actions: rcol[a][m] is the image of
    module vector m under the right action of even generator a."""
    nm = mod.module_dim
    ne = len(mod.right)
    rcol = [[{r: mat.entry(r, m) for r in range(nm) if mat.entry(r, m) != 0}
             for m in range(nm)] for mat in mod.right]
    lcol = [[{r: mat.entry(r, m) for r in range(nm) if mat.entry(r, m) != 0}
             for m in range(nm)] for mat in mod.left]
    assert ne == len(mod.left)
    return rcol, lcol


def generate_constraints(even: SuperAlgebra, mod: BimoduleSpec,
                         symmetric: bool = True,
                         zero_odd_indices: frozenset[int] = frozenset()
                         ) -> ConstraintSystem:
    """Expand the superidentity over every ordered basis triple with two or
    three odd members into linear rows over the unknown odd products.

    ``symmetric`` trusts that the product of two odd elements does not
    depend on their order and keys unknowns by unordered pairs; with
    ``symmetric=False`` the two orders are independent unknowns and the
    solver itself must force their equality.  ``zero_odd_indices`` pre-zeroes
    every product touching those odd basis positions (used with
    ``annihilator_prefilter``).
    """
    _check_preconditions(even, mod)
    ne, nm = even.dim, mod.module_dim
    zero = frozenset(zero_odd_indices)
    if any(not 0 <= z < nm for z in zero):
        raise ValueError("zero_odd_indices out of module range")

    if symmetric:
        pairs = [(i, j) for i in range(nm) for j in range(i, nm)
                 if i not in zero and j not in zero]
    else:
        pairs = [(i, j) for i in range(nm) for j in range(nm)
                 if i not in zero and j not in zero]
    unknowns = tuple(UnknownId(k, i, j) for k in range(ne) for (i, j) in pairs)
    pos = {(u.kind, u.i, u.j): p for p, u in enumerate(unknowns)}

    def upos(kind: int, i: int, j: int) -> int | None:
        if i in zero or j in zero:
            return None
        if symmetric and i > j:
            i, j = j, i
        return pos[(kind, i, j)]

    rcol, lcol = _action_columns(mod)
    # ebr[x][y] = the even product [e_x, e_y] as a sparse vector
    ebr = [[even.bracket_indices(x, y) for y in range(ne)] for x in range(ne)]

    labels = [even.label(i) for i in range(ne)] + list(mod.odd_labels)
    collector = _RowCollector()
    dim = ne + nm

    def emit(acc: dict[int, dict[int, Fraction]],
             triple: tuple[str, str, str], comp_labels) -> None:
        for comp in sorted(acc):
            collector.add(acc[comp], triple, comp_labels[comp])

    def put(acc, comp, kind, i, j, coeff):
        p = upos(kind, i, j)
        if p is None or coeff == 0:
            return
        d = acc.setdefault(comp, {})
        cur = d.get(p, 0) + coeff
        if cur == 0:
            d.pop(p, None)
        else:
            d[p] = cur

    even_labels = labels[:ne]
    odd_labels = list(mod.odd_labels)

    for t0 in range(dim):
        for t1 in range(dim):
            for t2 in range(dim):
                odd0, odd1, odd2 = t0 >= ne, t1 >= ne, t2 >= ne
                nodd = odd0 + odd1 + odd2
                if nodd < 2:
                    continue
                triple = (labels[t0], labels[t1], labels[t2])
                acc: dict[int, dict[int, Fraction]] = {}
                if nodd == 3:
                    u, v, w = t0 - ne, t1 - ne, t2 - ne
                    # residual = [u,[v,w]] - [[u,v],w] - [[u,w],v], odd vector
                    for k in range(ne):
                        for r, cf in rcol[k][u].items():
                            put(acc, r, k, v, w, cf)
                        for r, cf in lcol[k][w].items():
                            put(acc, r, k, u, v, -cf)
                        for r, cf in lcol[k][v].items():
                            put(acc, r, k, u, w, -cf)
                    emit(acc, triple, odd_labels)
                elif not odd0:
                    a, u, v = t0, t1 - ne, t2 - ne
                    # residual = [a,U(u,v)] - U([a,u],v) - U([a,v],u)
                    for k in range(ne):
                        for t, cf in ebr[a][k].items():
                            put(acc, t, k, u, v, cf)
                    for m, cm in lcol[a][u].items():
                        for t in range(ne):
                            put(acc, t, t, m, v, -cm)
                    for m, cm in lcol[a][v].items():
                        for t in range(ne):
                            put(acc, t, t, m, u, -cm)
                    emit(acc, triple, even_labels)
                elif not odd1:
                    u, a, v = t0 - ne, t1, t2 - ne
                    # residual = U(u,[a,v]) - U([u,a],v) + [U(u,v),a]
                    for m, cm in lcol[a][v].items():
                        for t in range(ne):
                            put(acc, t, t, u, m, cm)
                    for m, cm in rcol[a][u].items():
                        for t in range(ne):
                            put(acc, t, t, m, v, -cm)
                    for k in range(ne):
                        for t, cf in ebr[k][a].items():
                            put(acc, t, k, u, v, cf)
                    emit(acc, triple, even_labels)
                else:
                    u, v, a = t0 - ne, t1 - ne, t2
                    # residual = U(u,[v,a]) - [U(u,v),a] + U([u,a],v)
                    for m, cm in rcol[a][v].items():
                        for t in range(ne):
                            put(acc, t, t, u, m, cm)
                    for k in range(ne):
                        for t, cf in ebr[k][a].items():
                            put(acc, t, k, u, v, -cf)
                    for m, cm in rcol[a][u].items():
                        for t in range(ne):
                            put(acc, t, t, m, v, cm)
                    emit(acc, triple, even_labels)

    return ConstraintSystem(unknowns, tuple(collector.rows))


def solve(cs: ConstraintSystem) -> SolutionSpace:
    """Canonical nullspace of the row matrix: one basis vector per free
    column, that column set to 1."""
    rs = RowSpace(len(cs.unknowns))
    for row in cs.rows:
        rs.add(row.as_dict())
    return SolutionSpace(cs.unknowns, tuple(rs.nullspace()), rs.rank,
                         tuple(rs.pivot_columns()))


def annihilator_prefilter(even: SuperAlgebra, mod: BimoduleSpec
                          ) -> frozenset[int]:
    """Odd basis positions whose products are forced to vanish in every
    solution.

    The span of the symmetrized products [a,m]+[m,a] (a even, m odd)
    consists of elements z with [anything, z] = 0, whatever the odd products
    turn out to be, and that property survives the right action of the even
    part.  Any odd basis vector landing in the saturated span therefore has
    zero product with every odd element.  Returns those positions; sound in
    the symmetric regime (the unordered product keyed on the pair vanishes).
    """
    nm = mod.module_dim
    if nm == 0:
        return frozenset()
    rcol, lcol = _action_columns(mod)
    ne = even.dim
    rs = RowSpace(nm)
    for a in range(ne):
        for m in range(nm):
            vec: Vec = {}
            for r, cf in rcol[a][m].items():
                vec[r] = vec.get(r, Fraction(0)) + cf
            for r, cf in lcol[a][m].items():
                vec[r] = vec.get(r, Fraction(0)) + cf
            rs.add({r: v for r, v in vec.items() if v != 0})
    changed = True
    while changed:
        changed = False
        for row in list(rs.echelon_rows()):
            for a in range(ne):
                img: Vec = {}
                for m, cm in row.items():
                    for r, cf in rcol[a][m].items():
                        val = img.get(r, Fraction(0)) + cm * cf
                        if val == 0:
                            img.pop(r, None)
                        else:
                            img[r] = val
                if img and rs.add(img):
                    changed = True
    return frozenset(m for m in range(nm)
                     if rs.contains({m: Fraction(1)}))


def _full_unknowns(ne: int, nm: int) -> tuple[UnknownId, ...]:
    return tuple(UnknownId(k, i, j) for k in range(ne)
                 for i in range(nm) for j in range(i, nm))


def _products_from_vector(unknowns: tuple[UnknownId, ...],
                          vector: tuple[Fraction, ...]) -> OddBracketTable:
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for u, val in zip(unknowns, vector):
        if val == 0:
            continue
        products.setdefault((u.i, u.j), {})[u.kind] = val
    return OddBracketTable.build(products)


@dataclass(frozen=True)
class Classification:
    """Solution space plus assembled, re-verified representative tables."""

    unknowns: tuple[UnknownId, ...]
    vectors: tuple[tuple[Fraction, ...], ...]
    solution: SolutionSpace
    system: ConstraintSystem
    representatives: tuple[SuperAlgebra, ...]
    names: tuple[str, ...]
    filtered: frozenset[int]
    strict: bool
    symmetry_emerged: bool | None

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def summary_line(self) -> str:
        if self.dimension == 0:
            return "dimension 0; [L1,L1]=0"
        return (f"dimension {self.dimension}; representatives: "
                + ", ".join(self.names))

    def verdict_line(self) -> str:
        if self.dimension == 0:
            return "[L1,L1]=0"
        return "family: " + ",".join(self.names)

    def to_json_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "rank": self.solution.rank,
            "unknowns": [u.name for u in self.unknowns],
            "vectors": [
                {self.unknowns[p].name: format_scalar(v)
                 for p, v in enumerate(vec) if v != 0}
                for vec in self.vectors
            ],
            "representatives": [rep.to_json_dict()
                                for rep in self.representatives],
            "names": list(self.names),
            "filtered": sorted(self.filtered),
            "strict": self.strict,
            "symmetry_emerged": self.symmetry_emerged,
        }


def classify(even: SuperAlgebra, mod: BimoduleSpec, prefilter: bool = True,
             strict: bool = False) -> Classification:
    """Determine every odd-times-odd product table compatible with the
    superidentity over the given skeleton.

    Returns the canonical solution space embedded in full symmetric
    coordinates, plus representative superalgebras: the zero-product table
    and, per solution-space basis vector, the table at parameter 1.  Every
    representative is assembled and re-verified through
    ``check_leibniz_super``; a failure there would mean the generator and
    the checker disagree and raises immediately.

    ``strict`` treats the two orders of each odd pair as independent
    unknowns and verifies that the solver forces their equality (the
    prefilter is skipped in that mode because its soundness argument uses
    the unordered keying).
    """
    filtered = (annihilator_prefilter(even, mod)
                if prefilter and not strict else frozenset())
    system = generate_constraints(even, mod, symmetric=not strict,
                                  zero_odd_indices=filtered)
    sol = solve(system)
    ne, nm = even.dim, mod.module_dim
    full = _full_unknowns(ne, nm)
    fpos = {(u.kind, u.i, u.j): p for p, u in enumerate(full)}

    symmetry_emerged: bool | None = None
    if strict:
        spos = {(u.kind, u.i, u.j): p for p, u in enumerate(sol.unknowns)}
        symmetry_emerged = all(
            vec[spos[(k, i, j)]] == vec[spos[(k, j, i)]]
            for vec in sol.vectors
            for (k, i, j) in spos if i < j)
        if not symmetry_emerged:
            raise InvalidStructure(
                "strict mode produced an order-dependent solution; "
                "representatives require symmetric products")

    vectors = []
    for vec in sol.vectors:
        out = [Fraction(0)] * len(full)
        for p, u in enumerate(sol.unknowns):
            if vec[p] == 0 or (strict and u.i > u.j):
                continue
            out[fpos[(u.kind, u.i, u.j)]] = vec[p]
        vectors.append(tuple(out))

    reps = [assemble(even, mod)]
    for vec in vectors:
        reps.append(assemble(even, mod, _products_from_vector(full, vec)))
    for rep in reps:
        report = check_leibniz_super(rep)
        if not report.ok:
            raise InvalidStructure(
                "internal error: a solved table fails the superidentity "
                "on re-verification:\n" + report.describe(5), report)

    s1, s2 = superalgebra_s1(), superalgebra_s2()
    names = []
    for idx, rep in enumerate(reps):
        if rep == s1:
            names.append("S1")
        elif rep == s2:
            names.append("S2")
        else:
            names.append("zero" if idx == 0 else f"P{idx}")

    return Classification(full, tuple(vectors), sol, system, tuple(reps),
                          tuple(names), filtered, strict, symmetry_emerged)


def residual_matrix(even: SuperAlgebra, mod: BimoduleSpec
                    ) -> tuple[list[tuple[tuple[str, str, str], str]], Matrix]:
    """Superidentity residuals as an explicit matrix over the full symmetric
    unknowns, computed by assembling one table per unit unknown and
    evaluating brackets directly.

    This is the slow, independent route: no symbolic expansion, just the
    definition of the residual on every triple with at least two odd
    members.  Row order is lexicographic in (triple, component).  The
    columns express that residuals are linear in the product table, which
    the tests verify against random tables.
    """
    _check_preconditions(even, mod)
    ne, nm = even.dim, mod.module_dim
    full = _full_unknowns(ne, nm)
    dim = ne + nm

    def residuals_for(alg: SuperAlgebra) -> dict[tuple[int, int, int], Vec]:
        par = [alg.parity(i) for i in range(dim)]
        out = {}
        for x in range(dim):
            for y in range(dim):
                for z in range(dim):
                    if par[x] + par[y] + par[z] < 2:
                        continue
                    sign = -1 if (par[y] and par[z]) else 1
                    inner = alg.bracket_indices(y, z)
                    term1: Vec = {}
                    for t, c in inner.items():
                        for r, c2 in alg.bracket_indices(x, t).items():
                            term1[r] = term1.get(r, Fraction(0)) + c * c2
                    res = dict(term1)
                    for t, c in alg.bracket_indices(x, y).items():
                        for r, c2 in alg.bracket_indices(t, z).items():
                            res[r] = res.get(r, Fraction(0)) - c * c2
                    for t, c in alg.bracket_indices(x, z).items():
                        for r, c2 in alg.bracket_indices(t, y).items():
                            res[r] = res.get(r, Fraction(0)) + sign * c * c2
                    res = {r: v for r, v in res.items() if v != 0}
                    if res:
                        out[(x, y, z)] = res
        return out

    labels = [even.label(i) for i in range(ne)] + list(mod.odd_labels)
    entries: dict[tuple[int, int], Fraction] = {}
    row_index: dict[tuple[int, int, int, int], int] = {}
    row_labels: list[tuple[tuple[str, str, str], str]] = []

    def row_for(x, y, z, comp):
        key = (x, y, z, comp)
        if key not in row_index:
            row_index[key] = len(row_labels)
            row_labels.append(((labels[x], labels[y], labels[z]),
                               labels[comp]))
        return row_index[key]

    # enumerate rows deterministically first: all candidate triples/components
    for x in range(dim):
        for y in range(dim):
            for z in range(dim):
                if (x >= ne) + (y >= ne) + (z >= ne) < 2:
                    continue
                for comp in range(dim):
                    row_for(x, y, z, comp)

    for col, unk in enumerate(full):
        table = OddBracketTable.build({(unk.i, unk.j): {unk.kind: 1}})
        alg = assemble(even, mod, table)
        for (x, y, z), res in residuals_for(alg).items():
            for comp, val in res.items():
                entries[(row_index[(x, y, z, comp)], col)] = val

    return row_labels, Matrix.from_entries(len(row_labels), len(full), entries)


# ---------------------------------------------------------------------------
# independently derived closed-form system for the symmetric ladder module
# ---------------------------------------------------------------------------


def symmetric_ladder_hand_system(n: int, include_cubic_rows: bool = True
                                 ) -> ConstraintSystem:
    """Closed-form constraint system for ``module_n1(n)``, written out by
    hand as a cross-check oracle for the generator.

    With [x_i,x_j] = a_{i,j}e + b_{i,j}f + c_{i,j}h (symmetric), the
    superidentity against h, f, e gives, for 0 <= i <= j <= n (terms whose
    index leaves the range are absent):

        h rows: (i+j+1-n) a_{i,j} = 0
                (i+j-1-n) b_{i,j} = 0
                (i+j-n)   c_{i,j} = 0
        f rows: a_{i,j+1} + a_{i+1,j} = 0
                b_{i,j+1} + b_{i+1,j} = 2 c_{i,j}
                c_{i,j+1} + c_{i+1,j} = a_{i,j}
        e rows: i(n+1-i) a_{i-1,j} + j(n+1-j) a_{i,j-1} = 2 c_{i,j}
                i(n+1-i) b_{i-1,j} + j(n+1-j) b_{i,j-1} = 0
                i(n+1-i) c_{i-1,j} + j(n+1-j) c_{i,j-1} = b_{i,j}

    Those bilinear-in-even rows do not exhaust the superidentity: for odd n
    a one-parameter alternating family survives them, and the all-odd triple
    (x_{n-2}, x_1, x_1) contributes the extra row that removes it (its
    x_0 component reads -2n a_{1,n-2}, plus -3(n-2) a_{1,1} when n = 3).
    ``include_cubic_rows`` appends that row for odd n >= 3; without it the
    system is strictly weaker than the generated one for odd n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    nm = n + 1
    unknowns = _full_unknowns(3, nm)
    pos = {(u.kind, u.i, u.j): p for p, u in enumerate(unknowns)}
    A, B, C = 0, 1, 2

    def at(kind: int, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return pos[(kind, i, j)]

    collector = _RowCollector()

    def row(terms: list[tuple[int, int, int, int]],
            triple: tuple[str, str, str], comp: str) -> None:
        coeffs: dict[int, Fraction] = {}
        for kind, i, j, cf in terms:
            if cf == 0 or not (0 <= i <= n and 0 <= j <= n):
                continue
            p = at(kind, i, j)
            coeffs[p] = coeffs.get(p, Fraction(0)) + cf
        collector.add(coeffs, triple, comp)

    for i in range(nm):
        for j in range(i, nm):
            xi, xj = f"x_{i}", f"x_{j}"
            row([(A, i, j, i + j + 1 - n)], (xi, xj, "h"), "e")
            row([(B, i, j, i + j - 1 - n)], (xi, xj, "h"), "f")
            row([(C, i, j, i + j - n)], (xi, xj, "h"), "h")
            row([(A, i, j + 1, 1), (A, i + 1, j, 1)], (xi, xj, "f"), "e")
            row([(B, i, j + 1, 1), (B, i + 1, j, 1), (C, i, j, -2)],
                (xi, xj, "f"), "f")
            row([(C, i, j + 1, 1), (C, i + 1, j, 1), (A, i, j, -1)],
                (xi, xj, "f"), "h")
            ci, cj = i * (n + 1 - i), j * (n + 1 - j)
            row([(A, i - 1, j, ci), (A, i, j - 1, cj), (C, i, j, -2)],
                (xi, xj, "e"), "e")
            row([(B, i - 1, j, ci), (B, i, j - 1, cj)], (xi, xj, "e"), "f")
            row([(C, i - 1, j, ci), (C, i, j - 1, cj), (B, i, j, -1)],
                (xi, xj, "e"), "h")

    if include_cubic_rows and n >= 3 and n % 2 == 1:
        terms = [(A, 1, n - 2, -2 * n)]
        if n == 3:
            terms.append((A, 1, 1, -3 * (n - 2)))
        row(terms, (f"x_{n - 2}", "x_1", "x_1"), "x_0")

    return ConstraintSystem(unknowns, tuple(collector.rows))


def alternating_coefficient_rows(n: int) -> list[dict[int, Fraction]]:
    """Rows stating a_{i,n-1-i} = (-1)^i a_{0,n-1} over the full symmetric
    unknowns of ``module_n1(n)``; consequences of the generated system,
    testable by row-space membership."""
    if n < 1:
        return []
    unknowns = _full_unknowns(3, n + 1)
    pos = {(u.kind, u.i, u.j): p for p, u in enumerate(unknowns)}

    def at(i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return pos[(0, i, j)]

    rows = []
    for i in range(1, n):
        coeffs: dict[int, Fraction] = {}
        p1, p2 = at(i, n - 1 - i), at(0, n - 1)
        coeffs[p1] = coeffs.get(p1, Fraction(0)) + 1
        coeffs[p2] = coeffs.get(p2, Fraction(0)) - Fraction((-1) ** i)
        coeffs = {p: v for p, v in coeffs.items() if v != 0}
        if coeffs:
            rows.append(coeffs)
    return rows


def verify_rescaling_isomorphism(c) -> bool:
    """Check mechanically that the one-parameter family member at parameter
    c is isomorphic to the normalized table via the odd rescaling by 1/r,
    where c = r^2.

    Over the rationals only square parameters admit the rescaling; over a
    field containing a square root of every scalar the same change of basis
    normalizes any nonzero parameter.  Raises ValueError for zero or
    non-square c.
    """
    c = parse_scalar(c)
    if c == 0:
        raise ValueError("parameter must be nonzero")
    r = rational_sqrt(c)
    if r is None:
        raise ValueError(
            f"{c} is not the square of a rational; the rescaling needs a "
            "field extension")
    member = assemble(sl2(), module_n1(1), OddBracketTable.build(
        {(0, 0): {0: 2 * c}, (1, 1): {1: 2 * c}, (0, 1): {2: c}}))
    report = check_leibniz_super(member)
    if not report.ok:
        raise InvalidStructure(
            "family member fails the superidentity:\n" + report.describe(5),
            report)
    scales = (Fraction(1), Fraction(1), Fraction(1), 1 / r, 1 / r)
    if member.rescaled(scales) != superalgebra_s2():
        raise InvalidStructure(
            f"rescaling by 1/{r} did not reach the normalized table")
    return True
