"""Superalgebra core: graded structure constants and identity checkers.

A (Leibniz) superalgebra is stored as a Z2-graded basis plus a sparse table
of structure constants.  The bracket is not assumed antisymmetric or
associative; the checkers below test, by exhaustive evaluation on basis
triples, which identities actually hold:

* ``check_leibniz``          [x,[y,z]] = [[x,y],z] - [[x,z],y]   (ungraded)
* ``check_leibniz_super``    [x,[y,z]] = [[x,y],z] - (-1)^{|y||z|} [[x,z],y]
* ``check_graded_antisymmetry``   [x,y] = -(-1)^{|x||y|} [y,x]
* ``check_bimodule_axioms``  the three compatibility identities a left/right
  action pair must satisfy over a Lie algebra (see ``BimoduleSpec``)

Every check returns a ``ViolationReport``; an empty report means the
identity holds exactly.  All arithmetic is exact rational.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction

from .linalg import Matrix, RowSpace, format_scalar, parse_scalar

_ZERO = Fraction(0)

Vec = dict[int, Fraction]  # sparse coordinate vector over a basis


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    @classmethod
    def from_str(cls, s: str) -> "Parity":
        try:
            return {"even": cls.EVEN, "odd": cls.ODD}[s]
        except KeyError:
            raise ValueError(f"parity must be 'even' or 'odd', got {s!r}") from None

    def to_str(self) -> str:
        return "even" if self is Parity.EVEN else "odd"


@dataclass(frozen=True)
class BasisVector:
    index: int
    label: str
    parity: Parity


def _vadd(a: Vec, b: Vec, scale: Fraction = Fraction(1)) -> Vec:
    out = dict(a)
    for k, v in b.items():
        new = out.get(k, _ZERO) + scale * v
        if new == 0:
            out.pop(k, None)
        else:
            out[k] = new
    return out


def _vscale(a: Vec, c: Fraction) -> Vec:
    if c == 0:
        return {}
    return {k: c * v for k, v in a.items()}


class Element:
    """Sparse linear combination of basis vectors (coefficients exact)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, object] | None = None):
        clean: Vec = {}
        for k, v in (coeffs or {}).items():
            fv = parse_scalar(v)
            if fv != 0:
                clean[int(k)] = fv
        self.coeffs = clean

    def __add__(self, other: "Element") -> "Element":
        return Element(_vadd(self.coeffs, other.coeffs))

    def __sub__(self, other: "Element") -> "Element":
        return Element(_vadd(self.coeffs, other.coeffs, Fraction(-1)))

    def __neg__(self) -> "Element":
        return Element({k: -v for k, v in self.coeffs.items()})

    def scaled(self, c) -> "Element":
        return Element(_vscale(self.coeffs, parse_scalar(c)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {format_scalar(v)}"
                          for k, v in sorted(self.coeffs.items()))
        return f"Element({{{inner}}})"


@dataclass(frozen=True)
class Violation:
    """One failed identity instance: which identity, at which basis labels,
    with what nonzero residual (label -> coefficient)."""
    identity: str
    labels: tuple[str, ...]
    residual: dict[str, Fraction]

    def describe(self) -> str:
        terms = " + ".join(f"{format_scalar(c)}*{l}"
                           for l, c in self.residual.items())
        return f"{self.identity} at ({', '.join(self.labels)}): residual {terms}"


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self) -> int:
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def describe(self, limit: int | None = None) -> str:
        if self.ok:
            return "no violations"
        shown = self.violations if limit is None else self.violations[:limit]
        lines = [v.describe() for v in shown]
        if limit is not None and len(self.violations) > limit:
            lines.append(f"... and {len(self.violations) - limit} more")
        return "\n".join(lines)


class SuperAlgebra:
    """Finite dimensional Z2-graded algebra given by structure constants.

    The table maps a basis index pair (i, j) to the sparse coordinates of
    [b_i, b_j]; absent pairs multiply to zero.  Construction validates that
    indices are in range and that the product of homogeneous elements is
    homogeneous of the expected parity (grading compatibility).
    """

    def __init__(self, basis: list[BasisVector],
                 table: dict[tuple[int, int], Vec]):
        labels = [b.label for b in basis]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate basis labels")
        for pos, b in enumerate(basis):
            if b.index != pos:
                raise ValueError("basis indices must be 0..dim-1 in order")
        self.basis: tuple[BasisVector, ...] = tuple(basis)
        self._index: dict[str, int] = {b.label: b.index for b in basis}
        dim = len(basis)
        clean: dict[tuple[int, int], Vec] = {}
        for (i, j), vec in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket pair ({i},{j}) out of range")
            expected = (basis[i].parity + basis[j].parity) % 2
            entry: Vec = {}
            for k, v in vec.items():
                if not 0 <= k < dim:
                    raise ValueError(f"product component {k} out of range")
                fv = parse_scalar(v)
                if fv == 0:
                    continue
                if basis[k].parity != expected:
                    raise ValueError(
                        f"grading violated: [{labels[i]},{labels[j]}] has a "
                        f"{basis[k].parity.to_str()} component {labels[k]}")
                entry[k] = fv
            if entry:
                clean[(i, j)] = entry
        self._table = clean

    # -- introspection -------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no basis vector labelled {label!r}") from None

    def label(self, i: int) -> str:
        return self.basis[i].label

    def parity(self, i: int) -> Parity:
        return self.basis[i].parity

    def even_indices(self) -> list[int]:
        return [b.index for b in self.basis if b.parity is Parity.EVEN]

    def odd_indices(self) -> list[int]:
        return [b.index for b in self.basis if b.parity is Parity.ODD]

    def is_purely_even(self) -> bool:
        return all(b.parity is Parity.EVEN for b in self.basis)

    def table_items(self) -> list[tuple[tuple[int, int], Vec]]:
        return [(pair, dict(vec)) for pair, vec in sorted(self._table.items())]

    # -- element helpers ------------------------------------------------

    def basis_element(self, key) -> Element:
        i = key if isinstance(key, int) else self.index(key)
        if not 0 <= i < self.dim:
            raise IndexError(f"basis index {i} out of range")
        return Element({i: 1})

    def element(self, coeffs: dict[str, object]) -> Element:
        return Element({self.index(l): v for l, v in coeffs.items()})

    def format_element(self, x: Element) -> str:
        if x.is_zero():
            return "0"
        parts = []
        for k in x.support():
            c = x.coeffs[k]
            lab = self.label(k)
            if c == 1:
                term = lab
            elif c == -1:
                term = f"-{lab}"
            else:
                term = f"{format_scalar(c)}{lab}"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(f"- {term[1:]}")
            else:
                parts.append(f"+ {term}")
        return " ".join(parts)

    # -- the bracket -----------------------------------------------------

    def bracket_indices(self, i: int, j: int) -> Vec:
        return self._table.get((i, j), {})

    def bracket(self, x: Element, y: Element) -> Element:
        """Bilinear extension of the structure constant table."""
        out: Vec = {}
        for i, xi in x.coeffs.items():
            if i >= self.dim:
                raise ValueError("element does not live in this algebra")
            for j, yj in y.coeffs.items():
                if j >= self.dim:
                    raise ValueError("element does not live in this algebra")
                entry = self._table.get((i, j))
                if not entry:
                    continue
                c = xi * yj
                for k, v in entry.items():
                    new = out.get(k, _ZERO) + c * v
                    if new == 0:
                        out.pop(k, None)
                    else:
                        out[k] = new
        return Element(out)

    def parity_of_element(self, x: Element) -> Parity | None:
        """Parity of a homogeneous element, None for mixed or zero."""
        ps = {self.parity(k) for k in x.coeffs}
        return ps.pop() if len(ps) == 1 else None

    # -- transformations -------------------------------------------------

    def rescaled(self, scales: list) -> "SuperAlgebra":
        """Algebra in the rescaled basis b_i' = s_i b_i (labels kept).

        Structure constants transform as c' = c * s_i * s_j / s_k.
        """
        s = [parse_scalar(x) for x in scales]
        if len(s) != self.dim or any(x == 0 for x in s):
            raise ValueError("need one nonzero scale per basis vector")
        table: dict[tuple[int, int], Vec] = {}
        for (i, j), vec in self._table.items():
            table[(i, j)] = {k: v * s[i] * s[j] / s[k] for k, v in vec.items()}
        return SuperAlgebra(list(self.basis), table)

    def forget_grading(self) -> "SuperAlgebra":
        """Same table with every basis vector declared even (ungraded view)."""
        basis = [BasisVector(b.index, b.label, Parity.EVEN) for b in self.basis]
        return SuperAlgebra(basis, {p: dict(v) for p, v in self._table.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, SuperAlgebra)
                and self.basis == other.basis
                and self._table == other._table)

    def __repr__(self) -> str:
        return (f"SuperAlgebra(dim={self.dim}, "
                f"odd={len(self.odd_indices())}, "
                f"products={len(self._table)})")

    # -- JSON wire format -------------------------------------------------

    def to_json_dict(self) -> dict:
        brackets = []
        for (i, j), vec in sorted(self._table.items()):
            result = [{"coeff": format_scalar(vec[k]), "label": self.label(k)}
                      for k in sorted(vec)]
            brackets.append({"left": self.label(i), "right": self.label(j),
                             "result": result})
        return {
            "basis": [{"label": b.label, "parity": b.parity.to_str()}
                      for b in self.basis],
            "brackets": brackets,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "SuperAlgebra":
        if not isinstance(data, dict) or "basis" not in data:
            raise ValueError("algebra JSON must be an object with a 'basis' key")
        basis = []
        for pos, entry in enumerate(data["basis"]):
            basis.append(BasisVector(pos, str(entry["label"]),
                                     Parity.from_str(entry["parity"])))
        index = {b.label: b.index for b in basis}
        if len(index) != len(basis):
            raise ValueError("duplicate basis labels")
        table: dict[tuple[int, int], Vec] = {}
        for br in data.get("brackets", []):
            try:
                i, j = index[br["left"]], index[br["right"]]
            except KeyError as exc:
                raise ValueError(f"unknown basis label {exc.args[0]!r}") from None
            vec: Vec = {}
            for term in br["result"]:
                lab = term["label"]
                if lab not in index:
                    raise ValueError(f"unknown basis label {lab!r}")
                vec[index[lab]] = vec.get(index[lab], _ZERO) + Fraction(str(term["coeff"]))
            if (i, j) in table:
                raise ValueError(f"duplicate bracket entry for ({br['left']},{br['right']})")
            table[(i, j)] = vec
        return cls(basis, table)

    @classmethod
    def from_json(cls, text: str) -> "SuperAlgebra":
        return cls.from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# identity checkers
# ---------------------------------------------------------------------------


def _raw_bracket(table, x: Vec, y: Vec) -> Vec:
    out: Vec = {}
    for i, xi in x.items():
        for j, yj in y.items():
            entry = table.get((i, j))
            if not entry:
                continue
            c = xi * yj
            for k, v in entry.items():
                new = out.get(k, _ZERO) + c * v
                if new == 0:
                    out.pop(k, None)
                else:
                    out[k] = new
    return out


def _labelled(A: SuperAlgebra, vec: Vec) -> dict[str, Fraction]:
    return {A.label(k): vec[k] for k in sorted(vec)}


def check_leibniz(A: SuperAlgebra) -> ViolationReport:
    """Ungraded Leibniz identity over all basis triples of an even algebra.

    Raises ValueError when A has odd basis vectors; use check_leibniz_super
    for graded algebras.
    """
    if not A.is_purely_even():
        raise ValueError("check_leibniz requires a purely even algebra")
    table = A._table
    bad = []
    units = [{i: Fraction(1)} for i in range(A.dim)]
    for x in range(A.dim):
        for y in range(A.dim):
            for z in range(A.dim):
                lhs = _raw_bracket(table, units[x], table.get((y, z), {}))
                t1 = _raw_bracket(table, table.get((x, y), {}), units[z])
                t2 = _raw_bracket(table, table.get((x, z), {}), units[y])
                residual = _vadd(_vadd(lhs, t1, Fraction(-1)), t2)
                if residual:
                    bad.append(Violation(
                        "leibniz", (A.label(x), A.label(y), A.label(z)),
                        _labelled(A, residual)))
    return ViolationReport(tuple(bad))


def check_leibniz_super(A: SuperAlgebra) -> ViolationReport:
    """Graded Leibniz identity over all basis triples.

    For y, z of parities b, c the identity reads
    [x,[y,z]] = [[x,y],z] - (-1)^{bc} [[x,z],y]; the sign flips exactly when
    y and z are both odd.
    """
    table = A._table
    parities = [int(b.parity) for b in A.basis]
    bad = []
    units = [{i: Fraction(1)} for i in range(A.dim)]
    for x in range(A.dim):
        for y in range(A.dim):
            for z in range(A.dim):
                sign = Fraction(-1) if parities[y] and parities[z] else Fraction(1)
                lhs = _raw_bracket(table, units[x], table.get((y, z), {}))
                t1 = _raw_bracket(table, table.get((x, y), {}), units[z])
                t2 = _raw_bracket(table, table.get((x, z), {}), units[y])
                residual = _vadd(_vadd(lhs, t1, Fraction(-1)), t2, sign)
                if residual:
                    bad.append(Violation(
                        "leibniz-super", (A.label(x), A.label(y), A.label(z)),
                        _labelled(A, residual)))
    return ViolationReport(tuple(bad))


def check_graded_antisymmetry(A: SuperAlgebra) -> ViolationReport:
    """Reports pairs with [x,y] + (-1)^{|x||y|}[y,x] != 0.

    An empty report combined with an empty check_leibniz_super report means
    A is a Lie superalgebra (the graded Jacobi identity follows).
    """
    bad = []
    for i in range(A.dim):
        for j in range(A.dim):
            sign = Fraction(-1) if A.parity(i) and A.parity(j) else Fraction(1)
            residual = _vadd(A.bracket_indices(i, j),
                             A.bracket_indices(j, i), sign)
            if residual:
                bad.append(Violation(
                    "graded-antisymmetry", (A.label(i), A.label(j)),
                    _labelled(A, residual)))
    return ViolationReport(tuple(bad))


# ---------------------------------------------------------------------------
# bimodules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BimoduleSpec:
    """Left/right action pair of an even Lie algebra on a module.

    ``right[k]`` is the matrix of m -> [m, b_k] and ``left[k]`` the matrix of
    m -> [b_k, m] in the module basis ``odd_labels`` (column j holds the
    image of the j-th module vector).  The axioms checked by
    ``check_bimodule_axioms`` are, for module m and even x, y:

        [m,[x,y]] = [[m,x],y] - [[m,y],x]
        [x,[m,y]] = [[x,m],y] - [[x,y],m]
        [x,[y,m]] = [[x,y],m] - [[x,m],y]
    """

    even: SuperAlgebra
    odd_labels: tuple[str, ...]
    right: tuple[Matrix, ...]
    left: tuple[Matrix, ...]

    def __post_init__(self):
        if not self.even.is_purely_even():
            raise ValueError("the acting algebra must be purely even")
        d = len(self.odd_labels)
        if len(set(self.odd_labels)) != d:
            raise ValueError("duplicate module labels")
        if len(self.right) != self.even.dim or len(self.left) != self.even.dim:
            raise ValueError("need one action matrix per even basis vector")
        for mat in (*self.right, *self.left):
            if mat.nrows != d or mat.ncols != d:
                raise ValueError("action matrices must be square of module dim")

    @property
    def module_dim(self) -> int:
        return len(self.odd_labels)

    def act_right(self, k: int, vec: Vec) -> Vec:
        return self.right[k].apply_sparse(vec)

    def act_left(self, k: int, vec: Vec) -> Vec:
        return self.left[k].apply_sparse(vec)

    def _act_even_element(self, mats: tuple[Matrix, ...], coeffs: Vec,
                          vec: Vec) -> Vec:
        out: Vec = {}
        for k, c in coeffs.items():
            out = _vadd(out, mats[k].apply_sparse(vec), c)
        return out


def check_bimodule_axioms(spec: BimoduleSpec) -> ViolationReport:
    """Exhaustively verify the three bimodule identities on basis triples.

    Raises ValueError when the acting algebra is not a Leibniz algebra,
    since the axioms only make sense over one.
    """
    even_report = check_leibniz(spec.even)
    if not even_report.ok:
        raise ValueError("acting algebra is not a Leibniz algebra:\n"
                         + even_report.describe(limit=3))
    A = spec.even
    dim = spec.module_dim
    bad = []
    labels = spec.odd_labels
    rho = spec.right
    lam = spec.left
    for m in range(dim):
        unit: Vec = {m: Fraction(1)}
        for x in range(A.dim):
            rx = rho[x].apply_sparse(unit)
            lx = lam[x].apply_sparse(unit)
            for y in range(A.dim):
                xy = A.bracket_indices(x, y)
                triple = (labels[m], A.label(x), A.label(y))
                # [m,[x,y]] = [[m,x],y] - [[m,y],x]
                res = _vadd(spec._act_even_element(rho, xy, unit),
                            rho[y].apply_sparse(rx), Fraction(-1))
                res = _vadd(res, rho[x].apply_sparse(rho[y].apply_sparse(unit)))
                if res:
                    bad.append(Violation("bimodule-1", triple,
                                         _module_labels(spec, res)))
                # [x,[m,y]] = [[x,m],y] - [[x,y],m]
                res = _vadd(lam[x].apply_sparse(rho[y].apply_sparse(unit)),
                            rho[y].apply_sparse(lx), Fraction(-1))
                res = _vadd(res, spec._act_even_element(lam, xy, unit))
                if res:
                    bad.append(Violation("bimodule-2", triple,
                                         _module_labels(spec, res)))
                # [x,[y,m]] = [[x,y],m] - [[x,m],y]
                res = _vadd(lam[x].apply_sparse(lam[y].apply_sparse(unit)),
                            spec._act_even_element(lam, xy, unit), Fraction(-1))
                res = _vadd(res, rho[y].apply_sparse(lx))
                if res:
                    bad.append(Violation("bimodule-3", triple,
                                         _module_labels(spec, res)))
    return ViolationReport(tuple(bad))


def _module_labels(spec: BimoduleSpec, vec: Vec) -> dict[str, Fraction]:
    return {spec.odd_labels[k]: vec[k] for k in sorted(vec)}


# ---------------------------------------------------------------------------
# annihilators
# ---------------------------------------------------------------------------


def right_annihilator(A: SuperAlgebra) -> list[Element]:
    """Canonical basis of R(A) = {z : [x, z] = 0 for all x}.

    Computed exactly as the joint kernel of the operators z -> [b_i, z]
    stacked into one matrix; the basis is the canonical reduced echelon
    nullspace basis.
    """
    space = RowSpace(A.dim)
    for i in range(A.dim):
        # rows of the matrix of z -> [b_i, z]
        rows: dict[int, Vec] = {}
        for j in range(A.dim):
            for k, v in A.bracket_indices(i, j).items():
                rows.setdefault(k, {})[j] = v
        for row in rows.values():
            space.add(row)
    return [Element({k: v for k, v in enumerate(vec) if v != 0})
            for vec in space.nullspace()]


def symmetrized_products_in_annihilator(A: SuperAlgebra) -> ViolationReport:
    """Check that every [x,y] + (-1)^{|x||y|}[y,x] lies in span R(A).

    This is a consequence of the graded Leibniz identity, so the input must
    pass check_leibniz_super first (ValueError otherwise).  An empty report
    confirms the containment for all basis pairs.
    """
    super_report = check_leibniz_super(A)
    if not super_report.ok:
        raise ValueError("not a Leibniz superalgebra:\n"
                         + super_report.describe(limit=3))
    span = RowSpace(A.dim)
    for elem in right_annihilator(A):
        span.add(dict(elem.coeffs))
    bad = []
    for i in range(A.dim):
        for j in range(A.dim):
            sign = Fraction(-1) if A.parity(i) and A.parity(j) else Fraction(1)
            s = _vadd(A.bracket_indices(i, j), A.bracket_indices(j, i), sign)
            if s and not span.contains(s):
                bad.append(Violation(
                    "symmetrized-product-in-annihilator",
                    (A.label(i), A.label(j)), _labelled(A, s)))
    return ViolationReport(tuple(bad))
