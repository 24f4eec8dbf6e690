"""
Hopf algebras in the graded category: structure data, exact axiom checking,
opposites, duals and the standard fixtures (Taft-type algebra, group algebras,
Sweedler's four-dimensional algebra).
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Mapping

from .gvcat import (
    CategoryParams,
    GradedObject,
    Morphism,
    ShapeMismatch,
    braiding,
    chain,
    coev,
    coev_right,
    compose,
    dual_object,
    ev,
    ev_right,
    from_columns,
    identity,
    invert,
    tensor,
    transpose,
    unit_object,
)
from .scalar import FieldElement, one


class RelationViolated(AssertionError):
    """An identity that must hold exactly failed; carries the report."""

    def __init__(self, message: str, report: "AxiomReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclasses.dataclass
class Witness:
    relation: str
    degree: int
    row: int
    col: int
    lhs: FieldElement
    rhs: FieldElement

    def to_json(self) -> dict:
        return {"relation": self.relation, "degree": self.degree, "row": self.row, "col": self.col,
                "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}


@dataclasses.dataclass
class AxiomReport:
    """Named pass flags, with the first differing entry recorded for each failure."""

    results: dict[str, bool] = dataclasses.field(default_factory=dict)
    witnesses: list[Witness] = dataclasses.field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def __bool__(self) -> bool:
        return self.passed

    def check(self, name: str, lhs: Morphism, rhs: Morphism) -> bool:
        if lhs.source != rhs.source or lhs.target != rhs.target:
            raise ShapeMismatch(f"{name}: sides have different shapes")
        diff = lhs.first_difference(rhs)
        self.results[name] = diff is None
        if diff is not None:
            d, r, c, a, b = diff
            self.witnesses.append(Witness(name, d, r, c, a, b))
        return diff is None

    def check_flag(self, name: str, ok: bool, lhs=None, rhs=None) -> bool:
        self.results[name] = bool(ok)
        if not ok and lhs is not None:
            self.witnesses.append(Witness(name, 0, 0, 0, lhs, rhs))
        return bool(ok)

    def merge(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        for k, v in other.results.items():
            self.results[prefix + k] = v
        for w in other.witnesses:
            self.witnesses.append(dataclasses.replace(w, relation=prefix + w.relation))
        return self

    def failures(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]

    def raise_if_failed(self, context: str) -> "AxiomReport":
        if not self.passed:
            raise RelationViolated(f"{context}: {', '.join(self.failures())}", self)
        return self

    def to_json(self) -> dict:
        return {"passed": self.passed, "results": dict(sorted(self.results.items())),
                "witnesses": [w.to_json() for w in self.witnesses]}


@dataclasses.dataclass(frozen=True, eq=False)
class HopfAlgebra:
    """
    A Hopf algebra with invertible antipode. ``mirrored`` means the algebra lives
    in the mirror-braided category, so every axiom uses the inverse braiding.
    """

    object: GradedObject
    mul: Morphism
    unit: Morphism
    comul: Morphism
    counit: Morphism
    antipode: Morphism
    antipode_inv: Morphism
    mirrored: bool = False
    name: str = ""

    def __post_init__(self):
        H = self.object
        I = unit_object(H.params)
        HH = tensor(H, H)
        shapes = {"mul": (HH, H), "unit": (I, H), "comul": (H, HH), "counit": (H, I),
                  "antipode": (H, H), "antipode_inv": (H, H)}
        for field, (src, tgt) in shapes.items():
            m = getattr(self, field)
            if m.source != src or m.target != tgt:
                raise ShapeMismatch(f"{field} has shape {m.source!r} -> {m.target!r}")

    @property
    def params(self) -> CategoryParams:
        return self.object.params

    @property
    def id(self) -> Morphism:
        return identity(self.object)

    def psi(self, X: GradedObject | None = None, Y: GradedObject | None = None, inverse: bool = False) -> Morphism:
        """The ambient braiding X (x) Y -> Y (x) X (defaults to H, H)."""
        X = X or self.object
        Y = Y or self.object
        return braiding(X, Y, inverse=inverse, mirrored=self.mirrored)

    def power_mul(self, k: int) -> Morphism:
        """mu^(k): H^(x)k -> H (k >= 1), with mu^(1) = id."""
        m = self.id
        for _ in range(k - 1):
            m = compose(self.mul, tensor(m, self.id))
        return m

    def power_comul(self, k: int) -> Morphism:
        d = self.id
        for _ in range(k - 1):
            d = compose(tensor(d, self.id), self.comul)
        return d

    def antipode_power(self, k: int) -> Morphism:
        base = self.antipode if k >= 0 else self.antipode_inv
        out = self.id
        for _ in range(abs(k)):
            out = compose(base, out)
        return out

    def element(self, coeffs: Mapping[int, object]) -> Morphism:
        """The morphism 1 -> H picking out sum coeffs[r] * basis_r."""
        return from_columns(unit_object(self.params), self.object, lambda c: coeffs)

    def functional(self, coeffs: Mapping[int, object]) -> Morphism:
        """The morphism H -> 1 with basis_r -> coeffs[r]."""
        return from_columns(self.object, unit_object(self.params), lambda c: {0: coeffs[c]} if c in coeffs else {})

    def replace(self, **changes) -> "HopfAlgebra":
        return dataclasses.replace(self, **changes)

    def to_json(self) -> dict:
        return {"object": self.object.to_json(), "mul": self.mul.to_json(), "unit": self.unit.to_json(),
                "comul": self.comul.to_json(), "counit": self.counit.to_json(),
                "antipode": self.antipode.to_json(), "antipode_inv": self.antipode_inv.to_json(),
                "mirrored": self.mirrored}

    @classmethod
    def from_json(cls, data: dict) -> "HopfAlgebra":
        fields = {k: Morphism.from_json(data[k]) for k in
                  ("mul", "unit", "comul", "counit", "antipode", "antipode_inv")}
        return cls(GradedObject.from_json(data["object"]), mirrored=bool(data.get("mirrored", False)), **fields)


def check_hopf(H: HopfAlgebra) -> AxiomReport:
    """Every Hopf algebra axiom, checked exactly in the (possibly mirrored) category."""
    rep = AxiomReport()
    i = H.id
    m, u, d, e, S, Si = H.mul, H.unit, H.comul, H.counit, H.antipode, H.antipode_inv
    I = unit_object(H.params)
    rep.check("associativity", compose(m, tensor(m, i)), compose(m, tensor(i, m)))
    rep.check("left unit", compose(m, tensor(u, i)), i)
    rep.check("right unit", compose(m, tensor(i, u)), i)
    rep.check("coassociativity", compose(tensor(d, i), d), compose(tensor(i, d), d))
    rep.check("left counit", compose(tensor(e, i), d), i)
    rep.check("right counit", compose(tensor(i, e), d), i)
    rep.check("bialgebra", compose(d, m),
              chain(tensor(d, d), tensor(i, H.psi(), i), tensor(m, m)))
    rep.check("counit of unit", compose(e, u), identity(I))
    rep.check("counit multiplicative", compose(e, m), tensor(e, e))
    rep.check("comultiplication of unit", compose(d, u), tensor(u, u))
    rep.check("left antipode", chain(d, tensor(S, i), m), compose(u, e))
    rep.check("right antipode", chain(d, tensor(i, S), m), compose(u, e))
    rep.check("antipode inverse left", compose(S, Si), i)
    rep.check("antipode inverse right", compose(Si, S), i)
    return rep


def opposite(H: HopfAlgebra, variant: str) -> HopfAlgebra:
    """
    H^op (mu o Psi^-1) for variant "op_mul" or H_op (Psi^-1 o Delta) for
    "op_comul"; both live in the mirror category and have antipode S^-1.
    """
    inv = H.psi(inverse=True)
    if variant == "op_mul":
        changes = {"mul": compose(H.mul, inv)}
    elif variant == "op_comul":
        changes = {"comul": compose(inv, H.comul)}
    else:
        raise ValueError(f"variant must be 'op_mul' or 'op_comul', got {variant!r}")
    return H.replace(antipode=H.antipode_inv, antipode_inv=H.antipode, mirrored=not H.mirrored,
                     name=(H.name + "^" + variant) if H.name else "", **changes)


def dual_hopf(H: HopfAlgebra, side: str = "left") -> HopfAlgebra:
    """
    The dual Hopf algebra on H^v (side "left") or ^vH (side "right"), structure
    maps obtained as nested transposes with the evaluation of that side.
    """
    X = H.object
    D = dual_object(X)
    iD, iX = identity(D), identity(X)
    if side == "left":
        # <h, phi psi> = <h_(1), psi> <h_(2), phi>
        mul = chain(tensor(coev(X), iD, iD), tensor(iD, H.comul, iD, iD),
                    tensor(iD, iX, ev(X), iD), tensor(iD, ev(X)))
        comul = chain(tensor(coev(X), iD), tensor(iD, coev(X), iX, iD),
                      tensor(iD, iD, H.mul, iD), tensor(iD, iD, ev(X)))
        unit = transpose(H.counit, "left")
        counit = transpose(H.unit, "left")
        S = transpose(H.antipode, "left")
        Si = transpose(H.antipode_inv, "left")
    elif side == "right":
        mul = chain(tensor(iD, iD, coev_right(X)), tensor(iD, iD, H.comul, iD),
                    tensor(iD, ev_right(X), iX, iD), tensor(ev_right(X), iD))
        comul = chain(tensor(iD, coev_right(X)), tensor(iD, iX, coev_right(X), iD),
                      tensor(iD, H.mul, iD, iD), tensor(ev_right(X), iD, iD))
        unit = transpose(H.counit, "right")
        counit = transpose(H.unit, "right")
        S = transpose(H.antipode, "right")
        Si = transpose(H.antipode_inv, "right")
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    I = unit_object(H.params)
    unit = Morphism(I, D, unit.rows)
    counit = Morphism(D, I, counit.rows)
    return HopfAlgebra(D, mul, unit, comul, counit, S, Si, mirrored=H.mirrored,
                       name=f"dual({H.name})" if H.name else "")


def is_group_like(H: HopfAlgebra, a: Morphism) -> bool:
    return compose(H.comul, a) == tensor(a, a) and compose(H.counit, a) == identity(a.source)


def is_mult_functional(H: HopfAlgebra, alpha: Morphism) -> bool:
    return compose(alpha, H.mul) == tensor(alpha, alpha) and compose(alpha, H.unit) == identity(alpha.target)


# fixtures

def hopf_from_tables(obj: GradedObject,
                     mul: Callable[[int, int], Mapping[int, object]],
                     unit: Mapping[int, object],
                     comul: Callable[[int], Mapping[tuple[int, int], object]],
                     counit: Mapping[int, object],
                     antipode: Callable[[int], Mapping[int, object]],
                     antipode_inv: Callable[[int], Mapping[int, object]] | None = None,
                     mirrored: bool = False, name: str = "") -> HopfAlgebra:
    """Assemble a Hopf algebra from structure constants on the basis of obj."""
    t = obj.total_dim
    I = unit_object(obj.params)
    HH = tensor(obj, obj)
    m = from_columns(HH, obj, lambda c: mul(c // t, c % t))
    u = from_columns(I, obj, lambda c: unit)
    d = from_columns(obj, HH, lambda c: {a * t + b: v for (a, b), v in comul(c).items()})
    e = from_columns(obj, I, lambda c: {0: counit[c]} if c in counit else {})
    S = from_columns(obj, obj, antipode)
    Si = from_columns(obj, obj, antipode_inv) if antipode_inv else invert(S)
    return HopfAlgebra(obj, m, u, d, e, S, Si, mirrored=mirrored, name=name)


def q_binomial(params: CategoryParams, m: int, k: int) -> FieldElement:
    """Gaussian binomial coefficient in q, via the q-Pascal rule."""
    q = params.q
    rows = [[one(params.n)]]
    for r in range(1, m + 1):
        prev = rows[-1]
        row = [one(params.n)]
        for j in range(1, r):
            row.append(prev[j - 1] + q ** j * prev[j])
        row.append(one(params.n))
        rows.append(row)
    return rows[m][k] if 0 <= k <= m else FieldElement.from_int(params.n, 0)


def build_taft(params: CategoryParams) -> HopfAlgebra:
    """
    The truncated polynomial algebra on one generator x of degree 1 with
    x^n = 0, primitive x, in the category with braiding q.
    """
    n = params.n
    H = GradedObject(params, {k: 1 for k in range(n)})
    q = params.q

    def mul(a, b):
        return {a + b: 1} if a + b < n else {}

    def comul(m):
        return {(k, m - k): q_binomial(params, m, k) for k in range(m + 1)}

    def s_scalar(m):
        return (-1) ** m * q ** (m * (m - 1) // 2)

    return hopf_from_tables(H, mul, {0: 1}, comul, {0: 1},
                            lambda m: {m: s_scalar(m)}, lambda m: {m: s_scalar(m).inverse()},
                            name=f"taft(n={n},e={params.e})")


def build_group_algebra(m: int, params: CategoryParams | None = None) -> HopfAlgebra:
    """k[Z/m] in degree 0 (by default in the one-element grading)."""
    params = params or CategoryParams(1)
    H = GradedObject(params, {0: m})
    return hopf_from_tables(H, lambda a, b: {(a + b) % m: 1}, {0: 1},
                            lambda a: {(a, a): 1}, {a: 1 for a in range(m)},
                            lambda a: {(-a) % m: 1}, lambda a: {(-a) % m: 1},
                            name=f"group(Z/{m})")


def _sweedler_index(g: int, x: int) -> int:
    return 2 * x + g


def build_sweedler(params: CategoryParams | None = None) -> HopfAlgebra:
    """
    Sweedler's algebra with basis 1, g, x, gx (ranks 0..3), g^2 = 1, x^2 = 0,
    xg = -gx, Delta x = x (x) 1 + g (x) x, S x = -gx.
    """
    params = params or CategoryParams(1)
    H = GradedObject(params, {0: 4})
    idx = _sweedler_index

    def split(r):
        return r % 2, r // 2

    def mul(r, s):
        a, b = split(r)
        c, e = split(s)
        if b + e > 1:
            return {}
        sign = -1 if (b and c) else 1
        return {idx((a + c) % 2, b + e): sign}

    def comul(r):
        a, b = split(r)
        if b == 0:
            return {(idx(a, 0), idx(a, 0)): 1}
        # Delta(g^a x) = g^a x (x) g^a + g^(a+1) (x) g^a x
        return {(idx(a, 1), idx(a, 0)): 1, (idx((a + 1) % 2, 0), idx(a, 1)): 1}

    def antipode(r):
        a, b = split(r)
        if b == 0:
            return {idx(a, 0): 1}
        # S(x) = -gx and S(gx) = x
        return {idx(1, 1): -1} if a == 0 else {idx(0, 1): 1}

    def antipode_inv(r):
        a, b = split(r)
        if b == 0:
            return {idx(a, 0): 1}
        return {idx(1, 1): 1} if a == 0 else {idx(0, 1): -1}

    return hopf_from_tables(H, mul, {0: 1}, comul, {0: 1, 1: 1}, antipode, antipode_inv, name="sweedler")


def trivial_hopf(params: CategoryParams) -> HopfAlgebra:
    """The unit object with its unique Hopf structure."""
    I = unit_object(params)
    return hopf_from_tables(I, lambda a, b: {0: 1}, {0: 1}, lambda a: {(0, 0): 1}, {0: 1},
                            lambda a: {0: 1}, lambda a: {0: 1}, name="trivial")
