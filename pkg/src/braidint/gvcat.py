"""
The rigid braided category of Z/n-graded finite-dimensional vector spaces over
Q(zeta_n), with braiding v_i (x) w_j -> q^(ij) w_j (x) v_i.

Every object carries one ordered basis, recorded as the degree of each basis
vector (its "global rank" order). A tensor product orders pairs lexicographically
by (rank in the left factor, rank in the right factor). Lexicographic order over
flattened factors makes the monoidal structure strictly associative; when the left
factor has its basis sorted by degree, the order within each degree component is
"left degree ascending, then left index, then right index".

Morphisms are sparse matrices indexed by global ranks (rows = target). They are
degree-preserving by construction, and per-degree blocks are available as views.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .scalar import FieldElement, one, zero, zeta_power


class ShapeMismatch(ValueError):
    """Source/target objects of composed or combined morphisms disagree."""


class ParamMismatch(ValueError):
    """Objects from categories with different (n, e)."""


class NotEndomorphism(ValueError):
    pass


class NotInvertibleObject(ValueError):
    pass


class NotFactorizable(ValueError):
    pass


class NotInvertible(ValueError):
    """A morphism that was required to be an isomorphism is singular."""


@dataclasses.dataclass(frozen=True)
class CategoryParams:
    """
    Cyclotomic order n and the exponent e of q = zeta_n^e.

    ``mirrored`` selects the mirror-braided category; it only affects which
    braiding the helpers below default to, never stored morphism data.
    """

    n: int
    e: int = 1
    mirrored: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if math.gcd(self.e, self.n) != 1:
            raise ValueError(f"q = zeta^{self.e} is not primitive for n = {self.n}")
        object.__setattr__(self, "e", self.e % self.n if self.n > 1 else 0)

    @property
    def q(self) -> FieldElement:
        return zeta_power(self.n, self.e)

    def q_power(self, k: int) -> FieldElement:
        return zeta_power(self.n, self.e * k)

    def mirror(self) -> "CategoryParams":
        return dataclasses.replace(self, mirrored=not self.mirrored)

    def same_category(self, other: "CategoryParams") -> bool:
        return self.n == other.n and self.e == other.e

    def scalar(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        return FieldElement.from_int(self.n, value)


class GradedObject:
    """
    A graded vector space with an ordered basis; ``degrees[r]`` is the degree of
    basis vector r. Equality compares the category and the degree sequence.
    """

    __slots__ = ("params", "degrees", "dims", "local_index", "by_degree", "_hash")

    def __init__(self, params: CategoryParams, dims: Mapping[int, int] | Sequence[int] | None = None,
                 *, degrees: Sequence[int] | None = None):
        n = params.n
        if degrees is None:
            if dims is None:
                dims = {}
            if not isinstance(dims, Mapping):
                dims = dict(enumerate(dims))
            seq: list[int] = []
            total = {}
            for k, v in dims.items():
                if int(v) < 0:
                    raise ValueError(f"negative dimension {v} at degree {k}")
                total[int(k) % n] = total.get(int(k) % n, 0) + int(v)
            for d in range(n):
                seq.extend([d] * total.get(d, 0))
            degrees = seq
        self.params = CategoryParams(params.n, params.e)
        self.degrees = tuple(int(d) % n for d in degrees)
        counts = [0] * n
        local = []
        by_degree: list[list[int]] = [[] for _ in range(n)]
        for r, d in enumerate(self.degrees):
            local.append(counts[d])
            counts[d] += 1
            by_degree[d].append(r)
        self.dims = tuple(counts)
        self.local_index = tuple(local)
        self.by_degree = tuple(tuple(b) for b in by_degree)
        self._hash = None

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def total_dim(self) -> int:
        return len(self.degrees)

    def dim(self, d: int) -> int:
        return self.dims[d % self.n]

    def dims_map(self) -> dict[int, int]:
        return {d: k for d, k in enumerate(self.dims) if k}

    def is_sorted(self) -> bool:
        return list(self.degrees) == sorted(self.degrees)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradedObject) and self.params.same_category(other.params)
                and self.degrees == other.degrees)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.params.n, self.params.e, self.degrees))
        return self._hash

    def __repr__(self) -> str:
        if self.is_sorted():
            return f"GradedObject(n={self.n}, dims={self.dims_map()})"
        return f"GradedObject(n={self.n}, degrees={list(self.degrees)})"

    def __matmul__(self, other: "GradedObject") -> "GradedObject":
        return tensor(self, other)

    def to_json(self) -> dict:
        out = {"n": self.params.n, "e": self.params.e,
               "dims": {str(d): k for d, k in enumerate(self.dims) if k}}
        if not self.is_sorted():
            out["degrees"] = list(self.degrees)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "GradedObject":
        params = CategoryParams(int(data["n"]), int(data.get("e", 1)))
        if "degrees" in data:
            obj = cls(params, degrees=[int(d) for d in data["degrees"]])
            dims = {int(k): int(v) for k, v in data.get("dims", {}).items()}
            if dims and obj.dims_map() != {k % params.n: v for k, v in dims.items() if v}:
                raise ValueError("'degrees' disagrees with 'dims'")
            return obj
        return cls(params, {int(k): int(v) for k, v in data.get("dims", {}).items()})


def unit_object(params: CategoryParams) -> GradedObject:
    return GradedObject(params, degrees=[0])


def zero_object(params: CategoryParams) -> GradedObject:
    return GradedObject(params, degrees=[])


Rows = dict  # row rank -> {col rank: FieldElement}


class Morphism:
    """
    A degree-preserving linear map, stored sparsely by global ranks:
    ``rows[r][c]`` is the coefficient of target basis vector r in the image of
    source basis vector c. Zero entries are never stored.
    """

    __slots__ = ("source", "target", "rows")

    def __init__(self, source: GradedObject, target: GradedObject, rows: Mapping[int, Mapping[int, FieldElement]],
                 *, check: bool = True):
        self.source = source
        self.target = target
        if check:
            if not source.params.same_category(target.params):
                raise ParamMismatch("source and target live in different categories")
            clean: dict[int, dict[int, FieldElement]] = {}
            n = source.n
            for r, row in rows.items():
                kept = {}
                for c, v in row.items():
                    v = source.params.scalar(v)
                    if v.n != n:
                        raise ParamMismatch(f"coefficient from Q(zeta_{v.n}) in a morphism over n={n}")
                    if v.is_zero():
                        continue
                    if not (0 <= r < target.total_dim and 0 <= c < source.total_dim):
                        raise ShapeMismatch(f"entry ({r}, {c}) outside {target.total_dim}x{source.total_dim}")
                    if target.degrees[r] != source.degrees[c]:
                        raise ShapeMismatch(f"entry ({r}, {c}) joins degrees {source.degrees[c]} -> {target.degrees[r]}")
                    kept[c] = v
                if kept:
                    clean[r] = kept
            rows = clean
        self.rows = rows

    # views

    def entry(self, r: int, c: int) -> FieldElement:
        return self.rows.get(r, {}).get(c, zero(self.source.n))

    def entries(self) -> Iterable[tuple[int, int, FieldElement]]:
        for r, row in self.rows.items():
            for c, v in row.items():
                yield r, c, v

    def block(self, d: int) -> list[list[FieldElement]]:
        """Dense matrix of the degree-d component, shape target.dims[d] x source.dims[d]."""
        rows_d = self.target.by_degree[d % self.source.n]
        cols_d = self.source.by_degree[d % self.source.n]
        z = zero(self.source.n)
        return [[self.rows.get(r, {}).get(c, z) for c in cols_d] for r in rows_d]

    def column(self, c: int) -> dict[int, FieldElement]:
        return {r: row[c] for r, row in self.rows.items() if c in row}

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other) -> bool:
        return (isinstance(other, Morphism) and self.source == other.source
                and self.target == other.target and self.rows == other.rows)

    def __hash__(self):
        return hash((self.source, self.target, len(self.rows)))

    def __repr__(self) -> str:
        nnz = sum(len(r) for r in self.rows.values())
        return f"Morphism({self.source!r} -> {self.target!r}, nnz={nnz})"

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def __add__(self, other: "Morphism") -> "Morphism":
        return add(self, other)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return add(self, scale(-1, other))

    def __neg__(self) -> "Morphism":
        return scale(-1, self)

    def __rmul__(self, c) -> "Morphism":
        return scale(c, self)

    def first_difference(self, other: "Morphism") -> tuple[int, int, int, FieldElement, FieldElement] | None:
        """(degree, row, col, self value, other value) at the first differing entry, or None."""
        if self.source != other.source or self.target != other.target:
            raise ShapeMismatch("comparing morphisms of different shape")
        keys = set()
        for r in set(self.rows) | set(other.rows):
            a, b = self.rows.get(r, {}), other.rows.get(r, {})
            for c in set(a) | set(b):
                if a.get(c) != b.get(c):
                    keys.add((r, c))
        if not keys:
            return None
        r, c = min(keys)
        z = zero(self.source.n)
        d = self.source.degrees[c]
        return (d, self.target.local_index[r], self.source.local_index[c],
                self.rows.get(r, {}).get(c, z), other.rows.get(r, {}).get(c, z))

    def to_json(self) -> dict:
        blocks = {}
        for d in range(self.source.n):
            if self.source.dims[d] or self.target.dims[d]:
                blocks[str(d)] = [[v.to_json()["coeffs"] for v in row] for row in self.block(d)]
        return {"source": self.source.to_json(), "target": self.target.to_json(), "blocks": blocks}

    @classmethod
    def from_json(cls, data: dict) -> "Morphism":
        source = GradedObject.from_json(data["source"])
        target = GradedObject.from_json(data["target"])
        n = source.n
        blocks = data.get("blocks", {})
        rows: dict[int, dict[int, FieldElement]] = {}
        for key, mat in blocks.items():
            d = int(key) % n
            rows_d, cols_d = target.by_degree[d], source.by_degree[d]
            if len(mat) != len(rows_d) or any(len(row) != len(cols_d) for row in mat):
                raise ShapeMismatch(f"block {key}: expected {len(rows_d)}x{len(cols_d)}")
            for i, row in enumerate(mat):
                for j, coeffs in enumerate(row):
                    v = FieldElement(n, [Fraction(c) for c in coeffs])
                    if v:
                        rows.setdefault(rows_d[i], {})[cols_d[j]] = v
        return cls(source, target, rows)


# construction helpers

def identity(X: GradedObject) -> Morphism:
    u = one(X.n)
    return Morphism(X, X, {r: {r: u} for r in range(X.total_dim)}, check=False)


def zero_morphism(X: GradedObject, Y: GradedObject) -> Morphism:
    return Morphism(X, Y, {}, check=False)


def from_columns(source: GradedObject, target: GradedObject,
                 image: Callable[[int], Mapping[int, object]]) -> Morphism:
    """Morphism whose source basis vector c maps to sum_r image(c)[r] * target_r."""
    rows: dict[int, dict[int, object]] = {}
    for c in range(source.total_dim):
        for r, v in image(c).items():
            rows.setdefault(r, {})[c] = v
    return Morphism(source, target, rows)


def from_blocks(source: GradedObject, target: GradedObject, blocks: Mapping[int, Sequence[Sequence[object]]]) -> Morphism:
    """Morphism from dense per-degree matrices (local indices)."""
    rows: dict[int, dict[int, object]] = {}
    for d, mat in blocks.items():
        rows_d, cols_d = target.by_degree[d % source.n], source.by_degree[d % source.n]
        if len(mat) != len(rows_d) or any(len(row) != len(cols_d) for row in mat):
            raise ShapeMismatch(f"block {d}: expected {len(rows_d)}x{len(cols_d)}")
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                rows.setdefault(rows_d[i], {})[cols_d[j]] = v
    return Morphism(source, target, rows)


def scale(c, f: Morphism) -> Morphism:
    c = f.source.params.scalar(c)
    if c.is_zero():
        return zero_morphism(f.source, f.target)
    if c == 1:
        return f
    return Morphism(f.source, f.target, {r: {k: c * v for k, v in row.items()} for r, row in f.rows.items()},
                    check=False)


def add(f: Morphism, g: Morphism) -> Morphism:
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("adding morphisms of different shape")
    rows = {r: dict(row) for r, row in f.rows.items()}
    for r, row in g.rows.items():
        acc = rows.setdefault(r, {})
        for c, v in row.items():
            w = acc.get(c)
            s = v if w is None else w + v
            if s.is_zero():
                acc.pop(c, None)
            else:
                acc[c] = s
        if not acc:
            del rows[r]
    return Morphism(f.source, f.target, rows, check=False)


def sum_morphisms(fs: Iterable[Morphism], source: GradedObject, target: GradedObject) -> Morphism:
    total = zero_morphism(source, target)
    for f in fs:
        total = add(total, f)
    return total


def compose(g: Morphism, f: Morphism, *more: Morphism) -> Morphism:
    """g o f (o more...), applied right to left."""
    if more:
        return compose(g, compose(f, *more))
    if f.target != g.source:
        raise ShapeMismatch(f"cannot compose {g!r} after {f!r}")
    frows = f.rows
    out: dict[int, dict[int, FieldElement]] = {}
    for r, grow in g.rows.items():
        acc: dict[int, FieldElement] = {}
        for k, gv in grow.items():
            frow = frows.get(k)
            if not frow:
                continue
            unit_g = gv.den == 1 and gv.nums[0] == 1 and not any(gv.nums[1:])
            for c, fv in frow.items():
                term = fv if unit_g else gv * fv
                old = acc.get(c)
                acc[c] = term if old is None else old + term
        acc = {c: v for c, v in acc.items() if not v.is_zero()}
        if acc:
            out[r] = acc
    return Morphism(f.source, g.target, out, check=False)


def chain(*fs: Morphism) -> Morphism:
    """Compose a sequence applied left to right: chain(f1, f2, f3) = f3 o f2 o f1."""
    result = fs[0]
    for f in fs[1:]:
        result = compose(f, result)
    return result


def _tensor_objects(X: GradedObject, Y: GradedObject) -> GradedObject:
    if not X.params.same_category(Y.params):
        raise ParamMismatch("tensoring objects over different categories")
    n = X.n
    return GradedObject(X.params, degrees=[(a + b) % n for a in X.degrees for b in Y.degrees])


@functools.lru_cache(maxsize=4096)
def _tensor_objects_cached(X: GradedObject, Y: GradedObject) -> GradedObject:
    return _tensor_objects(X, Y)


def _tensor_morphisms(f: Morphism, g: Morphism) -> Morphism:
    if not f.source.params.same_category(g.source.params):
        raise ParamMismatch("tensoring morphisms over different categories")
    source = _tensor_objects_cached(f.source, g.source)
    target = _tensor_objects_cached(f.target, g.target)
    ts, tt = g.source.total_dim, g.target.total_dim
    out: dict[int, dict[int, FieldElement]] = {}
    g_items = [(r2, list(row2.items())) for r2, row2 in g.rows.items()]
    for r1, row1 in f.rows.items():
        for c1, v1 in row1.items():
            unit1 = v1.den == 1 and v1.nums[0] == 1 and not any(v1.nums[1:])
            base_c = c1 * ts
            for r2, items in g_items:
                row = out.setdefault(r1 * tt + r2, {})
                for c2, v2 in items:
                    row[base_c + c2] = v2 if unit1 else v1 * v2
    return Morphism(source, target, out, check=False)


def tensor(*items):
    """Tensor product of objects or of morphisms (left to right)."""
    if not items:
        raise ValueError("tensor needs at least one argument")
    result = items[0]
    for item in items[1:]:
        if isinstance(result, GradedObject) and isinstance(item, GradedObject):
            result = _tensor_objects_cached(result, item)
        elif isinstance(result, Morphism) and isinstance(item, Morphism):
            result = _tensor_morphisms(result, item)
        else:
            raise TypeError("tensor arguments must be all objects or all morphisms")
    return result


def tensor_index(Y: GradedObject, left_rank: int, right_rank: int) -> int:
    """Global rank of x (x) y in X (x) Y, given the ranks of x in X and y in Y."""
    return left_rank * Y.total_dim + right_rank


def equivalence(X: GradedObject, Y: GradedObject) -> Morphism:
    """The identity matrix viewed as a map X -> Y between objects with equal degree sequences."""
    if X.degrees != Y.degrees or not X.params.same_category(Y.params):
        raise ShapeMismatch("objects are not identified by their bases")
    return Morphism(X, Y, identity(X).rows, check=False)


def braiding(X: GradedObject, Y: GradedObject, inverse: bool = False, mirrored: bool = False) -> Morphism:
    """
    The braiding X (x) Y -> Y (x) X.

    inverse=False gives Psi_{X,Y}: x (x) y -> q^(ij) y (x) x. inverse=True gives
    the inverse of Psi_{Y,X} (also a map X (x) Y -> Y (x) X), with factor q^(-ij).
    In the mirrored category the two roles swap.
    """
    if not X.params.same_category(Y.params):
        raise ParamMismatch("braiding objects over different categories")
    sign = -1 if inverse != mirrored else 1
    params = X.params
    source = tensor(X, Y)
    target = tensor(Y, X)
    tx, ty = X.total_dim, Y.total_dim
    rows = {}
    for gx, dx in enumerate(X.degrees):
        for gy, dy in enumerate(Y.degrees):
            rows[gy * tx + gx] = {gx * ty + gy: params.q_power(sign * dx * dy)}
    return Morphism(source, target, rows, check=False)


# duality

@dataclasses.dataclass(frozen=True)
class DualData:
    """
    Rigidity data for one side.

    side "left":  X^v with eval: X (x) X^v -> 1 and coev: 1 -> X^v (x) X.
    side "right": ^vX with eval: ^vX (x) X -> 1 and coev: 1 -> X (x) ^vX.
    """

    dual_object: GradedObject
    eval: Morphism
    coev: Morphism
    side: str
    base: GradedObject


def dual_object(X: GradedObject) -> GradedObject:
    """X^v and ^vX: degrees negated, same basis order (the dual basis)."""
    return GradedObject(X.params, degrees=[(-d) % X.n for d in X.degrees])


def dual_data(X: GradedObject, side: str = "left") -> DualData:
    D = dual_object(X)
    unit = unit_object(X.params)
    t = X.total_dim
    u = one(X.n)
    if side == "left":
        ev = Morphism(tensor(X, D), unit, {0: {r * t + r: u for r in range(t)}} if t else {}, check=False)
        coev = Morphism(unit, tensor(D, X), {r * t + r: {0: u} for r in range(t)}, check=False)
    elif side == "right":
        ev = Morphism(tensor(D, X), unit, {0: {r * t + r: u for r in range(t)}} if t else {}, check=False)
        coev = Morphism(unit, tensor(X, D), {r * t + r: {0: u} for r in range(t)}, check=False)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return DualData(D, ev, coev, side, X)


def ev(X: GradedObject) -> Morphism:
    """X (x) X^v -> 1"""
    return dual_data(X, "left").eval


def coev(X: GradedObject) -> Morphism:
    """1 -> X^v (x) X"""
    return dual_data(X, "left").coev


def ev_right(X: GradedObject) -> Morphism:
    """^vX (x) X -> 1"""
    return dual_data(X, "right").eval


def coev_right(X: GradedObject) -> Morphism:
    """1 -> X (x) ^vX"""
    return dual_data(X, "right").coev


def zigzags(data: DualData) -> list[tuple[Morphism, Morphism]]:
    """The two rigidity composites for this side, each paired with the identity it must equal."""
    X, D = data.base, data.dual_object
    iX, iD = identity(X), identity(D)
    if data.side == "left":
        first = chain(tensor(iX, data.coev), tensor(data.eval, iX))
        second = chain(tensor(data.coev, iD), tensor(iD, data.eval))
    else:
        first = chain(tensor(data.coev, iX), tensor(iX, data.eval))
        second = chain(tensor(iD, data.coev), tensor(data.eval, iD))
    return [(first, iX), (second, iD)]


def transpose(f: Morphism, side: str = "left") -> Morphism:
    """
    f^t: Y^v -> X^v (side "left") or ^t f: ^vY -> ^vX (side "right"), evaluated as
    the composite of coevaluation, f, and evaluation.
    """
    X, Y = f.source, f.target
    if side == "left":
        dX, dY = dual_data(X, "left"), dual_data(Y, "left")
        return chain(tensor(dX.coev, identity(dY.dual_object)),
                     tensor(identity(dX.dual_object), f, identity(dY.dual_object)),
                     tensor(identity(dX.dual_object), dY.eval))
    dX, dY = dual_data(X, "right"), dual_data(Y, "right")
    return chain(tensor(identity(dY.dual_object), dX.coev),
                 tensor(identity(dY.dual_object), f, identity(dX.dual_object)),
                 tensor(dY.eval, identity(dX.dual_object)))


def trace8(f: Morphism, mirrored: bool = False) -> FieldElement:
    """ev' o Psi_{X, ^vX} o (f (x) 1) o coev'"""
    X = f.source
    if f.target != X:
        raise NotEndomorphism("trace of a non-endomorphism")
    dd = dual_data(X, "right")
    m = chain(dd.coev, tensor(f, identity(dd.dual_object)),
              braiding(X, dd.dual_object, mirrored=mirrored), dd.eval)
    return m.entry(0, 0)


def dim8(X: GradedObject, mirrored: bool = False) -> FieldElement:
    return trace8(identity(X), mirrored)


def u0_minus2(X: GradedObject, mirrored: bool = False) -> Morphism:
    """
    The natural automorphism with two inverse crossings: a strand X is crossed
    under two coevaluation loops and closed by evaluations.
    """
    D = dual_object(X)
    iX, iD = identity(X), identity(D)
    coev_r = coev_right(X)        # 1 -> X (x) D, legs A, B
    coev_l = coev(X)              # 1 -> D (x) X, legs C, D'
    # X -> X (x) A (x) B
    step1 = tensor(iX, coev_r)
    # -> C (x) D' (x) X (x) A (x) B
    step2 = tensor(coev_l, iX, iX, iD)
    # inverse crossing of X with A
    step3 = tensor(iD, iX, braiding(X, X, inverse=True, mirrored=mirrored), iD)
    # inverse crossing of D' with A
    step4 = tensor(iD, braiding(X, X, inverse=True, mirrored=mirrored), iX, iD)
    # evaluate X against B, then C against A
    step5 = tensor(iD, iX, iX, ev(X))
    step6 = tensor(ev_right(X), iX)
    return chain(step1, step2, step3, step4, step5, step6)


def is_invertible_object(K: GradedObject) -> bool:
    return K.total_dim == 1


def solve_tensor_factor(g: Morphism, K: GradedObject, X: GradedObject | None = None,
                        Y: GradedObject | None = None) -> Morphism:
    """The unique f: X -> Y with f (x) id_K = g, for an invertible object K."""
    if not is_invertible_object(K):
        raise NotInvertibleObject(f"object of total dimension {K.total_dim} is not invertible")
    if X is None or Y is None:
        X = X or GradedObject(K.params, degrees=[(d - K.degrees[0]) % K.n for d in g.source.degrees])
        Y = Y or GradedObject(K.params, degrees=[(d - K.degrees[0]) % K.n for d in g.target.degrees])
    if tensor(X, K) != g.source or tensor(Y, K) != g.target:
        raise NotFactorizable("g does not have the shape X (x) K -> Y (x) K")
    # K is one-dimensional, so X (x) K has the same ranks as X
    f = Morphism(X, Y, g.rows)
    if tensor(f, identity(K)) != g:
        raise NotFactorizable("g is not of the form f (x) id_K")
    return f


# exact linear algebra on degree blocks

def _rref(mat: list[list[FieldElement]], ncols: int) -> tuple[list[list[FieldElement]], list[int]]:
    """Reduced row echelon form; pivots are the first nonzero entries scanning columns left to right."""
    m = [list(row) for row in mat]
    pivots: list[int] = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(f: Morphism) -> tuple[int, ...]:
    out = []
    for d in range(f.source.n):
        block = f.block(d)
        out.append(len(_rref(block, f.source.dims[d])[1]) if block else 0)
    return tuple(out)


def rank_factorization(f: Morphism) -> tuple[GradedObject, Morphism, Morphism]:
    """
    f = inj o proj with proj epi and inj mono, per degree: inj holds the pivot
    columns of f, proj the nonzero rows of its reduced row echelon form.
    """
    X, Y = f.source, f.target
    params = X.params
    mid_dims = {}
    blocks_inj, blocks_proj = {}, {}
    for d in range(X.n):
        block = f.block(d)
        ncols = X.dims[d]
        if not block or not ncols:
            mid_dims[d] = 0
            continue
        reduced, pivots = _rref(block, ncols)
        mid_dims[d] = len(pivots)
        blocks_inj[d] = [[row[c] for c in pivots] for row in block]
        blocks_proj[d] = reduced[:len(pivots)]
    M = GradedObject(params, mid_dims)
    inj = from_blocks(M, Y, {d: b for d, b in blocks_inj.items() if mid_dims[d]})
    proj = from_blocks(X, M, {d: b for d, b in blocks_proj.items() if mid_dims[d]})
    return M, inj, proj


def invert(f: Morphism) -> Morphism:
    X, Y = f.source, f.target
    if X.dims != Y.dims:
        raise NotInvertible("source and target dimensions differ")
    blocks = {}
    n = X.n
    for d in range(n):
        k = X.dims[d]
        if not k:
            continue
        block = f.block(d)
        aug = [row + [one(n) if i == j else zero(n) for j in range(k)] for i, row in enumerate(block)]
        reduced, pivots = _rref(aug, k)
        if pivots != list(range(k)):
            raise NotInvertible(f"degree {d} block is singular")
        blocks[d] = [row[k:] for row in reduced]
    return from_blocks(Y, X, blocks)


def is_invertible(f: Morphism) -> bool:
    try:
        invert(f)
    except NotInvertible:
        return False
    return True


def nullspace(f: Morphism) -> Morphism:
    """A morphism N -> source whose image is the kernel of f (columns of a kernel basis)."""
    X = f.source
    n = X.n
    blocks = {}
    dims = {}
    for d in range(n):
        k = X.dims[d]
        if not k:
            continue
        block = f.block(d) or []
        reduced, pivots = _rref(block, k) if block else ([], [])
        free = [c for c in range(k) if c not in pivots]
        dims[d] = len(free)
        cols = []
        for fc in free:
            vec = [zero(n)] * k
            vec[fc] = one(n)
            for i, pc in enumerate(pivots):
                vec[pc] = -reduced[i][fc]
            cols.append(vec)
        blocks[d] = [[cols[j][i] for j in range(len(free))] for i in range(k)]
    N = GradedObject(X.params, dims)
    return from_blocks(N, X, {d: b for d, b in blocks.items() if dims[d]})


def scalar_multiple(f: Morphism, g: Morphism) -> FieldElement | None:
    """The c with f = c * g if one exists (g nonzero), else None."""
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("comparing morphisms of different shape")
    if g.is_zero():
        return zero(f.source.n) if f.is_zero() else None
    r, c, v = next(iter(g.entries()))
    ratio = f.entry(r, c) / v
    return ratio if scale(ratio, g) == f else None
