"""Structure-constant containers: products, algebras, modules, reports.

A product on a dim-dimensional space is a tensor c with
e_i * e_j = sum_k c[i][j][k] e_k.  Twist maps are matrices acting on
coordinate columns, so the image of e_i is column i.
"""

import json

from .errors import (
    DuplicateLabel,
    InputError,
    ShapeMismatch,
    UnknownLabel,
)
from .linalg import Matrix
from .scalars import ParamSpace, Scalar


class ProductTensor:
    """One bilinear product, dense storage plus a cached sparse pair map."""

    __slots__ = ("space", "dim", "c", "_pairs")

    def __init__(self, space, dim, c):
        c = tuple(tuple(tuple(row) for row in plane) for plane in c)
        if len(c) != dim or any(
            len(plane) != dim or any(len(row) != dim for row in plane)
            for plane in c
        ):
            raise ShapeMismatch(f"product tensor is not {dim}x{dim}x{dim}")
        for plane in c:
            for row in plane:
                for x in row:
                    if not isinstance(x, Scalar):
                        raise ShapeMismatch("product entries must be Scalars")
        self.space = space
        self.dim = dim
        self.c = c
        self._pairs = None

    @staticmethod
    def from_table(space, dim, table) -> "ProductTensor":
        """Tensor from nested lists whose entries are strings or numbers."""
        return ProductTensor(space, dim, [
            [[space.parse(str(x)) for x in row] for row in plane]
            for plane in table
        ])

    @staticmethod
    def zero(space, dim) -> "ProductTensor":
        z = space.zero
        return ProductTensor(space, dim,
                             [[[z] * dim for _ in range(dim)] for _ in range(dim)])

    def pairs(self):
        """{(i, j): [(k, coeff), ...]} with zero rows omitted."""
        if self._pairs is None:
            m = {}
            for i, plane in enumerate(self.c):
                for j, row in enumerate(plane):
                    entries = [(k, x) for k, x in enumerate(row) if not x.is_zero()]
                    if entries:
                        m[(i, j)] = entries
            self._pairs = m
        return self._pairs

    def eval_sparse(self, u: dict, v: dict) -> dict:
        """Product of two sparse coordinate vectors."""
        pairs = self.pairs()
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                entries = pairs.get((i, j))
                if not entries:
                    continue
                ab = a * b
                if ab.is_zero():
                    continue
                for k, ck in entries:
                    s = out.get(k)
                    s = ck * ab if s is None else s + ck * ab
                    if s.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    def eval_basis(self, i, j) -> dict:
        """e_i * e_j as a sparse vector."""
        return dict(self.pairs().get((i, j), ()))

    def map_entries(self, fn) -> "ProductTensor":
        return ProductTensor(self.space, self.dim, [
            [[fn(x) for x in row] for row in plane] for plane in self.c
        ])

    def __eq__(self, other):
        return (
            isinstance(other, ProductTensor)
            and other.dim == self.dim
            and other.c == self.c
        )

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"<product dim={self.dim}>"


class HomAlgebra:
    """A finite-dimensional space with labelled products and a twist map."""

    __slots__ = ("space", "dim", "products", "twist", "_twist_powers")

    def __init__(self, space, dim, products: dict, twist: Matrix):
        if twist.nrows != dim or twist.ncols != dim:
            raise ShapeMismatch(f"twist must be {dim}x{dim}")
        for label, t in products.items():
            if not isinstance(t, ProductTensor) or t.dim != dim:
                raise ShapeMismatch(f"product {label!r} has the wrong shape")
        self.space = space
        self.dim = dim
        self.products = dict(products)
        self.twist = twist
        self._twist_powers = {0: Matrix.identity(space, dim), 1: twist}

    def product(self, label) -> ProductTensor:
        try:
            return self.products[label]
        except KeyError:
            raise UnknownLabel(
                f"no product {label!r}; have {sorted(self.products)}"
            ) from None

    def has(self, label) -> bool:
        return label in self.products

    def twist_power(self, n: int) -> Matrix:
        cached = self._twist_powers.get(n)
        if cached is None:
            if n < 0:
                cached = self.twist_power(-n).invert()
            else:
                cached = self.twist_power(n - 1) * self.twist
            self._twist_powers[n] = cached
        return cached

    def with_product(self, label, tensor: ProductTensor) -> "HomAlgebra":
        """Copy of this algebra with one more product."""
        if label in self.products:
            raise DuplicateLabel(f"product {label!r} already present")
        products = dict(self.products)
        products[label] = tensor
        return HomAlgebra(self.space, self.dim, products, self.twist)

    def __repr__(self):
        return (f"<algebra dim={self.dim} products={sorted(self.products)} "
                f"params={list(self.space.names)}>")


class ModuleSpec:
    """A module: actions of algebra basis vectors plus a module twist.

    actions[label][i] is the matrix of the action of algebra basis vector
    e_i on the module, acting on coordinate columns.
    """

    __slots__ = ("space", "adim", "mdim", "actions", "twist", "_twist_powers")

    def __init__(self, space, adim, mdim, actions: dict, twist: Matrix):
        if twist.nrows != mdim or twist.ncols != mdim:
            raise ShapeMismatch(f"module twist must be {mdim}x{mdim}")
        checked = {}
        for label, mats in actions.items():
            mats = tuple(mats)
            if len(mats) != adim:
                raise ShapeMismatch(
                    f"action {label!r} needs one matrix per algebra basis vector"
                )
            for m in mats:
                if m.nrows != mdim or m.ncols != mdim:
                    raise ShapeMismatch(f"action {label!r} matrices must be {mdim}x{mdim}")
            checked[label] = mats
        self.space = space
        self.adim = adim
        self.mdim = mdim
        self.actions = checked
        self.twist = twist
        self._twist_powers = {0: Matrix.identity(space, mdim), 1: twist}

    def twist_power(self, n: int) -> Matrix:
        cached = self._twist_powers.get(n)
        if cached is None:
            if n < 0:
                cached = self.twist_power(-n).invert()
            else:
                cached = self.twist_power(n - 1) * self.twist
            self._twist_powers[n] = cached
        return cached

    def action(self, label):
        try:
            return self.actions[label]
        except KeyError:
            raise UnknownLabel(
                f"no action {label!r}; have {sorted(self.actions)}"
            ) from None

    def act_sparse(self, label, x: dict, v: dict) -> dict:
        """Action of a sparse algebra vector on a sparse module vector."""
        mats = self.action(label)
        out = {}
        for i, a in x.items():
            if a.is_zero():
                continue
            img = mats[i].apply(v)
            for k, c in img.items():
                s = out.get(k)
                s = a * c if s is None else s + a * c
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return out

    def __repr__(self):
        return (f"<module adim={self.adim} mdim={self.mdim} "
                f"actions={sorted(self.actions)}>")


# ---------------------------------------------------------------------------
# verdicts

class Violation:
    """One failed identity instance at a specific basis tuple."""

    __slots__ = ("identity", "at", "residual")

    def __init__(self, identity, at, residual):
        self.identity = identity
        self.at = tuple(at)
        self.residual = residual

    def describe(self, prefix="e"):
        args = ", ".join(f"{prefix}{i + 1}" for i in self.at)
        return f"{self.identity} at ({args}): {self.residual}"

    def __eq__(self, other):
        return (
            isinstance(other, Violation)
            and (other.identity, other.at, other.residual)
            == (self.identity, self.at, self.residual)
        )

    def __repr__(self):
        return f"<violation {self.describe()}>"


class Report:
    """Outcome of a structure or operator check."""

    __slots__ = ("ok", "identities", "tuples", "violations", "assumptions", "flags")

    def __init__(self, ok, identities=0, tuples=0, violations=(),
                 assumptions=(), flags=()):
        self.ok = ok
        self.identities = identities
        self.tuples = tuples
        self.violations = sorted(
            violations, key=lambda v: (v.identity, v.at)
        )
        self.assumptions = sorted(set(assumptions))
        self.flags = list(flags)

    def summary(self) -> str:
        if self.ok:
            return f"PASS ({self.identities} identities, {self.tuples} tuples)"
        return (f"FAIL ({len(self.violations)} violations over "
                f"{self.identities} identities, {self.tuples} tuples)")

    def __repr__(self):
        return f"<report {self.summary()}>"


def merge_reports(reports) -> Report:
    reports = list(reports)
    return Report(
        all(r.ok for r in reports),
        identities=sum(r.identities for r in reports),
        tuples=sum(r.tuples for r in reports),
        violations=[v for r in reports for v in r.violations],
        assumptions=[a for r in reports for a in r.assumptions],
        flags=[f for r in reports for f in r.flags],
    )


def render_vector(vec: dict, prefix="e") -> str:
    """Sparse coordinate vector as a readable combination, '0' when empty."""
    if not vec:
        return "0"
    parts = []
    for i in sorted(vec):
        c = vec[i]
        if c.is_zero():
            continue
        txt = c.render()
        name = f"{prefix}{i + 1}"
        if txt == "1":
            piece = name
        elif txt == "-1":
            piece = f"-{name}"
        elif "+" in txt or (txt.count("-") > (1 if txt.startswith("-") else 0)):
            piece = f"({txt})*{name}"
        else:
            piece = f"{txt}*{name}"
        if not parts:
            parts.append(piece)
        elif piece.startswith("-"):
            parts.append(" - " + piece[1:])
        else:
            parts.append(" + " + piece)
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# construction helpers and serialization

def make_algebra(params, dim, products: dict, twist=None) -> HomAlgebra:
    """Algebra from plain tables; entries may be strings, numbers, or Scalars.

    twist defaults to the identity map.
    """
    space = params if isinstance(params, ParamSpace) else ParamSpace(params)
    built = {}
    for label, table in products.items():
        if label in built:
            raise DuplicateLabel(f"product {label!r} given twice")
        built[label] = (table if isinstance(table, ProductTensor)
                        else ProductTensor.from_table(space, dim, table))
    if twist is None:
        tw = Matrix.identity(space, dim)
    elif isinstance(twist, Matrix):
        tw = twist
    else:
        tw = Matrix(space, [[space.parse(str(x)) for x in row] for row in twist])
    return HomAlgebra(space, dim, built, tw)


def make_module(params, adim, mdim, actions: dict, twist=None) -> ModuleSpec:
    space = params if isinstance(params, ParamSpace) else ParamSpace(params)
    built = {}
    for label, mats in actions.items():
        out = []
        for m in mats:
            out.append(m if isinstance(m, Matrix)
                       else Matrix(space, [[space.parse(str(x)) for x in row]
                                           for row in m]))
        built[label] = tuple(out)
    if twist is None:
        tw = Matrix.identity(space, mdim)
    elif isinstance(twist, Matrix):
        tw = twist
    else:
        tw = Matrix(space, [[space.parse(str(x)) for x in row] for row in twist])
    return ModuleSpec(space, adim, mdim, built, tw)


def product_eval(alg: HomAlgebra, label, x: dict, y: dict) -> dict:
    return alg.product(label).eval_sparse(x, y)


def check_morphism(alg: HomAlgebra, mat: Matrix, labels=None) -> Report:
    """Does the map commute with every product: F(x*y) = F(x)*F(y)?"""
    labels = sorted(alg.products) if labels is None else list(labels)
    violations = []
    tuples = 0
    for label in labels:
        t = alg.product(label)
        for i in range(alg.dim):
            for j in range(alg.dim):
                tuples += 1
                lhs = mat.apply(t.eval_basis(i, j))
                rhs = t.eval_sparse(mat.apply({i: alg.space.one}),
                                    mat.apply({j: alg.space.one}))
                diff = _vec_sub(lhs, rhs)
                if diff:
                    violations.append(Violation(
                        f"morphism[{label}]", (i, j), render_vector(diff)))
    return Report(not violations, identities=len(labels), tuples=tuples,
                  violations=violations)


def check_multiplicative(alg: HomAlgebra) -> Report:
    """Is the twist map multiplicative for every product of the algebra?"""
    return check_morphism(alg, alg.twist)


def _vec_sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        s = out.get(k)
        s = -c if s is None else s - c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


# -- JSON ---------------------------------------------------------------------

def algebra_to_json(alg: HomAlgebra) -> dict:
    return {
        "dim": alg.dim,
        "params": list(alg.space.names),
        "twist": alg.twist.to_lists(),
        "products": {
            label: [[[x.render() for x in row] for row in plane]
                    for plane in t.c]
            for label, t in sorted(alg.products.items())
        },
    }


def algebra_from_json(data) -> HomAlgebra:
    try:
        dim = int(data["dim"])
        products = data["products"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad algebra document: {exc}") from None
    params = data.get("params", [])
    return make_algebra(params, dim, dict(products), data.get("twist"))


def module_to_json(mod: ModuleSpec) -> dict:
    return {
        "adim": mod.adim,
        "mdim": mod.mdim,
        "params": list(mod.space.names),
        "beta": mod.twist.to_lists(),
        "actions": {
            label: [m.to_lists() for m in mats]
            for label, mats in sorted(mod.actions.items())
        },
    }


def module_from_json(data) -> ModuleSpec:
    try:
        adim = int(data["adim"])
        mdim = int(data["mdim"])
        actions = data["actions"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad module document: {exc}") from None
    params = data.get("params", [])
    return make_module(params, adim, mdim, dict(actions), data.get("beta"))


def operator_from_json(data, space) -> Matrix:
    try:
        rows = data["matrix"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad operator document: {exc}") from None
    return Matrix(space, [[space.parse(str(x)) for x in row] for row in rows])


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
