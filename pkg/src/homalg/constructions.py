"""Constructive passages between the algebra classes.

Projections (commutator, horizontal and vertical sums), operator
splittings, semidirect sums, dual representations, composition twists,
and the product induced by a symplectic form. Every operation returns a
new immutable value and none of them validate their own hypotheses;
run the checkers on the output when the input is in doubt.

Operations that produce products on the same carrier keep the source
products and write the new ones under fixed standard labels, replacing
a label when it is already taken, so pipelines compose without
configuration.
"""

from .errors import InputError, MissingAction, MissingProduct, ShapeMismatch
from .linalg import Matrix
from .structures import HomAlgebra, ModuleSpec, ProductTensor

__all__ = [
    "DERIVE_RULES",
    "SPLIT_RULES",
    "DESCEND_RULES",
    "derive_structure",
    "rb_split",
    "commuting_rb_split",
    "o_induced",
    "o_transport",
    "semidirect",
    "adjoint",
    "left_mult",
    "dual_rep",
    "coadjoint",
    "module_descend",
    "yau_twist",
    "twist_module",
    "transpose_mdend",
    "symplectic_product",
]


def _tensor(space, dim, cell) -> ProductTensor:
    """Tensor from a function (i, j) -> sparse {k: Scalar}."""
    z = space.zero
    planes = []
    for i in range(dim):
        plane = []
        for j in range(dim):
            vec = cell(i, j)
            plane.append([vec.get(k, z) for k in range(dim)])
        planes.append(plane)
    return ProductTensor(space, dim, planes)


def _with_products(alg, new: dict) -> HomAlgebra:
    products = dict(alg.products)
    products.update(new)
    return HomAlgebra(alg.space, alg.dim, products, alg.twist)


def _need(alg, labels):
    for label in labels:
        if not alg.has(label):
            raise MissingProduct(
                f"construction needs product {label!r}; have {sorted(alg.products)}"
            )


def _need_actions(mod, labels):
    for label in labels:
        if label not in mod.actions:
            raise MissingAction(
                f"construction needs action {label!r}; have {sorted(mod.actions)}"
            )


def _cell_diff(t1, t2, flip2=False):
    def cell(i, j):
        a = t1.eval_basis(i, j)
        b = t2.eval_basis(j, i) if flip2 else t2.eval_basis(i, j)
        out = dict(a)
        for k, c in b.items():
            s = out.get(k)
            s = -c if s is None else s - c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return out
    return cell


def _cell_sum(t1, t2):
    def cell(i, j):
        out = dict(t1.eval_basis(i, j))
        for k, c in t2.eval_basis(i, j).items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return out
    return cell


def _derive_commutator(alg):
    t = alg.product("dot")
    return {"bracket": _tensor(alg.space, alg.dim, _cell_diff(t, t, flip2=True))}


def _derive_pre_alt_sum(alg):
    return {"dot": _tensor(alg.space, alg.dim,
                           _cell_sum(alg.product("succ"), alg.product("prec")))}


def _derive_pre_alt_to_pre_malcev(alg):
    return {"dot": _tensor(alg.space, alg.dim,
                           _cell_diff(alg.product("succ"), alg.product("prec"),
                                      flip2=True))}


def _derive_mdend_horizontal(alg):
    return {"dot": _tensor(alg.space, alg.dim,
                           _cell_sum(alg.product("tleft"), alg.product("tright")))}


def _derive_mdend_vertical(alg):
    return {"diamond": _tensor(alg.space, alg.dim,
                               _cell_diff(alg.product("tleft"),
                                          alg.product("tright"), flip2=True))}


def _derive_quadri_horizontal(alg):
    return {
        "succ": _tensor(alg.space, alg.dim,
                        _cell_sum(alg.product("ne"), alg.product("se"))),
        "prec": _tensor(alg.space, alg.dim,
                        _cell_sum(alg.product("nw"), alg.product("sw"))),
    }


def _derive_quadri_vertical(alg):
    return {
        "succ": _tensor(alg.space, alg.dim,
                        _cell_sum(alg.product("ne"), alg.product("nw"))),
        "prec": _tensor(alg.space, alg.dim,
                        _cell_sum(alg.product("se"), alg.product("sw"))),
    }


def _derive_quadri_to_mdend(alg):
    return {
        "tright": _tensor(alg.space, alg.dim,
                          _cell_diff(alg.product("ne"), alg.product("sw"),
                                     flip2=True)),
        "tleft": _tensor(alg.space, alg.dim,
                         _cell_diff(alg.product("se"), alg.product("nw"),
                                    flip2=True)),
    }


DERIVE_RULES = {
    "commutator": (("dot",), _derive_commutator),
    "pre-alt-sum": (("succ", "prec"), _derive_pre_alt_sum),
    "pre-alt-to-pre-malcev": (("succ", "prec"), _derive_pre_alt_to_pre_malcev),
    "mdend-horizontal": (("tleft", "tright"), _derive_mdend_horizontal),
    "mdend-vertical": (("tleft", "tright"), _derive_mdend_vertical),
    "quadri-horizontal": (("ne", "se", "sw", "nw"), _derive_quadri_horizontal),
    "quadri-vertical": (("ne", "se", "sw", "nw"), _derive_quadri_vertical),
    "quadri-to-mdend": (("ne", "se", "sw", "nw"), _derive_quadri_to_mdend),
}


def derive_structure(alg, rule) -> HomAlgebra:
    """Project products onto a coarser class along one of the fixed rules."""
    try:
        needs, build = DERIVE_RULES[rule]
    except KeyError:
        raise InputError(
            f"unknown derive rule {rule!r}; have {sorted(DERIVE_RULES)}"
        ) from None
    _need(alg, needs)
    return _with_products(alg, build(alg))


def _split_images(alg, operator):
    if operator.nrows != alg.dim or operator.ncols != alg.dim:
        raise ShapeMismatch(f"operator must be {alg.dim}x{alg.dim}")
    one = alg.space.one
    return [operator.apply({i: one}) for i in range(alg.dim)]


def _split_malcev(alg, operator):
    t = alg.product("bracket")
    r = _split_images(alg, operator)
    return {"dot": _tensor(alg.space, alg.dim,
                           lambda i, j: t.eval_sparse(r[i], {j: alg.space.one}))}


def _split_alt(alg, operator):
    t = alg.product("dot")
    r = _split_images(alg, operator)
    one = alg.space.one
    return {
        "succ": _tensor(alg.space, alg.dim,
                        lambda i, j: t.eval_sparse(r[i], {j: one})),
        "prec": _tensor(alg.space, alg.dim,
                        lambda i, j: t.eval_sparse({i: one}, r[j])),
    }


def _split_pre_malcev(alg, operator):
    t = alg.product("dot")
    r = _split_images(alg, operator)
    one = alg.space.one
    return {
        "tright": _tensor(alg.space, alg.dim,
                          lambda i, j: t.eval_sparse({i: one}, r[j])),
        "tleft": _tensor(alg.space, alg.dim,
                         lambda i, j: t.eval_sparse(r[i], {j: one})),
    }


def _split_pre_alt(alg, operator):
    ts, tp = alg.product("succ"), alg.product("prec")
    r = _split_images(alg, operator)
    one = alg.space.one
    return {
        "ne": _tensor(alg.space, alg.dim,
                      lambda i, j: ts.eval_sparse({i: one}, r[j])),
        "se": _tensor(alg.space, alg.dim,
                      lambda i, j: ts.eval_sparse(r[i], {j: one})),
        "sw": _tensor(alg.space, alg.dim,
                      lambda i, j: tp.eval_sparse(r[i], {j: one})),
        "nw": _tensor(alg.space, alg.dim,
                      lambda i, j: tp.eval_sparse({i: one}, r[j])),
    }


SPLIT_RULES = {
    "malcev-to-pre-malcev": (("bracket",), _split_malcev),
    "alt-to-pre-alt": (("dot",), _split_alt),
    "pre-malcev-to-mdend": (("dot",), _split_pre_malcev),
    "pre-alt-to-quadri": (("succ", "prec"), _split_pre_alt),
}

_CLASS_TO_SPLIT = {
    "hom-malcev": "malcev-to-pre-malcev",
    "hom-alternative": "alt-to-pre-alt",
    "hom-pre-malcev": "pre-malcev-to-mdend",
    "hom-pre-alternative": "pre-alt-to-quadri",
}


def rb_split(alg, class_name, operator) -> HomAlgebra:
    """Finer structure induced by a weight zero operator on the class.

    Accepts either the source class name or the split rule name.
    """
    rule = _CLASS_TO_SPLIT.get(class_name, class_name)
    try:
        needs, build = SPLIT_RULES[rule]
    except KeyError:
        raise InputError(
            f"unknown split rule {class_name!r}; have {sorted(SPLIT_RULES)}"
        ) from None
    _need(alg, needs)
    return _with_products(alg, build(alg, operator))


def commuting_rb_split(alg, op1, op2) -> HomAlgebra:
    """Two commuting weight zero operators split a bracket into two products."""
    _need(alg, ("bracket",))
    t = alg.product("bracket")
    r1 = _split_images(alg, op1)
    r2 = _split_images(alg, op2)
    r21 = [op1.apply(v) for v in _split_images(alg, op2)]
    one = alg.space.one
    return _with_products(alg, {
        "tright": _tensor(alg.space, alg.dim,
                          lambda i, j: t.eval_sparse(r1[i], r2[j])),
        "tleft": _tensor(alg.space, alg.dim,
                         lambda i, j: t.eval_sparse(r21[i], {j: one})),
    })


def _o_images(alg, mod, operator):
    if operator.nrows != alg.dim or operator.ncols != mod.mdim:
        raise ShapeMismatch(f"operator must be {alg.dim}x{mod.mdim}")
    one = alg.space.one
    return [operator.apply({a: one}) for a in range(mod.mdim)]


def _o_malcev(alg, mod, operator):
    im = _o_images(alg, mod, operator)
    one = alg.space.one
    return {"dot": _tensor(alg.space, mod.mdim,
                           lambda a, b: mod.act_sparse("rho", im[a], {b: one}))}


def _o_alt(alg, mod, operator):
    im = _o_images(alg, mod, operator)
    one = alg.space.one
    return {
        "succ": _tensor(alg.space, mod.mdim,
                        lambda a, b: mod.act_sparse("ell", im[a], {b: one})),
        "prec": _tensor(alg.space, mod.mdim,
                        lambda a, b: mod.act_sparse("r", im[b], {a: one})),
    }


def _o_pre_malcev(alg, mod, operator):
    im = _o_images(alg, mod, operator)
    one = alg.space.one
    return {
        "tright": _tensor(alg.space, mod.mdim,
                          lambda a, b: mod.act_sparse("r", im[b], {a: one})),
        "tleft": _tensor(alg.space, mod.mdim,
                         lambda a, b: mod.act_sparse("ell", im[a], {b: one})),
    }


def _o_pre_alt(alg, mod, operator):
    im = _o_images(alg, mod, operator)
    one = alg.space.one
    return {
        "se": _tensor(alg.space, mod.mdim,
                      lambda a, b: mod.act_sparse("lsucc", im[a], {b: one})),
        "ne": _tensor(alg.space, mod.mdim,
                      lambda a, b: mod.act_sparse("rsucc", im[b], {a: one})),
        "sw": _tensor(alg.space, mod.mdim,
                      lambda a, b: mod.act_sparse("lprec", im[a], {b: one})),
        "nw": _tensor(alg.space, mod.mdim,
                      lambda a, b: mod.act_sparse("rprec", im[b], {a: one})),
    }


_O_INDUCED = {
    "malcev-representation": (("rho",), _o_malcev),
    "alt-bimodule": (("ell", "r"), _o_alt),
    "pre-malcev-bimodule": (("ell", "r"), _o_pre_malcev),
    "pre-alt-bimodule": (("lsucc", "rsucc", "lprec", "rprec"), _o_pre_alt),
}


def o_induced(alg, mod, class_name, operator) -> HomAlgebra:
    """Structure on the module carrier pulled back through the operator."""
    try:
        needs, build = _O_INDUCED[class_name]
    except KeyError:
        raise InputError(
            f"no induced structure for {class_name!r}; have {sorted(_O_INDUCED)}"
        ) from None
    _need_actions(mod, needs)
    return HomAlgebra(alg.space, mod.mdim, build(alg, mod, operator), mod.twist)


def o_transport(alg, mod, class_name, operator) -> HomAlgebra:
    """Induced structure carried onto the algebra along an invertible operator.

    The product of x and y is the operator applied to the induced product of
    the preimages of x and y.  The result lives on the algebra carrier with
    the algebra's own twist.
    """
    if mod.mdim != alg.dim:
        raise ShapeMismatch("transport needs matching carrier dimensions")
    induced = o_induced(alg, mod, class_name, operator)
    tinv = operator.invert()
    one = alg.space.one
    pre = [tinv.apply({i: one}) for i in range(alg.dim)]
    products = {
        label: _tensor(alg.space, alg.dim,
                       lambda i, j, t=t: operator.apply(
                           t.eval_sparse(pre[i], pre[j])))
        for label, t in induced.products.items()
    }
    return HomAlgebra(alg.space, alg.dim, products, alg.twist)


def _block_twist(alg, mod) -> Matrix:
    n, m = alg.dim, mod.mdim
    z = alg.space.zero
    rows = []
    for i in range(n):
        rows.append(list(alg.twist.rows[i]) + [z] * m)
    for i in range(m):
        rows.append([z] * n + list(mod.twist.rows[i]))
    return Matrix(alg.space, rows)


def _semidirect_cell(alg, mod, t, left, right):
    """Block product: algebra part by t, mixed parts by the two actions.

    left(x, b) is the action placed on (algebra, module) pairs and
    right(y, a) the one on (module, algebra) pairs.
    """
    n = alg.dim
    one = alg.space.one

    def cell(i, j):
        if i < n and j < n:
            return {k: c for k, c in t.eval_basis(i, j).items()}
        if i < n:
            img = left({i: one}, {j - n: one})
            return {n + k: c for k, c in img.items()}
        if j < n:
            img = right({j: one}, {i - n: one})
            return {n + k: c for k, c in img.items()}
        return {}
    return cell


def _sd_malcev(alg, mod):
    t = alg.product("bracket")

    def left(x, b):
        return mod.act_sparse("rho", x, b)

    def right(y, a):
        img = mod.act_sparse("rho", y, a)
        return {k: -c for k, c in img.items()}
    return {"bracket": _tensor(alg.space, alg.dim + mod.mdim,
                               _semidirect_cell(alg, mod, t, left, right))}


def _sd_pre_malcev(alg, mod):
    t = alg.product("dot")

    def left(x, b):
        return mod.act_sparse("ell", x, b)

    def right(y, a):
        return mod.act_sparse("r", y, a)
    return {"dot": _tensor(alg.space, alg.dim + mod.mdim,
                           _semidirect_cell(alg, mod, t, left, right))}


def _sd_alt(alg, mod):
    t = alg.product("dot")

    def left(x, b):
        return mod.act_sparse("ell", x, b)

    def right(y, a):
        return mod.act_sparse("r", y, a)
    return {"dot": _tensor(alg.space, alg.dim + mod.mdim,
                           _semidirect_cell(alg, mod, t, left, right))}


def _sd_pre_alt(alg, mod):
    dim = alg.dim + mod.mdim
    out = {}
    for label, lact, ract in (("succ", "lsucc", "rsucc"),
                              ("prec", "lprec", "rprec")):
        t = alg.product(label)

        def left(x, b, lact=lact):
            return mod.act_sparse(lact, x, b)

        def right(y, a, ract=ract):
            return mod.act_sparse(ract, y, a)
        out[label] = _tensor(alg.space, dim,
                             _semidirect_cell(alg, mod, t, left, right))
    return out


_SEMIDIRECT = {
    "malcev-representation": (("bracket",), ("rho",), _sd_malcev),
    "pre-malcev-bimodule": (("dot",), ("ell", "r"), _sd_pre_malcev),
    "alt-bimodule": (("dot",), ("ell", "r"), _sd_alt),
    "pre-alt-bimodule": (("succ", "prec"),
                         ("lsucc", "rsucc", "lprec", "rprec"), _sd_pre_alt),
}


def semidirect(alg, mod, class_name) -> HomAlgebra:
    """Algebra on carrier A + V with the module acting as the mixed part."""
    try:
        prods, acts, build = _SEMIDIRECT[class_name]
    except KeyError:
        raise InputError(
            f"no semidirect sum for {class_name!r}; have {sorted(_SEMIDIRECT)}"
        ) from None
    if mod.adim != alg.dim:
        raise ShapeMismatch(
            f"module is over a dimension {mod.adim} algebra, got dimension {alg.dim}"
        )
    _need(alg, prods)
    _need_actions(mod, acts)
    return HomAlgebra(alg.space, alg.dim + mod.mdim, build(alg, mod),
                      _block_twist(alg, mod))


def _mult_matrices(alg, label):
    """Matrices of left multiplication by each basis vector."""
    t = alg.product(label)
    return tuple(
        Matrix(alg.space, [[t.c[i][j][k] for j in range(alg.dim)]
                           for k in range(alg.dim)])
        for i in range(alg.dim)
    )


def adjoint(alg) -> ModuleSpec:
    """The algebra acting on itself through its bracket."""
    _need(alg, ("bracket",))
    return ModuleSpec(alg.space, alg.dim, alg.dim,
                      {"rho": _mult_matrices(alg, "bracket")}, alg.twist)


def left_mult(alg) -> ModuleSpec:
    """Left multiplications of the dot product, as both kinds of action.

    The matrices are published under rho as well as under (ell, r) with
    a zero right action, so the same value serves the representation
    and the bimodule readings without conversion.
    """
    _need(alg, ("dot",))
    mats = _mult_matrices(alg, "dot")
    zero = Matrix.zeros(alg.space, alg.dim)
    return ModuleSpec(alg.space, alg.dim, alg.dim,
                      {"rho": mats, "ell": mats, "r": (zero,) * alg.dim},
                      alg.twist)


def dual_rep(alg, mod) -> ModuleSpec:
    """Contragredient actions on the dual carrier.

    Each action matrix becomes minus the transpose of (module twist
    inverse squared) times the action of the algebra twist applied to
    the basis vector; the module twist becomes the inverse transpose.
    """
    binv2 = mod.twist_power(-2)
    minus = -alg.space.one
    actions = {}
    for label, mats in mod.actions.items():
        duals = []
        for i in range(alg.dim):
            acc = Matrix.zeros(alg.space, mod.mdim)
            for j in range(alg.dim):
                coef = alg.twist.entry(j, i)
                if not coef.is_zero():
                    acc = acc + mats[j].scale(coef)
            duals.append((binv2 * acc).transpose().scale(minus))
        actions[label] = tuple(duals)
    return ModuleSpec(alg.space, alg.dim, mod.mdim, actions,
                      mod.twist.invert().transpose())


def coadjoint(alg) -> ModuleSpec:
    """Dual of the adjoint action."""
    return dual_rep(alg, adjoint(alg))


def _descend_difference(plus, minus):
    def build(mod):
        return {"rho": tuple(p - m for p, m in zip(mod.actions[plus],
                                                   mod.actions[minus]))}
    return build


def _descend_ell(mod):
    return {"rho": mod.actions["ell"]}


def _descend_pre_alt(mod):
    return {
        "ell": tuple(p - m for p, m in zip(mod.actions["lsucc"],
                                           mod.actions["rprec"])),
        "r": tuple(p - m for p, m in zip(mod.actions["rsucc"],
                                         mod.actions["lprec"])),
    }


DESCEND_RULES = {
    "alt-to-malcev": (("ell", "r"), _descend_difference("ell", "r")),
    "pre-malcev-ell": (("ell",), _descend_ell),
    "pre-malcev-to-malcev": (("ell", "r"), _descend_difference("ell", "r")),
    "pre-alt-to-pre-malcev": (("lsucc", "rsucc", "lprec", "rprec"),
                              _descend_pre_alt),
}


def module_descend(mod, rule) -> ModuleSpec:
    """Actions for a coarser class obtained by the stated differences."""
    try:
        needs, build = DESCEND_RULES[rule]
    except KeyError:
        raise InputError(
            f"unknown descend rule {rule!r}; have {sorted(DESCEND_RULES)}"
        ) from None
    _need_actions(mod, needs)
    return ModuleSpec(mod.space, mod.adim, mod.mdim, build(mod), mod.twist)


def yau_twist(alg, f: Matrix) -> HomAlgebra:
    """Compose every product with f and compose the twist with f."""
    if f.nrows != alg.dim or f.ncols != alg.dim:
        raise ShapeMismatch(f"twisting map must be {alg.dim}x{alg.dim}")
    products = {
        label: _tensor(alg.space, alg.dim,
                       lambda i, j, t=t: f.apply(t.eval_basis(i, j)))
        for label, t in alg.products.items()
    }
    return HomAlgebra(alg.space, alg.dim, products, f * alg.twist)


def twist_module(alg, mod, f: Matrix, g: Matrix) -> ModuleSpec:
    """Module actions composed with (f, g): new action of x is act(f x) . g."""
    if f.nrows != alg.dim or f.ncols != alg.dim:
        raise ShapeMismatch(f"algebra map must be {alg.dim}x{alg.dim}")
    if g.nrows != mod.mdim or g.ncols != mod.mdim:
        raise ShapeMismatch(f"module map must be {mod.mdim}x{mod.mdim}")
    actions = {}
    for label, mats in mod.actions.items():
        twisted = []
        for i in range(alg.dim):
            acc = Matrix.zeros(alg.space, mod.mdim)
            for j in range(alg.dim):
                coef = f.entry(j, i)
                if not coef.is_zero():
                    acc = acc + mats[j].scale(coef)
            twisted.append(acc * g)
        actions[label] = tuple(twisted)
    return ModuleSpec(mod.space, mod.adim, mod.mdim, actions, g * mod.twist)


def transpose_mdend(alg) -> HomAlgebra:
    """Negate and flip the right product, keep the left one."""
    _need(alg, ("tright", "tleft"))
    t = alg.product("tright")
    flipped = _tensor(alg.space, alg.dim,
                      lambda i, j: {k: -c for k, c in t.eval_basis(j, i).items()})
    return _with_products(alg, {"tright": flipped,
                                "tleft": alg.product("tleft")})


def symplectic_product(alg, omega: Matrix) -> HomAlgebra:
    """Product defined by w(x.y, twist z) = w(twist y, [z, x]) for all z."""
    _need(alg, ("bracket",))
    if omega.nrows != alg.dim or omega.ncols != alg.dim:
        raise ShapeMismatch(f"form must be {alg.dim}x{alg.dim}")
    n = alg.dim
    t = alg.product("bracket")
    lhs_inv = (omega * alg.twist).transpose().invert()
    one = alg.space.one
    alpha_img = [alg.twist.apply({j: one}) for j in range(n)]

    def pairing(u: dict, v: dict):
        total = alg.space.zero
        for a, ca in u.items():
            row = omega.rows[a]
            for b, cb in v.items():
                total = total + ca * row[b] * cb
        return total

    def cell(i, j):
        rhs = {}
        for k in range(n):
            val = pairing(alpha_img[j], t.eval_basis(k, i))
            if not val.is_zero():
                rhs[k] = val
        return lhs_inv.apply(rhs)

    return _with_products(alg, {"dot": _tensor(alg.space, n, cell)})
