"""Verification entry points for whole structures and operators.

Each checker is a thin loop over the identity catalog or over basis
tuples, collecting Violations into a Report. Checkers never mutate
their inputs and never construct anything; the constructions module
is the place for that.
"""

from .catalog import (
    algebra_identities,
    class_products,
    module_actions,
    module_base_products,
    module_identities,
)
from .errors import MissingAction, MissingProduct, ShapeMismatch
from .identities import check_identity, parse_identity
from .structures import (
    Report,
    Violation,
    check_morphism,
    merge_reports,
    render_vector,
)

__all__ = [
    "check_structure",
    "check_module",
    "check_rota_baxter",
    "check_o_operator",
    "check_commuting",
    "check_symplectic",
]


def _require_products(alg, labels):
    for label in labels:
        if not alg.has(label):
            raise MissingProduct(
                f"algebra lacks product {label!r}; have {sorted(alg.products)}"
            )


def _require_actions(mod, labels):
    for label in labels:
        if label not in mod.actions:
            raise MissingAction(
                f"module lacks action {label!r}; have {sorted(mod.actions)}"
            )


def check_structure(alg, class_name, stop_early=False) -> Report:
    """Multiplicativity of the twist plus every identity of the class."""
    labels = class_products(class_name)
    _require_products(alg, labels)
    parts = [check_morphism(alg, alg.twist, labels=labels)]
    for name, expr in algebra_identities(class_name).items():
        if stop_early and not parts[-1].ok:
            break
        parts.append(check_identity(expr, alg, name=name, stop_early=stop_early))
    return merge_reports(parts)


def check_module(alg, mod, class_name, stop_early=False) -> Report:
    """Compatibility equations of a module class, twist commutation first.

    For pre-alternative bimodules the printed equation set is cross
    validated against the semidirect characterization; the semidirect
    verdict wins and any disagreement is flagged on the report.
    """
    _require_actions(mod, module_actions(class_name))
    _require_products(alg, module_base_products(class_name))
    if mod.adim != alg.dim:
        raise ShapeMismatch(
            f"module is over a dimension {mod.adim} algebra, got dimension {alg.dim}"
        )
    parts = []
    for name, expr in module_identities(class_name).items():
        parts.append(check_identity(expr, alg, mod=mod, name=name,
                                    stop_early=stop_early))
        if stop_early and not parts[-1].ok:
            break
    rep = merge_reports(parts)
    if class_name != "pre-alt-bimodule" or (stop_early and not rep.ok):
        return rep
    return _cross_validate_pre_alt(alg, mod, rep, stop_early)


def _cross_validate_pre_alt(alg, mod, rep, stop_early) -> Report:
    from .constructions import semidirect

    sd = semidirect(alg, mod, "pre-alt-bimodule")
    sdrep = check_structure(sd, "hom-pre-alternative", stop_early=stop_early)
    if sdrep.ok == rep.ok:
        return rep
    flags = [
        "bimodule equations say %s but the semidirect sum says %s; "
        "keeping the semidirect verdict"
        % ("PASS" if rep.ok else "FAIL", "PASS" if sdrep.ok else "FAIL")
    ]
    if sdrep.ok:
        flags.extend("overruled: " + v.describe() for v in rep.violations)
        return Report(True, identities=rep.identities, tuples=rep.tuples,
                      assumptions=rep.assumptions, flags=flags)
    violations = [Violation("semidirect:" + v.identity, v.at, v.residual)
                  for v in sdrep.violations]
    return Report(False, identities=rep.identities, tuples=rep.tuples,
                  violations=violations, assumptions=rep.assumptions,
                  flags=flags)


def _sparse_column(mat, j) -> dict:
    return {i: c for i, c in enumerate(mat.column(j)) if not c.is_zero()}


def _column_violations(diff, name):
    violations = []
    for j in range(diff.ncols):
        col = _sparse_column(diff, j)
        if col:
            violations.append(Violation(name, (j,), render_vector(col)))
    return violations


def _twist_commutation(op, twist, dim, name) -> Report:
    violations = _column_violations(op * twist - twist * op, name)
    return Report(not violations, identities=1, tuples=dim,
                  violations=violations)


def check_rota_baxter(alg, class_name, operator, stop_early=False) -> Report:
    """Twist commutation plus the weight zero equation, one per product."""
    labels = class_products(class_name)
    _require_products(alg, labels)
    if operator.nrows != alg.dim or operator.ncols != alg.dim:
        raise ShapeMismatch(f"operator must be {alg.dim}x{alg.dim}")
    parts = [_twist_commutation(operator, alg.twist, alg.dim,
                                "twist-commutation")]
    one = alg.space.one
    for label in labels:
        t = alg.product(label)
        violations = []
        for i in range(alg.dim):
            ri = operator.apply({i: one})
            for j in range(alg.dim):
                rj = operator.apply({j: one})
                lhs = t.eval_sparse(ri, rj)
                inner = _vec_add(t.eval_sparse(ri, {j: one}),
                                 t.eval_sparse({i: one}, rj))
                diff = _vec_sub(lhs, operator.apply(inner))
                if diff:
                    violations.append(Violation(f"rota-baxter[{label}]",
                                                (i, j), render_vector(diff)))
                    if stop_early:
                        break
            if stop_early and violations:
                break
        parts.append(Report(not violations, identities=1,
                            tuples=alg.dim * alg.dim, violations=violations))
    return merge_reports(parts)


_O_EQUATIONS = {
    "malcev-representation": (
        ("bracket", lambda mod, Ta, Tb, a, b:
            _vec_sub(mod.act_sparse("rho", Ta, b), mod.act_sparse("rho", Tb, a))),
    ),
    "pre-malcev-bimodule": (
        ("dot", lambda mod, Ta, Tb, a, b:
            _vec_add(mod.act_sparse("ell", Ta, b), mod.act_sparse("r", Tb, a))),
    ),
    "alt-bimodule": (
        ("dot", lambda mod, Ta, Tb, a, b:
            _vec_add(mod.act_sparse("ell", Ta, b), mod.act_sparse("r", Tb, a))),
    ),
    "pre-alt-bimodule": (
        ("succ", lambda mod, Ta, Tb, a, b:
            _vec_add(mod.act_sparse("lsucc", Ta, b),
                     mod.act_sparse("rsucc", Tb, a))),
        ("prec", lambda mod, Ta, Tb, a, b:
            _vec_add(mod.act_sparse("lprec", Ta, b),
                     mod.act_sparse("rprec", Tb, a))),
    ),
}


def check_o_operator(alg, mod, class_name, operator, stop_early=False) -> Report:
    """Twist intertwining plus the class's equations on module basis pairs."""
    _require_actions(mod, module_actions(class_name))
    _require_products(alg, module_base_products(class_name))
    if mod.adim != alg.dim:
        raise ShapeMismatch(
            f"module is over a dimension {mod.adim} algebra, got dimension {alg.dim}"
        )
    if operator.nrows != alg.dim or operator.ncols != mod.mdim:
        raise ShapeMismatch(f"operator must be {alg.dim}x{mod.mdim}")
    violations = _column_violations(alg.twist * operator - operator * mod.twist,
                                    "twist-intertwining")
    parts = [Report(not violations, identities=1, tuples=mod.mdim,
                    violations=violations)]
    one = alg.space.one
    for label, rhs in _O_EQUATIONS[class_name]:
        t = alg.product(label)
        violations = []
        for a in range(mod.mdim):
            ta = operator.apply({a: one})
            for b in range(mod.mdim):
                tb = operator.apply({b: one})
                lhs = t.eval_sparse(ta, tb)
                inner = rhs(mod, ta, tb, {a: one}, {b: one})
                diff = _vec_sub(lhs, operator.apply(inner))
                if diff:
                    violations.append(Violation(f"o-operator[{label}]",
                                                (a, b), render_vector(diff)))
                    if stop_early:
                        break
            if stop_early and violations:
                break
        parts.append(Report(not violations, identities=1,
                            tuples=mod.mdim * mod.mdim, violations=violations))
    return merge_reports(parts)


def check_commuting(op1, op2) -> Report:
    """Exact equality of the two compositions."""
    if op1.nrows != op2.nrows or op1.ncols != op2.ncols:
        raise ShapeMismatch("operators must have the same shape")
    violations = _column_violations(op1 * op2 - op2 * op1, "commutation")
    return Report(not violations, identities=1, tuples=op1.ncols,
                  violations=violations)


_SYMPL_SOURCES = {
    "form-antisymmetry": ({"x": "a", "y": "a"},
                          "w(omega,x,y) + w(omega,y,x)"),
    "twist-invariance": ({"x": "a", "y": "a"},
                         "w(omega,A(x),A(y)) - w(omega,x,y)"),
    "cyclic-invariance": ({"x": "a", "y": "a", "z": "a"},
                          "w(omega,p(bracket,x,y),A(z))"
                          " + w(omega,p(bracket,y,z),A(x))"
                          " + w(omega,p(bracket,z,x),A(y))"),
}
_SYMPL_PARSED = {}


def check_symplectic(alg, omega, stop_early=False) -> Report:
    """Antisymmetry, invertibility, twist invariance and the cyclic sum."""
    _require_products(alg, ("bracket",))
    if omega.nrows != alg.dim or omega.ncols != alg.dim:
        raise ShapeMismatch(f"form must be {alg.dim}x{alg.dim}")
    if not _SYMPL_PARSED:
        for name, (decls, src) in _SYMPL_SOURCES.items():
            _SYMPL_PARSED[name] = parse_identity(src, decls)
    det = omega.det()
    if det.is_zero():
        parts = [Report(False, identities=1, tuples=1,
                        violations=[Violation("invertibility", (),
                                              "determinant 0")])]
        if stop_early:
            return parts[0]
    else:
        parts = [Report(True, identities=1, tuples=1)]
    forms = {"omega": omega}
    for name, expr in _SYMPL_PARSED.items():
        parts.append(check_identity(expr, alg, forms=forms, name=name,
                                    stop_early=stop_early))
        if stop_early and not parts[-1].ok:
            break
    return merge_reports(parts)


def _vec_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


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
