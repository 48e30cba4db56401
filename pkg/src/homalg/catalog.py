"""Built-in identity catalogs for the supported structure classes.

Every identity is a DSL source string (see identities.py for the grammar)
over algebra variables x, y, z, t and a module variable v. Identities only
mention products an algebra of the class actually stores; auxiliary
operations (commutator brackets, horizontal/vertical combinations, operator
sums) are expanded inline by the small string builders below.

Class names double as CLI arguments, so they are plain kebab-case strings.
"""

from .errors import InputError
from .identities import parse_identity

CLASS_PRODUCTS = {
    "hom-malcev": ("bracket",),
    "hom-alternative": ("dot",),
    "hom-pre-lie": ("dot",),
    "hom-pre-malcev": ("dot",),
    "hom-pre-alternative": ("succ", "prec"),
    "hom-m-dendriform": ("tright", "tleft"),
    "hom-alt-quadri": ("ne", "se", "sw", "nw"),
}

MODULE_ACTIONS = {
    "malcev-representation": ("rho",),
    "pre-malcev-bimodule": ("ell", "r"),
    "alt-bimodule": ("ell", "r"),
    "pre-alt-bimodule": ("lsucc", "rsucc", "lprec", "rprec"),
}

# Algebra products the module class's identities refer to.
MODULE_BASE_PRODUCTS = {
    "malcev-representation": ("bracket",),
    "pre-malcev-bimodule": ("dot",),
    "alt-bimodule": ("dot",),
    "pre-alt-bimodule": ("succ", "prec"),
}

_XY = {"x": "algebra", "y": "algebra"}
_XYZ = {"x": "algebra", "y": "algebra", "z": "algebra"}
_XYZT = {"x": "algebra", "y": "algebra", "z": "algebra", "t": "algebra"}
_XV = {"x": "algebra", "v": "module"}
_XYV = {"x": "algebra", "y": "algebra", "v": "module"}
_XYZV = {"x": "algebra", "y": "algebra", "z": "algebra", "v": "module"}


def _b(a, b):
    return "p(bracket,%s,%s)" % (a, b)


def _d(a, b):
    return "p(dot,%s,%s)" % (a, b)


def _k(a, b):
    """Commutator of the dot product, inline."""
    return "%s - %s" % (_d(a, b), _d(b, a))


def _A(e):
    return "A(%s)" % e


def _A2(e):
    return "A2(%s)" % e


# -- hom-malcev ---------------------------------------------------------------

_ANTISYM = "%s + %s" % (_b("x", "y"), _b("y", "x"))

_HOM_MALCEV = " - ".join([
    _b(_A(_b("x", "z")), _A(_b("y", "t"))),
    _b(_b(_b("x", "y"), _A("z")), _A2("t")),
    _b(_b(_b("y", "z"), _A("t")), _A2("x")),
    _b(_b(_b("z", "t"), _A("x")), _A2("y")),
    _b(_b(_b("t", "x"), _A("y")), _A2("z")),
])

# -- hom-alternative ----------------------------------------------------------
# The twisted associator as(x,y,z) = (x*y)*A(z) - A(x)*(y*z) vanishes when the
# first two (left) or last two (right) arguments agree; both conditions are
# stated here in polarized form so every monomial is multilinear.


def _assoc(a, b, c):
    return "%s - %s" % (_d(_d(a, b), _A(c)), _d(_A(a), _d(b, c)))


_LEFT_ALT = "%s + %s" % (_assoc("x", "y", "z"), _assoc("y", "x", "z"))
_RIGHT_ALT = "%s + %s" % (_assoc("x", "y", "z"), _assoc("x", "z", "y"))

# -- hom-pre-lie --------------------------------------------------------------
# as(x,y,z) - as(y,x,z) written out term by term, since a leading minus in the
# source only negates the atom right after it.

_HOM_PRE_LIE = "%s - %s - %s + %s" % (
    _d(_d("x", "y"), _A("z")), _d(_A("x"), _d("y", "z")),
    _d(_d("y", "x"), _A("z")), _d(_A("y"), _d("x", "z")),
)

# -- hom-pre-malcev -----------------------------------------------------------

_HPM = "%s + %s + %s - %s + %s" % (
    _d(_A(_k("y", "z")), _A(_d("x", "t"))),
    _d(_k(_k("x", "y"), _A("z")), _A2("t")),
    _d(_A2("y"), _d(_k("x", "z"), _A("t"))),
    _d(_A2("x"), _d(_A("y"), _d("z", "t"))),
    _d(_A2("z"), _d(_A("x"), _d("y", "t"))),
)

# -- hom-pre-alternative ------------------------------------------------------


def _sc(a, b):
    return "p(succ,%s,%s)" % (a, b)


def _pc(a, b):
    return "p(prec,%s,%s)" % (a, b)


def _st(a, b):
    return "%s + %s" % (_pc(a, b), _sc(a, b))


_PA1 = "%s - %s + %s - %s" % (
    _pc(_sc("x", "y"), _A("z")), _sc(_A("x"), _pc("y", "z")),
    _pc(_pc("y", "x"), _A("z")), _pc(_A("y"), _st("x", "z")),
)
_PA2 = "%s - %s + %s - %s" % (
    _pc(_sc("x", "y"), _A("z")), _sc(_A("x"), _pc("y", "z")),
    _sc(_st("x", "z"), _A("y")), _sc(_A("x"), _sc("z", "y")),
)
_PA3 = "%s - %s + %s - %s" % (
    _sc(_st("x", "y"), _A("z")), _sc(_A("x"), _sc("y", "z")),
    _sc(_st("y", "x"), _A("z")), _sc(_A("y"), _sc("x", "z")),
)
_PA4 = "%s - %s + %s - %s" % (
    _pc(_pc("x", "y"), _A("z")), _pc(_A("x"), _st("y", "z")),
    _pc(_pc("x", "z"), _A("y")), _pc(_A("x"), _st("z", "y")),
)

# -- hom-m-dendriform ---------------------------------------------------------
# Stored products are tright (x > y) and tleft (x < y); the derived horizontal
# product, vertical product and bracket are expanded inline:
#   x . y  = x < y + x > y
#   x <> y = x < y - y > x
#   [x, y] = x . y - y . x


def _tr(a, b):
    return "p(tright,%s,%s)" % (a, b)


def _tl(a, b):
    return "p(tleft,%s,%s)" % (a, b)


def _hor(a, b):
    return "%s + %s" % (_tl(a, b), _tr(a, b))


def _ver(a, b):
    return "%s - %s" % (_tl(a, b), _tr(b, a))


def _km(a, b):
    return "%s + %s - %s - %s" % (_tl(a, b), _tr(a, b), _tl(b, a), _tr(b, a))


_MD1 = "%s - %s + %s + %s - %s" % (
    _tr(_ver(_A("z"), _ver("y", "x")), _A2("t")),
    _tr(_A2("x"), _hor(_A("y"), _hor("z", "t"))),
    _tl(_A2("z"), _tr(_A("x"), _hor("y", "t"))),
    _tl(_A(_km("y", "z")), _A(_tr("x", "t"))),
    _tl(_A2("y"), _tr(_ver("z", "x"), _A("t"))),
)
_MD2 = "%s - %s - %s - %s + %s" % (
    _tl(_A2("z"), _tl(_A("x"), _tr("y", "t"))),
    _tr(_ver(_A("z"), _ver("x", "y")), _A2("t")),
    _tl(_A2("x"), _tr(_A("y"), _hor("z", "t"))),
    _tr(_A(_ver("z", "y")), _A(_hor("x", "t"))),
    _tr(_A2("y"), _hor(_km("x", "z"), _A("t"))),
)
_MD3 = "%s + %s - %s + %s + %s" % (
    _tr(_A2("z"), _hor(_A("x"), _hor("y", "t"))),
    _tr(_ver(_km("x", "y"), _A("z")), _A2("t")),
    _tl(_A2("x"), _tl(_A("y"), _tr("z", "t"))),
    _tr(_A(_ver("y", "z")), _A(_hor("x", "t"))),
    _tl(_A2("y"), _tr(_ver("x", "z"), _A("t"))),
)
_MD4 = "%s - %s + %s + %s + %s" % (
    _tl(_km(_km("x", "y"), _A("z")), _A2("t")),
    _tl(_A2("x"), _tl(_A("y"), _tl("z", "t"))),
    _tl(_A2("z"), _tl(_A("x"), _tl("y", "t"))),
    _tl(_A(_km("y", "z")), _A(_tl("x", "t"))),
    _tl(_A2("y"), _tl(_km("x", "z"), _A("t"))),
)

# -- hom-alt-quadri -----------------------------------------------------------
# Stored products are the four corner operations; the twisted associators are
# built from them and the derived sums
#   x succ y = ne + se     x prec y = nw + sw
#   x vee y  = se + sw     x wedge y = ne + nw
#   x star y = all four.


def _q(label, a, b):
    return "p(%s,%s,%s)" % (label, a, b)


def _qsucc(a, b):
    return "%s + %s" % (_q("ne", a, b), _q("se", a, b))


def _qprec(a, b):
    return "%s + %s" % (_q("nw", a, b), _q("sw", a, b))


def _qvee(a, b):
    return "%s + %s" % (_q("se", a, b), _q("sw", a, b))


def _qwedge(a, b):
    return "%s + %s" % (_q("ne", a, b), _q("nw", a, b))


def _qstar(a, b):
    return "%s + %s + %s + %s" % (
        _q("ne", a, b), _q("se", a, b), _q("sw", a, b), _q("nw", a, b))


def _as_r(a, b, c):
    return "%s - %s" % (_q("nw", _q("nw", a, b), _A(c)),
                        _q("nw", _A(a), _qstar(b, c)))


def _as_l(a, b, c):
    return "%s - %s" % (_q("se", _qstar(a, b), _A(c)),
                        _q("se", _A(a), _q("se", b, c)))


def _as_m(a, b, c):
    return "%s - %s" % (_q("nw", _q("se", a, b), _A(c)),
                        _q("se", _A(a), _q("nw", b, c)))


def _as_n(a, b, c):
    return "%s - %s" % (_q("nw", _q("ne", a, b), _A(c)),
                        _q("ne", _A(a), _qprec(b, c)))


def _as_w(a, b, c):
    return "%s - %s" % (_q("nw", _q("sw", a, b), _A(c)),
                        _q("sw", _A(a), _qwedge(b, c)))


def _as_s(a, b, c):
    return "%s - %s" % (_q("sw", _qsucc(a, b), _A(c)),
                        _q("se", _A(a), _q("sw", b, c)))


def _as_e(a, b, c):
    return "%s - %s" % (_q("ne", _qvee(a, b), _A(c)),
                        _q("se", _A(a), _q("ne", b, c)))


def _as_ne(a, b, c):
    return "%s - %s" % (_q("ne", _qwedge(a, b), _A(c)),
                        _q("ne", _A(a), _qsucc(b, c)))


def _as_sw(a, b, c):
    return "%s - %s" % (_q("sw", _qprec(a, b), _A(c)),
                        _q("sw", _A(a), _qvee(b, c)))


_QUADRI = {
    "q1": "%s + %s" % (_as_r("x", "y", "z"), _as_m("y", "x", "z")),
    "q2": "%s + %s" % (_as_r("x", "y", "z"), _as_r("x", "z", "y")),
    "q3": "%s + %s" % (_as_n("x", "y", "z"), _as_w("y", "x", "z")),
    "q4": "%s + %s" % (_as_n("x", "y", "z"), _as_ne("x", "z", "y")),
    "q5": "%s + %s" % (_as_ne("x", "y", "z"), _as_e("y", "x", "z")),
    "q6": "%s + %s" % (_as_w("x", "y", "z"), _as_sw("x", "z", "y")),
    "q7": "%s + %s" % (_as_sw("x", "y", "z"), _as_s("y", "x", "z")),
    "q8": "%s + %s" % (_as_m("x", "y", "z"), _as_l("x", "z", "y")),
    "q9": "%s + %s" % (_as_l("x", "y", "z"), _as_l("y", "x", "z")),
}

ALGEBRA_CATALOG = {
    "hom-malcev": {
        "antisymmetry": (_XY, _ANTISYM),
        "hom-malcev": (_XYZT, _HOM_MALCEV),
    },
    "hom-alternative": {
        "left-alternative": (_XYZ, _LEFT_ALT),
        "right-alternative": (_XYZ, _RIGHT_ALT),
    },
    "hom-pre-lie": {
        "hom-pre-lie": (_XYZ, _HOM_PRE_LIE),
    },
    "hom-pre-malcev": {
        "hom-pre-malcev": (_XYZT, _HPM),
    },
    "hom-pre-alternative": {
        "pa1": (_XYZ, _PA1),
        "pa2": (_XYZ, _PA2),
        "pa3": (_XYZ, _PA3),
        "pa4": (_XYZ, _PA4),
    },
    "hom-m-dendriform": {
        "md1": (_XYZT, _MD1),
        "md2": (_XYZT, _MD2),
        "md3": (_XYZT, _MD3),
        "md4": (_XYZT, _MD4),
    },
    "hom-alt-quadri": {name: (_XYZ, src) for name, src in _QUADRI.items()},
}

# -- module catalogs ----------------------------------------------------------


def _act(label, a, w):
    return "act(%s,%s,%s)" % (label, a, w)


def _rho(a, w):
    """rho = ell - r, expanded."""
    return "%s - %s" % (_act("ell", a, w), _act("r", a, w))


def _commutes(label):
    return "%s - B(%s)" % (_act(label, _A("x"), "B(v)"), _act(label, "x", "v"))


_MALCEV_REP = "%s - %s + %s - %s + %s" % (
    _act("rho", _b(_b("x", "y"), _A("z")), "B2(v)"),
    _act("rho", _A2("x"), _act("rho", _A("y"), _act("rho", "z", "v"))),
    _act("rho", _A2("z"), _act("rho", _A("x"), _act("rho", "y", "v"))),
    _act("rho", _A2("y"), _act("rho", _b("z", "x"), "B(v)")),
    _act("rho", _A(_b("y", "z")), _act("rho", _A("x"), "B(v)")),
)

_REP2 = "%s - %s + %s + %s - %s" % (
    _act("r", _A2("x"), _rho(_A("y"), _rho("z", "v"))),
    _act("r", _d(_A("z"), _d("y", "x")), "B2(v)"),
    _act("ell", _A2("y"), _act("r", _d("z", "x"), "B(v)")),
    _act("ell", _A(_k("y", "z")), _act("r", _A("x"), "B(v)")),
    _act("ell", _A2("z"), _act("r", _A("x"), _rho("y", "v"))),
)
_REP3 = "%s - %s - %s - %s + %s" % (
    _act("ell", _A2("y"), _act("ell", _A("z"), _act("r", "x", "v"))),
    _act("r", _A2("x"), _rho(_A("y"), _rho("z", "v"))),
    _act("ell", _A2("z"), _act("r", _d("y", "x"), "B(v)")),
    _act("r", _A(_d("z", "x")), _rho(_A("y"), "B(v)")),
    _act("r", _d(_k("z", "y"), _A("x")), "B2(v)"),
)
_REP4 = "%s + %s - %s + %s + %s" % (
    _act("r", _d(_A("y"), _d("z", "x")), "B2(v)"),
    _act("r", _A2("x"), _rho(_k("y", "z"), "B(v)")),
    _act("ell", _A2("y"), _act("ell", _A("z"), _act("r", "x", "v"))),
    _act("r", _A(_d("y", "x")), _rho(_A("z"), "B(v)")),
    _act("ell", _A2("z"), _act("r", _A("x"), _rho("y", "v"))),
)
_REP5 = "%s - %s + %s + %s + %s" % (
    _act("ell", _k(_k("x", "y"), _A("z")), "B2(v)"),
    _act("ell", _A2("x"), _act("ell", _A("y"), _act("ell", "z", "v"))),
    _act("ell", _A2("z"), _act("ell", _A("x"), _act("ell", "y", "v"))),
    _act("ell", _A(_k("y", "z")), _act("ell", _A("x"), "B(v)")),
    _act("ell", _A2("y"), _act("ell", _k("x", "z"), "B(v)")),
)

# Alternative bimodule conditions ab1/ab2 are stated in polarized form (the
# one-variable originals set y = x); ab3/ab4 are already bilinear.

_AB1 = "%s - %s - %s" % (
    _act("ell", "%s + %s" % (_d("x", "y"), _d("y", "x")), "B(v)"),
    _act("ell", _A("x"), _act("ell", "y", "v")),
    _act("ell", _A("y"), _act("ell", "x", "v")),
)
_AB2 = "%s - %s - %s" % (
    _act("r", "%s + %s" % (_d("x", "y"), _d("y", "x")), "B(v)"),
    _act("r", _A("y"), _act("r", "x", "v")),
    _act("r", _A("x"), _act("r", "y", "v")),
)
_AB3 = "%s - %s - %s + %s" % (
    _act("r", _A("y"), _act("ell", "x", "v")),
    _act("ell", _A("x"), _act("r", "y", "v")),
    _act("r", _d("x", "y"), "B(v)"),
    _act("r", _A("y"), _act("r", "x", "v")),
)
_AB4 = "%s - %s - %s + %s" % (
    _act("ell", _d("y", "x"), "B(v)"),
    _act("ell", _A("y"), _act("ell", "x", "v")),
    _act("ell", _A("y"), _act("r", "x", "v")),
    _act("r", _A("x"), _act("ell", "y", "v")),
)

# Pre-alternative bimodule conditions, with the definition's combined maps
# expanded: star(x,y) = x prec y + y succ x, L = Lprec + Lsucc, R = Rprec +
# Rsucc. pabm8's final factor is corrected from a repeated-y slip to Rsucc(x);
# as printed it is not bilinear in (x, y).


def _stv(a, b):
    return "%s + %s" % (_pc(a, b), _sc(b, a))


def _Lsum(a, w):
    return "%s + %s" % (_act("lprec", a, w), _act("lsucc", a, w))


def _Rsum(a, w):
    return "%s + %s" % (_act("rprec", a, w), _act("rsucc", a, w))


_PABM = {
    "pabm1": "%s - %s - %s" % (
        _act("lsucc", "%s + %s" % (_stv("x", "y"), _stv("y", "x")), "B(v)"),
        _act("lsucc", _A("x"), _act("lsucc", "y", "v")),
        _act("lsucc", _A("y"), _act("lsucc", "x", "v")),
    ),
    "pabm2": "%s - %s - %s" % (
        _act("rsucc", _A("y"), "%s + %s" % (_Lsum("x", "v"), _Rsum("x", "v"))),
        _act("lsucc", _A("x"), _act("rsucc", "y", "v")),
        _act("rsucc", _sc("x", "y"), "B(v)"),
    ),
    "pabm3": "%s + %s - %s - %s" % (
        _act("rprec", _A("y"), _act("lsucc", "x", "v")),
        _act("rprec", _A("y"), _act("rprec", "x", "v")),
        _act("lsucc", _A("x"), _act("rprec", "y", "v")),
        _act("rprec", _stv("x", "y"), "B(v)"),
    ),
    "pabm4": "%s + %s - %s - %s" % (
        _act("rprec", _A("y"), _act("rsucc", "x", "v")),
        _act("rsucc", _A("y"), _act("lprec", "x", "v")),
        _act("lprec", _A("x"), _Rsum("y", "v")),
        _act("rsucc", _stv("x", "y"), "B(v)"),
    ),
    "pabm5": "%s + %s - %s - %s" % (
        _act("lprec", _pc("y", "x"), "B(v)"),
        _act("lprec", _sc("x", "y"), "B(v)"),
        _act("lprec", _A("y"), _Lsum("x", "v")),
        _act("lsucc", _A("y"), _act("lsucc", "x", "v")),
    ),
    "pabm6": "%s + %s - %s - %s" % (
        _act("rprec", _A("x"), _act("lsucc", "y", "v")),
        _act("lsucc", _sc("y", "x"), "B(v)"),
        _act("lsucc", "y", _act("rprec", "x", "v")),
        _act("lsucc", _A("y"), _act("lsucc", "x", "v")),
    ),
    "pabm7": "%s + %s - %s - %s" % (
        _act("rprec", _A("x"), _act("rsucc", "y", "v")),
        _act("rsucc", _A("y"), _Rsum("x", "v")),
        _act("rsucc", _pc("y", "x"), "B(v)"),
        _act("rsucc", _sc("x", "y"), "B(v)"),
    ),
    "pabm8": "%s + %s - %s - %s" % (
        _act("lprec", _sc("y", "x"), "B(v)"),
        _act("rsucc", _A("x"), _Lsum("y", "v")),
        _act("lsucc", _A("y"), _act("lprec", "x", "v")),
        _act("lsucc", _A("y"), _act("rsucc", "x", "v")),
    ),
    "pabm9": "%s + %s - %s" % (
        _act("rprec", _A("x"), _act("rprec", "y", "v")),
        _act("rprec", _A("y"), _act("rprec", "x", "v")),
        _act("rprec", "%s + %s" % (_stv("x", "y"), _stv("y", "x")), "B(v)"),
    ),
    "pabm10": "%s + %s - %s" % (
        _act("rprec", _A("y"), _act("lprec", "x", "v")),
        _act("lprec", _pc("x", "y"), "B(v)"),
        _act("lprec", _A("x"), "%s + %s" % (_Rsum("y", "v"), _Lsum("y", "v"))),
    ),
}

MODULE_CATALOG = {
    "malcev-representation": {
        "beta-commutation[rho]": (_XV, _commutes("rho")),
        "malcev-representation": (_XYZV, _MALCEV_REP),
    },
    "pre-malcev-bimodule": {
        "beta-commutation[ell]": (_XV, _commutes("ell")),
        "beta-commutation[r]": (_XV, _commutes("r")),
        "rep2": (_XYZV, _REP2),
        "rep3": (_XYZV, _REP3),
        "rep4": (_XYZV, _REP4),
        "rep5": (_XYZV, _REP5),
    },
    "alt-bimodule": {
        "beta-commutation[ell]": (_XV, _commutes("ell")),
        "beta-commutation[r]": (_XV, _commutes("r")),
        "ab1": (_XYV, _AB1),
        "ab2": (_XYV, _AB2),
        "ab3": (_XYV, _AB3),
        "ab4": (_XYV, _AB4),
    },
    "pre-alt-bimodule": dict(
        [("beta-commutation[%s]" % lbl, (_XV, _commutes(lbl)))
         for lbl in ("lsucc", "rsucc", "lprec", "rprec")]
        + [(name, (_XYV, src)) for name, src in _PABM.items()]
    ),
}

_PARSED_ALG = {}
_PARSED_MOD = {}


def class_products(class_name):
    """Product labels an algebra of the given class must carry."""
    try:
        return CLASS_PRODUCTS[class_name]
    except KeyError:
        raise InputError("unknown structure class %r" % class_name) from None


def module_actions(class_name):
    """Action labels a module of the given class must carry."""
    try:
        return MODULE_ACTIONS[class_name]
    except KeyError:
        raise InputError("unknown module class %r" % class_name) from None


def module_base_products(class_name):
    """Algebra product labels the module class's identities use."""
    module_actions(class_name)
    return MODULE_BASE_PRODUCTS[class_name]


def algebra_identities(class_name):
    """Parsed identity catalog for an algebra class, keyed by identity name."""
    if class_name not in _PARSED_ALG:
        try:
            raw = ALGEBRA_CATALOG[class_name]
        except KeyError:
            raise InputError("unknown structure class %r" % class_name) from None
        _PARSED_ALG[class_name] = {
            name: parse_identity(src, decls) for name, (decls, src) in raw.items()
        }
    return _PARSED_ALG[class_name]


def module_identities(class_name):
    """Parsed identity catalog for a module class, keyed by identity name."""
    if class_name not in _PARSED_MOD:
        try:
            raw = MODULE_CATALOG[class_name]
        except KeyError:
            raise InputError("unknown module class %r" % class_name) from None
        _PARSED_MOD[class_name] = {
            name: parse_identity(src, decls) for name, (decls, src) in raw.items()
        }
    return _PARSED_MOD[class_name]


def algebra_sources(class_name):
    """Raw (decls, source) pairs, mainly for round-trip tests."""
    if class_name not in ALGEBRA_CATALOG:
        raise InputError("unknown structure class %r" % class_name)
    return ALGEBRA_CATALOG[class_name]
