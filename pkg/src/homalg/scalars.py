"""Exact arithmetic in Q(p1, ..., pk).

A Scalar is a quotient num/den of multivariate polynomials with rational
coefficients, kept in a canonical form:

  * gcd(num, den) = 1,
  * den has integer coefficients, is primitive (coefficient gcd 1), and its
    leading coefficient under graded-lexicographic order is positive,
  * den = 1 whenever the denominator is constant.

Equality of scalars is therefore plain structural equality.  There are no
floats anywhere; coefficients are fractions.Fraction.
"""

import re
from fractions import Fraction
from math import gcd as _igcd

from .errors import (
    DenominatorAssumption,
    DenominatorVanishes,
    DivisionByZero,
    ParseError,
    UnknownParameter,
    ZeroDenominator,
)

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class Parameter:
    """A named indeterminate."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        if not _NAME_RE.match(name):
            raise UnknownParameter(f"bad parameter name {name!r}")
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Parameter) and other.name == self.name

    def __hash__(self):
        return hash(("Parameter", self.name))

    def __repr__(self):
        return f"Parameter({self.name!r})"


# ---------------------------------------------------------------------------
# polynomial term dict helpers (exponent tuple -> Fraction, no zero values)

def _grlex_key(exps):
    return (sum(exps), exps)


def _p_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _p_neg(a):
    return {e: -c for e, c in a.items()}


def _p_mul(a, b):
    if not a or not b:
        return {}
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e)
            if s is None:
                out[e] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def _p_scale(a, q):
    if not q:
        return {}
    return {e: c * q for e, c in a.items()}


def _p_lead(a):
    return max(a, key=_grlex_key)


def _p_const(a):
    """Fraction if the poly is constant, else None."""
    if not a:
        return Fraction(0)
    if len(a) == 1:
        e, c = next(iter(a.items()))
        if not any(e):
            return c
    return None


def _p_divexact(a, b):
    """Exact division a / b; raises ArithmeticError if not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    bc = _p_const(b)
    if bc is not None:
        return _p_scale(a, Fraction(1) / bc)
    rem = dict(a)
    out = {}
    lb = _p_lead(b)
    cb = b[lb]
    while rem:
        la = _p_lead(rem)
        e = tuple(x - y for x, y in zip(la, lb))
        if any(x < 0 for x in e):
            raise ArithmeticError("inexact polynomial division")
        q = rem[la] / cb
        out[e] = q
        rem = _p_add(rem, _p_mul({e: -q}, b))
    return out


def _rat_content(a):
    """Positive rational c with a/c integer and primitive; sign of grlex lead kept in a/c."""
    nums = [abs(c.numerator) for c in a.values()]
    dens = [c.denominator for c in a.values()]
    g = 0
    for n in nums:
        g = _igcd(g, n)
    l = 1
    for d in dens:
        l = l * d // _igcd(l, d)
    return Fraction(g, l)


def _p_prim(a):
    """Normalize to integer-primitive with positive grlex leading coefficient."""
    if not a:
        return {}
    c = _rat_content(a)
    out = _p_scale(a, Fraction(1) / c)
    if out[_p_lead(out)] < 0:
        out = _p_neg(out)
    return out


# --- multivariate gcd: content recursion on the last variable ---------------
#
# The driver `_p_gcd` works on Fraction term dicts; everything below the
# integer boundary works on plain int coefficients, which is safe because
# inputs are made integer-primitive first and every division along the
# subresultant remainder sequence has an integral quotient.

def _univ(a, nv):
    """View an nv-variable poly as {degree in last var: poly in nv-1 vars}."""
    out = {}
    for e, c in a.items():
        d = e[nv - 1]
        sub = out.setdefault(d, {})
        sub[e[: nv - 1]] = c
    return out


def _univ_join(u, nv):
    out = {}
    for d, sub in u.items():
        for e, c in sub.items():
            out[e + (d,)] = c
    return out


def _u_degree(u):
    return max(u)


def _u_sub(u, v):
    out = dict(u)
    for d, sub in v.items():
        cur = out.get(d, {})
        cur = _p_add(cur, _p_neg(sub))
        if cur:
            out[d] = cur
        else:
            out.pop(d, None)
    return out


def _u_mul_coeff(u, p):
    return {d: _p_mul(sub, p) for d, sub in u.items()}


def _u_shift(u, k):
    return {d + k: sub for d, sub in u.items()}


def _prem(a, b, nv1):
    """Pseudo-remainder lb^(da-db+1) * a mod b of univariate-view polys."""
    db = _u_degree(b)
    lb = b[db]
    r = a
    e = _u_degree(a) - db + 1
    while r and _u_degree(r) >= db:
        dr = _u_degree(r)
        lr = r[dr]
        r = _u_sub(_u_mul_coeff(r, lb), _u_shift(_u_mul_coeff(b, lr), dr - db))
        e -= 1
    # pad so the multiplier is always exactly lb^(da-db+1)
    if r and e:
        r = _u_mul_coeff(r, _ip_pow(lb, e, len(next(iter(lb)))))
    return r


def _mono_min(a, nv):
    lo = [None] * nv
    for e in a:
        for i, p in enumerate(e):
            if lo[i] is None or p < lo[i]:
                lo[i] = p
    return tuple(x or 0 for x in lo)


def _p_gcd(a, b, nv):
    """gcd as an integer-primitive polynomial with positive grlex lead."""
    if not a:
        return _p_prim(b)
    if not b:
        return _p_prim(a)
    if nv == 0 or _p_const(a) is not None or _p_const(b) is not None:
        return {(0,) * nv: Fraction(1)}
    ia = {e: int(c) for e, c in _p_prim(a).items()}
    ib = {e: int(c) for e, c in _p_prim(b).items()}
    return {e: Fraction(c) for e, c in _ip_gcd(ia, ib, nv).items()}


# --- integer boundary --------------------------------------------------------

_GCD_CACHE = {}
_GCD_CACHE_MAX = 8192


def _ip_prim(a):
    """Divide an int poly by +/- its content so the grlex lead is positive."""
    if not a:
        return {}
    g = 0
    for c in a.values():
        g = _igcd(g, c if c >= 0 else -c)
        if g == 1:
            break
    if a[_p_lead(a)] < 0:
        g = -g
    if g == 1:
        return dict(a)
    return {e: c // g for e, c in a.items()}


def _ip_divexact(a, b):
    """Exact division of int polys; raises ArithmeticError if not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    bc = _p_const(b)
    if bc is not None:
        out = {}
        for e, c in a.items():
            q, r = divmod(c, bc)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out[e] = q
        return out
    rem = dict(a)
    out = {}
    lb = _p_lead(b)
    cb = b[lb]
    while rem:
        la = _p_lead(rem)
        e = tuple(x - y for x, y in zip(la, lb))
        if any(x < 0 for x in e):
            raise ArithmeticError("inexact polynomial division")
        q, r = divmod(rem[la], cb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[e] = q
        rem = _p_add(rem, _p_mul({e: -q}, b))
    return out


def _ip_pow(p, n, nv):
    out = {(0,) * nv: 1}
    for _ in range(n):
        out = _p_mul(out, p)
    return out


def _iu_content(u, nv1):
    g = {}
    for sub in u.values():
        g = _ip_gcd(g, sub, nv1)
        if _p_const(g) is not None:
            return {(0,) * nv1: 1}
    return g


def _iu_prim(u, nv1):
    cont = _iu_content(u, nv1)
    if _p_const(cont) is not None:
        return u, cont
    return {d: _ip_divexact(sub, cont) for d, sub in u.items()}, cont


def _ip_gcd(a, b, nv):
    """gcd of int polys, returned integer-primitive with positive lead."""
    if not a:
        return _ip_prim(b)
    if not b:
        return _ip_prim(a)
    if nv == 0 or _p_const(a) is not None or _p_const(b) is not None:
        return {(0,) * nv: 1}
    # pull out the common monomial factor first
    ma, mb = _mono_min(a, nv), _mono_min(b, nv)
    mg = tuple(min(x, y) for x, y in zip(ma, mb))
    if any(ma) or any(mb):
        a = {tuple(x - y for x, y in zip(e, ma)): c for e, c in a.items()}
        b = {tuple(x - y for x, y in zip(e, mb)): c for e, c in b.items()}
    ka = frozenset(a.items())
    kb = frozenset(b.items())
    core = _GCD_CACHE.get((ka, kb))
    if core is None:
        core = _ip_gcd_core(a, b, nv)
        if len(_GCD_CACHE) >= _GCD_CACHE_MAX:
            _GCD_CACHE.clear()
        _GCD_CACHE[(ka, kb)] = _GCD_CACHE[(kb, ka)] = core
    if any(mg):
        core = {tuple(x + y for x, y in zip(e, mg)): c for e, c in core.items()}
    return core


def _ip_gcd_core(a, b, nv):
    if _p_const(a) is not None or _p_const(b) is not None:
        return {(0,) * nv: 1}
    pa, pb = _ip_prim(a), _ip_prim(b)
    if pa == pb:
        return pa
    # quick divisibility probe (covers most real denominators)
    small, large = (pa, pb) if len(pa) <= len(pb) else (pb, pa)
    try:
        _ip_divexact(large, small)
        return small
    except ArithmeticError:
        pass
    return _ip_prim(_isr_gcd(pa, pb, nv))


def _isr_gcd(a, b, nv):
    """Subresultant PRS gcd in the last variable with nonzero degree."""
    var = nv - 1
    while not any(e[var] for e in a) and not any(e[var] for e in b):
        var -= 1
    if var != nv - 1:
        # move `var` into the last slot so _univ applies
        perm = list(range(nv))
        perm[var], perm[nv - 1] = perm[nv - 1], perm[var]
        sw = lambda p: {tuple(e[i] for i in perm): c for e, c in p.items()}
        out = _isr_gcd(sw(a), sw(b), nv)
        return sw(out)
    ua, ub = _univ(a, nv), _univ(b, nv)
    pa, ca = _iu_prim(ua, nv - 1)
    pb, cb = _iu_prim(ub, nv - 1)
    cg = _ip_gcd(ca if _p_const(ca) is None else {(0,) * (nv - 1): 1},
                 cb if _p_const(cb) is None else {(0,) * (nv - 1): 1}, nv - 1)
    if _u_degree(pa) < _u_degree(pb):
        pa, pb = pb, pa
    one = {(0,) * (nv - 1): 1}
    g, h = one, one
    while True:
        da, db = _u_degree(pa), _u_degree(pb)
        if db == 0:
            # a nonzero degree-0 remainder divides no primitive input,
            # so the primitive parts are coprime in this variable
            gp = {0: one}
            break
        d = da - db
        r = _prem(pa, pb, nv - 1)
        if not r:
            gp, _ = _iu_prim(pb, nv - 1)
            break
        divisor = _p_mul(g, _ip_pow(h, d, nv - 1))
        pa, pb = pb, {k: _ip_divexact(sub, divisor) for k, sub in r.items()}
        g = pa[_u_degree(pa)]
        if d > 0:
            h = _ip_divexact(_ip_pow(g, d, nv - 1), _ip_pow(h, d - 1, nv - 1))
    lift = _univ_join(gp, nv)
    return _p_mul(lift, {e + (0,): c for e, c in cg.items()})


class Polynomial:
    """Multivariate polynomial with Fraction coefficients over a fixed variable count."""

    __slots__ = ("terms", "nvars")

    def __init__(self, nvars: int, terms: dict):
        self.nvars = nvars
        self.terms = terms

    @staticmethod
    def const(nvars, value) -> "Polynomial":
        q = Fraction(value)
        return Polynomial(nvars, {(0,) * nvars: q} if q else {})

    @staticmethod
    def variable(nvars, index) -> "Polynomial":
        e = [0] * nvars
        e[index] = 1
        return Polynomial(nvars, {tuple(e): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def const_value(self):
        return _p_const(self.terms)

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __add__(self, other):
        return Polynomial(self.nvars, _p_add(self.terms, other.terms))

    def __sub__(self, other):
        return Polynomial(self.nvars, _p_add(self.terms, _p_neg(other.terms)))

    def __neg__(self):
        return Polynomial(self.nvars, _p_neg(self.terms))

    def __mul__(self, other):
        return Polynomial(self.nvars, _p_mul(self.terms, other.terms))

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.nvars == self.nvars
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return f"<poly {self.terms!r}>"


# ---------------------------------------------------------------------------
# denominator policy: strict mode and assumption logging (used by the CLI)

class _Policy:
    __slots__ = ("strict", "log", "names")

    def __init__(self):
        self.strict = False
        self.log = None
        self.names = None


_POLICY = _Policy()


class denominator_policy:
    """Context manager switching strictness / assumption collection."""

    def __init__(self, strict=None, log=None, names=None):
        self._new = (strict, log, names)
        self._old = None

    def __enter__(self):
        self._old = (_POLICY.strict, _POLICY.log, _POLICY.names)
        strict, log, names = self._new
        if strict is not None:
            _POLICY.strict = strict
        _POLICY.log = log
        _POLICY.names = names
        return log

    def __exit__(self, *exc):
        _POLICY.strict, _POLICY.log, _POLICY.names = self._old
        return False


def _note_denominator(den_terms, names):
    if _POLICY.log is None and not _POLICY.strict:
        return
    text = _render_poly(den_terms, names or _POLICY.names or ())
    if _POLICY.log is not None:
        _POLICY.log.add(text)
    if _POLICY.strict:
        raise DenominatorAssumption(
            f"denominator {text} is assumed nonzero; pass --assume-nonzero to accept"
        )


# ---------------------------------------------------------------------------

class Scalar:
    """Element of Q(params), canonical num/den pair."""

    __slots__ = ("num", "den", "space", "_hash")

    def __init__(self, space, num: Polynomial, den: Polynomial, _normalized=False):
        self.space = space
        self._hash = None
        if _normalized:
            self.num = num
            self.den = den
            return
        n, d = _normalize(num.terms, den.terms, space)
        self.num = Polynomial(space.k, n)
        self.den = Polynomial(space.k, d)

    # -- queries --

    def is_zero(self):
        return not self.num.terms

    def is_one(self):
        return self.num.const_value() == 1 and self.den.const_value() == 1

    def const_value(self):
        """Fraction if this scalar is a rational constant, else None."""
        n = self.num.const_value()
        if n is None:
            return None
        d = self.den.const_value()
        if d is None:
            return None
        return n / d

    def as_fraction(self):
        v = self.const_value()
        if v is None:
            raise ValueError(f"scalar {self.render()} is not constant")
        return v

    # -- arithmetic --

    def _chk(self, other):
        if not isinstance(other, Scalar):
            raise TypeError(f"cannot combine Scalar with {type(other).__name__}")
        if other.space is not self.space and other.space != self.space:
            raise ValueError("scalars from different parameter spaces")

    def __add__(self, other):
        self._chk(other)
        if not self.num.terms:
            return other
        if not other.num.terms:
            return self
        return _s_addsub(self, other, False)

    def __sub__(self, other):
        self._chk(other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return -other
        return _s_addsub(self, other, True)

    def __neg__(self):
        return Scalar(self.space, -self.num, self.den, _normalized=True)

    def __mul__(self, other):
        self._chk(other)
        if not self.num.terms or not other.num.terms:
            return self.space.zero
        ca, cb = self.const_value(), other.const_value()
        if ca is not None and cb is not None:
            return self.space.const(ca * cb)
        return _s_mul(self, other)

    def __truediv__(self, other):
        self._chk(other)
        if other.is_zero():
            raise DivisionByZero("division by zero scalar")
        if not self.num.terms:
            return self.space.zero
        return _s_mul(self, other.inv())

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero scalar")
        space = self.space
        n = self.num.terms
        p = _p_prim(n)
        e = next(iter(p))
        lam = n[e] / p[e]
        num = _p_scale(self.den.terms, Fraction(1) / lam)
        if _p_const(p) is None:
            _note_denominator(p, space.names)
        return _raw(space, num, p)

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and other.space == self.space
            and other.num == self.num
            and other.den == self.den
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- substitution --

    def subst(self, bindings, target=None):
        """Substitute parameter values (name -> rational); unbound parameters survive.

        Raises DenominatorVanishes if the denominator becomes zero.
        """
        space = self.space
        if target is None:
            target = space.reduce(bindings)
        n = _subst_terms(self.num.terms, space, bindings, target)
        d = _subst_terms(self.den.terms, space, bindings, target)
        if not d:
            raise DenominatorVanishes(
                f"denominator {_render_poly(self.den.terms, space.names)} vanishes under "
                + ", ".join(f"{k}={v}" for k, v in sorted(bindings.items()))
            )
        return Scalar(target, Polynomial(target.k, n), Polynomial(target.k, d))

    def render(self) -> str:
        return render_scalar(self)

    def __repr__(self):
        return f"<scalar {self.render()}>"


def _normalize(num, den, space):
    if not den:
        raise ZeroDenominator("zero denominator")
    if not num:
        return {}, {(0,) * space.k: Fraction(1)}
    dc = _p_const(den)
    if dc is not None:
        return _p_scale(num, Fraction(1) / dc), {(0,) * space.k: Fraction(1)}
    g = _p_gcd(num, den, space.k)
    if _p_const(g) is None:
        num = _p_divexact(num, g)
        den = _p_divexact(den, g)
        dc = _p_const(den)
        if dc is not None:
            return _p_scale(num, Fraction(1) / dc), {(0,) * space.k: Fraction(1)}
    c = _rat_content(den)
    if den[_p_lead(den)] < 0:
        c = -c
    num = _p_scale(num, Fraction(1) / c)
    den = _p_scale(den, Fraction(1) / c)
    _note_denominator(den, space.names)
    return num, den


def _raw(space, num_t, den_t):
    """Scalar from an already-canonical coprime pair; skips normalization."""
    return Scalar(space, Polynomial(space.k, num_t), Polynomial(space.k, den_t),
                  _normalized=True)


def _s_addsub(a, b, negate):
    """Sum of reduced fractions, reduced; only gcds of denominators appear.

    With gcd(na, da) = gcd(nb, db) = 1 the result of the textbook scheme
    (split off d1 = gcd(da, db), then reduce the numerator against d1) is
    again in lowest terms, so no full-product gcd is ever computed.
    """
    space = a.space
    k = space.k
    na, da = a.num.terms, a.den.terms
    nb, db = b.num.terms, b.den.terms
    if negate:
        nb = _p_neg(nb)
    if da == db:
        t = _p_add(na, nb)
        if not t:
            return space.zero
        if _p_const(da) is not None:
            return _raw(space, t, da)
        g = _p_gcd(t, da, k)
        if _p_const(g) is None:
            t = _p_divexact(t, g)
            da = _p_divexact(da, g)
        return _raw(space, t, da)
    d1 = _p_gcd(da, db, k)
    if _p_const(d1) is not None:
        t = _p_add(_p_mul(na, db), _p_mul(nb, da))
        if not t:
            return space.zero
        return _raw(space, t, _p_mul(da, db))
    a1 = _p_divexact(da, d1)
    t = _p_add(_p_mul(na, _p_divexact(db, d1)), _p_mul(nb, a1))
    if not t:
        return space.zero
    d2 = _p_gcd(t, d1, k)
    if _p_const(d2) is None:
        t = _p_divexact(t, d2)
        db = _p_divexact(db, d2)
    return _raw(space, t, _p_mul(a1, db))


def _s_mul(a, b):
    """Product of reduced fractions via cross-reduction, again in lowest terms."""
    space = a.space
    k = space.k
    na, da = a.num.terms, a.den.terms
    nb, db = b.num.terms, b.den.terms
    d1 = _p_gcd(na, db, k)
    if _p_const(d1) is None:
        na = _p_divexact(na, d1)
        db = _p_divexact(db, d1)
    d2 = _p_gcd(nb, da, k)
    if _p_const(d2) is None:
        nb = _p_divexact(nb, d2)
        da = _p_divexact(da, d2)
    return _raw(space, _p_mul(na, nb), _p_mul(da, db))


def _subst_terms(terms, space, bindings, target):
    vals = {}
    for name, v in bindings.items():
        if name not in space.names:
            raise UnknownParameter(f"unknown parameter {name!r}")
        vals[space.names.index(name)] = Fraction(v)
    out = {}
    for e, c in terms.items():
        coeff = c
        new = []
        for i, p in enumerate(e):
            if i in vals:
                coeff = coeff * vals[i] ** p
            else:
                new.append(p)
        key = tuple(new)
        s = out.get(key)
        s = coeff if s is None else s + coeff
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


class ParamSpace:
    """Ordered set of parameters; owner of all Scalars built over it."""

    def __init__(self, names=()):
        seen = []
        for n in names:
            n = n.name if isinstance(n, Parameter) else n
            if not _NAME_RE.match(n):
                raise UnknownParameter(f"bad parameter name {n!r}")
            if n in seen:
                raise UnknownParameter(f"duplicate parameter {n!r}")
            seen.append(n)
        self.names = tuple(seen)
        self.k = len(self.names)
        self.zero = Scalar(self, Polynomial.const(self.k, 0),
                           Polynomial.const(self.k, 1), _normalized=True)
        self.one = Scalar(self, Polynomial.const(self.k, 1),
                          Polynomial.const(self.k, 1), _normalized=True)

    def const(self, value) -> Scalar:
        q = Fraction(value)
        if not q:
            return self.zero
        return Scalar(self, Polynomial.const(self.k, q),
                      Polynomial.const(self.k, 1), _normalized=True)

    def var(self, name) -> Scalar:
        if name not in self.names:
            raise UnknownParameter(f"unknown parameter {name!r}")
        return Scalar(self, Polynomial.variable(self.k, self.names.index(name)),
                      Polynomial.const(self.k, 1), _normalized=True)

    def parse(self, text) -> Scalar:
        return parse_scalar(text, self)

    def reduce(self, bindings):
        """Space left after binding some parameters."""
        return ParamSpace([n for n in self.names if n not in bindings])

    def __eq__(self, other):
        return isinstance(other, ParamSpace) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"ParamSpace({list(self.names)!r})"


# ---------------------------------------------------------------------------
# rendering; output stays inside the accepted grammar (no ^ operator)

def _render_mono(e, names):
    parts = []
    for i, p in enumerate(e):
        parts.extend([names[i]] * p)
    return "*".join(parts)


def _render_term(coeff, mono):
    """coeff is a positive Fraction here; sign handled by the caller."""
    pieces = []
    if coeff.numerator != 1 or not mono:
        pieces.append(str(coeff.numerator))
    if mono:
        pieces.append(mono)
    text = "*".join(pieces)
    if coeff.denominator != 1:
        text += f"/{coeff.denominator}"
    return text


def _render_poly(terms, names):
    if not terms:
        return "0"
    order = sorted(terms, key=_grlex_key, reverse=True)
    out = []
    for e in order:
        c = terms[e]
        mono = _render_mono(e, names)
        body = _render_term(abs(c), mono)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


def _poly_is_bare_factor(terms):
    """True if the rendering is a single factor needing no parentheses."""
    if len(terms) != 1:
        return False
    (e, c), = terms.items()
    if c < 0:
        return False
    n = sum(e)
    if n == 0:
        return c.denominator == 1
    return n == 1 and c == 1


def render_scalar(s: Scalar) -> str:
    num = _render_poly(s.num.terms, s.space.names)
    if s.den.const_value() == 1:
        return num
    den = _render_poly(s.den.terms, s.space.names)
    if len(s.num.terms) > 1 or num.startswith("-") or "/" in num:
        num = f"({num})"
    if not _poly_is_bare_factor(s.den.terms):
        den = f"({den})"
    return f"{num}/{den}"


# ---------------------------------------------------------------------------
# parser for:  expr := term (('+'|'-') term)*
#              term := factor (('*'|'/') factor)*
#              factor := integer | parameter | '(' expr ')' | '-' factor

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|([()+\-*/]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.group(1):
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            out.append(("name", m.group(2), m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _ScalarParser:
    def __init__(self, text, space):
        self.toks = _tokenize(text)
        self.i = 0
        self.space = space

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self):
        v = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                w = self.term()
                v = v + w if val == "+" else v - w
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                w = self.factor()
                v = v * w if val == "*" else v / w
            else:
                return v

    def factor(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.space.const(val)
        if kind == "name":
            if val not in self.space.names:
                raise UnknownParameter(f"unknown parameter {val!r}")
            return self.space.var(val)
        if kind == "op" and val == "(":
            v = self.expr()
            kind, val, pos = self.take()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", pos)
            return v
        if kind == "op" and val == "-":
            return -self.factor()
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_scalar(text: str, space: ParamSpace) -> Scalar:
    if isinstance(space, (list, tuple)):
        space = ParamSpace(space)
    p = _ScalarParser(text, space)
    v = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"trailing input {val!r}", pos)
    return v
