"""Identity DSL: parser, sort and multilinearity checks, basis evaluation.

Grammar:

    expr := ['-'] term (('+'|'-') term)*
    term := [scalar '*'] atom
    atom := var
          | 'A' k? '(' expr ')'          twist of the algebra, k-th power
          | 'B' k? '(' expr ')'          twist of the module
          | 'p(' label ',' expr ',' expr ')'    product application
          | 'act(' label ',' expr ',' expr ')'  module action
          | 'w(' label ',' expr ',' expr ')'    bilinear form application

Every variable is declared up front with a sort: "algebra" or "module".
An identity must be multilinear: each declared variable occurs exactly
once in every additive monomial.  Checking enumerates all basis tuples,
which by multilinearity certifies the identity on the whole space.
"""

import os
import re
from concurrent.futures import ThreadPoolExecutor
from itertools import product as _cartesian

from .errors import (
    MissingAction,
    MissingProduct,
    NotMultilinear,
    ParseError,
    SortError,
    UnknownLabel,
)
from .structures import Report, Violation, render_vector

ALGEBRA = "algebra"
MODULE = "module"
_SORTS = {
    "algebra": ALGEBRA, "a": ALGEBRA,
    "module": MODULE, "m": MODULE,
}


class Var:
    __slots__ = ("name", "sort")

    def __init__(self, name, sort):
        self.name = name
        self.sort = sort

    def __repr__(self):
        return f"Var({self.name!r})"


class TwistA:
    __slots__ = ("power", "child")

    def __init__(self, power, child):
        self.power = power
        self.child = child

    def __repr__(self):
        return f"TwistA({self.power}, {self.child!r})"


class TwistB:
    __slots__ = ("power", "child")

    def __init__(self, power, child):
        self.power = power
        self.child = child

    def __repr__(self):
        return f"TwistB({self.power}, {self.child!r})"


class Prod:
    __slots__ = ("label", "left", "right")

    def __init__(self, label, left, right):
        self.label = label
        self.left = left
        self.right = right

    def __repr__(self):
        return f"Prod({self.label!r}, {self.left!r}, {self.right!r})"


class Act:
    __slots__ = ("label", "left", "right")

    def __init__(self, label, left, right):
        self.label = label
        self.left = left
        self.right = right

    def __repr__(self):
        return f"Act({self.label!r}, {self.left!r}, {self.right!r})"


class Form:
    """Application of a named bilinear form; the value is a scalar."""

    __slots__ = ("label", "left", "right")

    def __init__(self, label, left, right):
        self.label = label
        self.left = left
        self.right = right

    def __repr__(self):
        return f"Form({self.label!r}, {self.left!r}, {self.right!r})"


class Scale:
    """Rational (or parameter) coefficient in front of an atom."""

    __slots__ = ("coeff", "child")

    def __init__(self, coeff, child):
        self.coeff = coeff  # scalar source text, parsed against the algebra's space
        self.child = child

    def __repr__(self):
        return f"Scale({self.coeff!r}, {self.child!r})"


class Sum:
    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple(terms)  # (sign, node) pairs, sign is +1 or -1

    def __repr__(self):
        return f"Sum({self.terms!r})"


class IdentityExpr:
    """A parsed identity: AST root plus the variable declarations."""

    __slots__ = ("root", "decls", "scalar_sorted")

    def __init__(self, root, decls):
        self.root = root
        self.decls = dict(decls)
        self.scalar_sorted = _sort_of(root, self.decls) == "scalar"

    def render(self) -> str:
        return render_expr(self.root)

    def variables(self):
        return list(self.decls)

    def __repr__(self):
        return f"<identity {self.render()}>"


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        if m.group(1) is not None:
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/(),":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            out.append((ch, ch, m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


_TWIST_RE = re.compile(r"([AB])(\d*)\Z")


class _Parser:
    def __init__(self, text, decls):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.decls = decls

    def peek(self, ahead=0):
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def next(self):
        t = self.toks[self.i]
        if t[0] != "end":
            self.i += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}, got {t[1]!r}", t[2])
        return t

    def fail(self, msg):
        t = self.peek()
        raise ParseError(msg, t[2])

    # expr := ['-'] term (('+'|'-') term)*
    def expr(self):
        terms = []
        sign = 1
        if self.peek()[0] == "-":
            self.next()
            sign = -1
        terms.append((sign, self.term()))
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            terms.append((1 if op == "+" else -1, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(terms)

    # term := [scalar '*'] atom
    def term(self):
        if self._at_atom():
            return self.atom()
        if self.peek()[0] in ("end", ")", ","):
            self.fail("expected a term")
        coeff = self._scalar_chain()
        return Scale(coeff, self.atom())

    def _at_atom(self):
        kind, val, _ = self.peek()
        if kind != "name":
            return False
        if self.peek(1)[0] == "(":
            return val in ("p", "act", "w") or _TWIST_RE.match(val) is not None
        return val in self.decls

    def atom(self):
        kind, val, pos = self.next()
        if kind != "name":
            raise ParseError(f"expected a variable or application, got {val!r}", pos)
        if self.peek()[0] != "(":
            if val not in self.decls:
                raise ParseError(f"undeclared variable {val!r}", pos)
            return Var(val, self.decls[val])
        if val in ("p", "act", "w"):
            self.expect("(")
            label = self.expect("name")[1]
            self.expect(",")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            node = {"p": Prod, "act": Act, "w": Form}[val]
            return node(label, left, right)
        m = _TWIST_RE.match(val)
        if m is None:
            raise ParseError(f"unknown application {val!r}", pos)
        power = int(m.group(2)) if m.group(2) else 1
        self.expect("(")
        child = self.expr()
        self.expect(")")
        return (TwistA if m.group(1) == "A" else TwistB)(power, child)

    # scalar chain: sfactor (('*'|'/') sfactor)*, stopping at '*' atom
    def _scalar_chain(self):
        pieces = [self._scalar_factor()]
        while self.peek()[0] in ("*", "/"):
            op = self.peek()[0]
            if op == "*" and self._at_atom_after_star():
                self.next()
                return "".join(pieces)
            self.next()
            pieces.append(op)
            pieces.append(self._scalar_factor())
        self.fail("expected '*' and an atom after the coefficient")

    def _at_atom_after_star(self):
        save = self.i
        self.i += 1
        ok = self._at_atom()
        self.i = save
        return ok

    def _scalar_factor(self):
        kind, val, pos = self.next()
        if kind == "int":
            return val
        if kind == "name":
            return val
        if kind == "-":
            return "-" + self._scalar_factor()
        if kind == "(":
            inner = [self._scalar_expr_text()]
            self.expect(")")
            return "(" + "".join(inner) + ")"
        raise ParseError(f"bad scalar factor {val!r}", pos)

    def _scalar_expr_text(self):
        # a parenthesized scalar subexpression, reproduced as text
        pieces = [self._scalar_factor()]
        while self.peek()[0] in ("+", "-", "*", "/"):
            pieces.append(self.next()[0])
            pieces.append(self._scalar_factor())
        return "".join(pieces)


def parse_identity(source: str, var_decls) -> IdentityExpr:
    """Parse and fully check an identity expression.

    var_decls maps variable names to sorts ("algebra"/"module", or "a"/"m").
    """
    decls = {}
    for name, sort in dict(var_decls).items():
        s = _SORTS.get(str(sort).lower())
        if s is None:
            raise SortError(f"unknown sort {sort!r} for variable {name!r}")
        decls[name] = s
    p = _Parser(source, decls)
    root = p.expr()
    t = p.peek()
    if t[0] != "end":
        raise ParseError(f"trailing input {t[1]!r}", t[2])
    expr = IdentityExpr(root, decls)
    _check_multilinear(expr)
    return expr


# ---------------------------------------------------------------------------
# static checks

def _sort_of(node, decls):
    if isinstance(node, Var):
        return node.sort
    if isinstance(node, TwistA):
        s = _sort_of(node.child, decls)
        if s != ALGEBRA:
            raise SortError("A(...) needs an algebra-sorted argument")
        return ALGEBRA
    if isinstance(node, TwistB):
        s = _sort_of(node.child, decls)
        if s != MODULE:
            raise SortError("B(...) needs a module-sorted argument")
        return MODULE
    if isinstance(node, Prod):
        for side, which in ((node.left, "left"), (node.right, "right")):
            if _sort_of(side, decls) != ALGEBRA:
                raise SortError(
                    f"p({node.label},...) needs algebra-sorted arguments "
                    f"({which} side is not)"
                )
        return ALGEBRA
    if isinstance(node, Act):
        if _sort_of(node.left, decls) != ALGEBRA:
            raise SortError(f"act({node.label},...) needs an algebra-sorted left argument")
        if _sort_of(node.right, decls) != MODULE:
            raise SortError(f"act({node.label},...) needs a module-sorted right argument")
        return MODULE
    if isinstance(node, Form):
        for side in (node.left, node.right):
            if _sort_of(side, decls) != ALGEBRA:
                raise SortError(f"w({node.label},...) needs algebra-sorted arguments")
        return "scalar"
    if isinstance(node, Scale):
        return _sort_of(node.child, decls)
    if isinstance(node, Sum):
        sorts = {_sort_of(t, decls) for _, t in node.terms}
        if len(sorts) != 1:
            raise SortError(f"sum mixes sorts {sorted(sorts)}")
        return sorts.pop()
    raise TypeError(f"not an AST node: {node!r}")


def _monomials(node):
    """Set of additive monomials, each a sorted tuple of variable names."""
    if isinstance(node, Var):
        return {(node.name,)}
    if isinstance(node, (TwistA, TwistB, Scale)):
        return _monomials(node.child)
    if isinstance(node, (Prod, Act, Form)):
        return {
            tuple(sorted(a + b))
            for a in _monomials(node.left)
            for b in _monomials(node.right)
        }
    if isinstance(node, Sum):
        out = set()
        for _, t in node.terms:
            out |= _monomials(t)
        return out
    raise TypeError(f"not an AST node: {node!r}")


def _check_multilinear(expr: IdentityExpr):
    want = tuple(sorted(expr.decls))
    for mono in sorted(_monomials(expr.root)):
        seen = set()
        for name in mono:
            if name in seen:
                raise NotMultilinear(
                    f"variable {name!r} appears more than once in monomial "
                    f"({', '.join(mono)})"
                )
            seen.add(name)
        if mono != want:
            missing = sorted(set(want) - seen)
            raise NotMultilinear(
                f"monomial ({', '.join(mono)}) does not use "
                f"variable(s) {', '.join(repr(m) for m in missing)}"
            )


# ---------------------------------------------------------------------------
# rendering (kept inside the grammar; parse(render(e)) == e structurally)

def render_expr(node) -> str:
    if isinstance(node, Sum):
        parts = []
        for sign, t in node.terms:
            body = _render_term(t)
            if not parts:
                parts.append(body if sign > 0 else "-" + body)
            else:
                parts.append((" + " if sign > 0 else " - ") + body)
        return "".join(parts)
    return _render_term(node)


def _render_term(node) -> str:
    if isinstance(node, Scale):
        return f"{node.coeff}*{_render_atom(node.child)}"
    return _render_atom(node)


def _render_atom(node) -> str:
    if isinstance(node, Var):
        return node.name
    if isinstance(node, TwistA):
        k = "" if node.power == 1 else str(node.power)
        return f"A{k}({render_expr(node.child)})"
    if isinstance(node, TwistB):
        k = "" if node.power == 1 else str(node.power)
        return f"B{k}({render_expr(node.child)})"
    if isinstance(node, Prod):
        return f"p({node.label},{render_expr(node.left)},{render_expr(node.right)})"
    if isinstance(node, Act):
        return f"act({node.label},{render_expr(node.left)},{render_expr(node.right)})"
    if isinstance(node, Form):
        return f"w({node.label},{render_expr(node.left)},{render_expr(node.right)})"
    raise TypeError(f"cannot render {node!r} as an atom")


def expr_equal(a, b) -> bool:
    """Structural equality of two AST roots."""
    if type(a) is not type(b):
        return False
    if isinstance(a, Var):
        return a.name == b.name and a.sort == b.sort
    if isinstance(a, (TwistA, TwistB)):
        return a.power == b.power and expr_equal(a.child, b.child)
    if isinstance(a, (Prod, Act, Form)):
        return (a.label == b.label and expr_equal(a.left, b.left)
                and expr_equal(a.right, b.right))
    if isinstance(a, Scale):
        return a.coeff == b.coeff and expr_equal(a.child, b.child)
    if isinstance(a, Sum):
        return len(a.terms) == len(b.terms) and all(
            sa == sb and expr_equal(ta, tb)
            for (sa, ta), (sb, tb) in zip(a.terms, b.terms)
        )
    return False


def relabel(expr: IdentityExpr, products=None, actions=None) -> IdentityExpr:
    """Copy of an identity with product and action labels substituted.

    Lets one catalog serve structures whose products carry different names
    (for instance checking a derived "diamond" product against identities
    written for "dot"). Labels absent from the mappings pass through.
    """
    products = products or {}
    actions = actions or {}

    def walk(node):
        if isinstance(node, Var):
            return node
        if isinstance(node, TwistA):
            return TwistA(node.power, walk(node.child))
        if isinstance(node, TwistB):
            return TwistB(node.power, walk(node.child))
        if isinstance(node, Prod):
            return Prod(products.get(node.label, node.label),
                        walk(node.left), walk(node.right))
        if isinstance(node, Act):
            return Act(actions.get(node.label, node.label),
                       walk(node.left), walk(node.right))
        if isinstance(node, Form):
            return Form(node.label, walk(node.left), walk(node.right))
        if isinstance(node, Scale):
            return Scale(node.coeff, walk(node.child))
        if isinstance(node, Sum):
            return Sum((sign, walk(child)) for sign, child in node.terms)
        raise TypeError(f"cannot relabel {node!r}")

    return IdentityExpr(walk(expr.root), expr.decls)


# ---------------------------------------------------------------------------
# evaluation

class _Env:
    """Evaluation context: algebra, optional module, optional forms."""

    __slots__ = ("alg", "mod", "forms", "coeffs")

    def __init__(self, alg, mod=None, forms=None):
        self.alg = alg
        self.mod = mod
        self.forms = forms or {}
        self.coeffs = {}

    def coeff(self, text):
        s = self.coeffs.get(text)
        if s is None:
            s = self.alg.space.parse(text)
            self.coeffs[text] = s
        return s


def _eval(node, env, assign, memo):
    key = id(node)
    hit = memo.get(key)
    if hit is not None:
        return hit
    alg = env.alg
    if isinstance(node, Var):
        val = {assign[node.name]: alg.space.one}
    elif isinstance(node, TwistA):
        val = alg.twist_power(node.power).apply(_eval(node.child, env, assign, memo))
    elif isinstance(node, TwistB):
        if env.mod is None:
            raise MissingAction("identity uses B(...) but no module was given")
        val = env.mod.twist_power(node.power).apply(
            _eval(node.child, env, assign, memo))
    elif isinstance(node, Prod):
        if not alg.has(node.label):
            raise MissingProduct(
                f"algebra lacks product {node.label!r}; have {sorted(alg.products)}"
            )
        val = alg.product(node.label).eval_sparse(
            _eval(node.left, env, assign, memo),
            _eval(node.right, env, assign, memo))
    elif isinstance(node, Act):
        if env.mod is None:
            raise MissingAction(f"identity uses act({node.label},...) but no module was given")
        val = env.mod.act_sparse(
            node.label,
            _eval(node.left, env, assign, memo),
            _eval(node.right, env, assign, memo))
    elif isinstance(node, Form):
        mat = env.forms.get(node.label)
        if mat is None:
            raise UnknownLabel(f"no bilinear form {node.label!r} supplied")
        u = _eval(node.left, env, assign, memo)
        v = _eval(node.right, env, assign, memo)
        val = _form_value(mat, u, v, alg.space)
    elif isinstance(node, Scale):
        c = env.coeff(node.coeff)
        inner = _eval(node.child, env, assign, memo)
        if isinstance(inner, dict):
            val = {k: c * x for k, x in inner.items() if not (c * x).is_zero()}
        else:
            val = c * inner
    elif isinstance(node, Sum):
        val = None
        for sign, t in node.terms:
            piece = _eval(t, env, assign, memo)
            if val is None:
                if isinstance(piece, dict):
                    val = dict(piece) if sign > 0 else {k: -x for k, x in piece.items()}
                else:
                    val = piece if sign > 0 else -piece
            elif isinstance(piece, dict):
                for k, x in piece.items():
                    s = val.get(k)
                    term = x if sign > 0 else -x
                    s = term if s is None else s + term
                    if s.is_zero():
                        val.pop(k, None)
                    else:
                        val[k] = s
            else:
                val = val + piece if sign > 0 else val - piece
    else:
        raise TypeError(f"not an AST node: {node!r}")
    memo[key] = val
    return val


def _form_value(mat, u, v, space):
    acc = space.zero
    for i, a in u.items():
        for j, b in v.items():
            m = mat.rows[i][j]
            if m.is_zero():
                continue
            acc = acc + m * (a * b)
    return acc


def eval_identity(expr: IdentityExpr, alg, mod=None, assignment=None, forms=None):
    """Residual of one basis assignment: sparse vector, or Scalar for form identities."""
    env = _Env(alg, mod, forms)
    return _eval(expr.root, env, dict(assignment or {}), {})


def check_identity(expr: IdentityExpr, alg, mod=None, forms=None,
                   name="identity", stop_early=False) -> Report:
    """Evaluate on every basis tuple; report violations in lexicographic order."""
    names = list(expr.decls)
    dims = []
    for n in names:
        if expr.decls[n] == ALGEBRA:
            dims.append(alg.dim)
        else:
            if mod is None:
                raise MissingAction("identity has module variables but no module was given")
            dims.append(mod.mdim)
    env = _Env(alg, mod, forms)
    tuples = list(_cartesian(*(range(d) for d in dims))) if names else [()]
    workers = _worker_count()

    def run(chunk):
        found = []
        for tup in chunk:
            assign = dict(zip(names, tup))
            val = _eval(expr.root, env, assign, {})
            if isinstance(val, dict):
                bad = bool(val)
                shown = render_vector(val)
            else:
                bad = not val.is_zero()
                shown = val.render()
            if bad:
                found.append(Violation(name, tup, shown))
                if stop_early:
                    break
        return found

    if workers > 1 and len(tuples) >= 64 and not stop_early:
        size = (len(tuples) + workers - 1) // workers
        chunks = [tuples[i:i + size] for i in range(0, len(tuples), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, chunks))
        violations = [v for part in results for v in part]
    else:
        violations = run(tuples)
    return Report(not violations, identities=1, tuples=len(tuples),
                  violations=violations)


def _worker_count():
    raw = os.environ.get("HOMALG_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(n, 1)
