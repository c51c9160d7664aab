"""Exact scalars: rational numbers and rational functions in one parameter t.

All arithmetic is exact.  A Scalar is a pair (num, den) of polynomials in the
distinguished parameter symbol ``t`` with Fraction coefficients, kept in
canonical form: num/den coprime, den monic, pure rationals collapse to a
degree-0 numerator over den = 1.  Equality of canonical forms is decidable by
structural comparison.
"""

from __future__ import annotations

from fractions import Fraction

PARAM = "t"

F0 = Fraction(0)
F1 = Fraction(1)

# Polynomials are tuples of Fractions, ascending degree, no trailing zeros.
PZERO: tuple = ()
PONE = (F1,)


def ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b):
    n = max(len(a), len(b))
    return ptrim([(a[i] if i < len(a) else F0) + (b[i] if i < len(b) else F0)
                  for i in range(n)])


def pneg(a):
    return tuple(-x for x in a)


def psub(a, b):
    return padd(a, pneg(b))


def pscale(a, c):
    if c == 0:
        return PZERO
    return tuple(x * c for x in a)


def pmul(a, b):
    if not a or not b:
        return PZERO
    out = [F0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return ptrim(out)


def pdivmod(a, b):
    """Polynomial division over the rationals; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("division by zero")
    q = [F0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    inv = 1 / b[-1]
    while len(r) >= len(b):
        c = r[-1] * inv
        d = len(r) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            r[d + i] -= c * y
        while r and r[-1] == 0:
            r.pop()
    return ptrim(q), ptrim(r)


def pmonic(a):
    if not a:
        return a
    lc = a[-1]
    if lc == 1:
        return a
    return tuple(x / lc for x in a)


def pgcd(a, b):
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def peval(a, x):
    acc = F0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pstr(a, var=PARAM):
    """Render ascending-coefficient polynomial, e.g. ``t^2-1``."""
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            v = var if i == 1 else "%s^%d" % (var, i)
            if c == 1:
                term = v
            elif c == -1:
                term = "-" + v
            else:
                term = "%s*%s" % (c, v)
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


class Scalar:
    """An exact rational number or rational function of the parameter t."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=PONE, _canonical=False):
        if _canonical:
            self.num = num
            self.den = den
            return
        if not den:
            raise ZeroDivisionError("division by zero")
        if not num:
            self.num = PZERO
            self.den = PONE
            return
        if den == PONE:
            self.num = num
            self.den = PONE
            return
        g = pgcd(num, den)
        if len(g) > 1:
            num = pdivmod(num, g)[0]
            den = pdivmod(den, g)[0]
        lc = den[-1]
        if lc != 1:
            num = tuple(x / lc for x in num)
            den = tuple(x / lc for x in den)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_fraction(q):
        q = Fraction(q)
        if q == 0:
            return ZERO
        return Scalar((q,), PONE, _canonical=True)

    @staticmethod
    def param():
        """The parameter symbol t as a scalar."""
        return Scalar((F0, F1), PONE, _canonical=True)

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_rational(self):
        return len(self.num) <= 1 and self.den == PONE

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("scalar %s is not a rational number" % self)
        return self.num[0] if self.num else F0

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if self.den == PONE and other.den == PONE:
            return Scalar(padd(self.num, other.num), PONE, _canonical=True)
        return Scalar(padd(pmul(self.num, other.den), pmul(other.num, self.den)),
                      pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if not self.num or not other.num:
            return ZERO
        if self.den == PONE and other.den == PONE:
            return Scalar(pmul(self.num, other.num), PONE)
        return Scalar(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero")
        return Scalar(pmul(self.num, other.den), pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_fraction(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def substitute(self, value):
        """Evaluate at t = value (a Fraction); error at a pole."""
        value = Fraction(value)
        d = peval(self.den, value)
        if d == 0:
            raise ZeroDivisionError("pole of %s at t=%s" % (self, value))
        return Scalar.from_fraction(peval(self.num, value) / d)

    def depends_on_param(self):
        return len(self.num) > 1 or len(self.den) > 1

    def __str__(self):
        if self.is_rational():
            return str(self.as_fraction())
        ns = pstr(self.num)
        if self.den == PONE:
            return ns
        ds = pstr(self.den)
        if len([c for c in self.num if c != 0]) > 1:
            ns = "(%s)" % ns
        return "%s/(%s)" % (ns, ds)

    def __repr__(self):
        return "Scalar(%s)" % self


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_fraction(x)
    raise TypeError("cannot coerce %r to Scalar" % (x,))


ZERO = Scalar(PZERO, PONE, _canonical=True)
ONE = Scalar(PONE, PONE, _canonical=True)
T = Scalar.param()


def scalar_simplify(s):
    """Recanonicalize a scalar (num/den coprime, den monic, positive rational den)."""
    if isinstance(s, Scalar):
        return Scalar(s.num, s.den)
    return _coerce(s)


# -- text grammar -----------------------------------------------------
#
# expr   := term (('+'|'-') term)*
# term   := factor (('*'|'/') factor)*
# factor := '-' factor | atom ('^' INT)?
# atom   := INT | 't' | '(' expr ')'


class ScalarParseError(ValueError):
    pass


def _tokenize(text):
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j]))
            i = j
        elif c in "+-*/^()":
            toks.append((c, c))
            i += 1
        elif c == PARAM:
            toks.append(("t", c))
            i += 1
        else:
            raise ScalarParseError("unexpected character %r in scalar %r" % (c, text))
    return toks


def parse_scalar(text):
    """Parse the scalar grammar: INT, INT/INT, t, t^INT, sums/products, parens."""
    toks = _tokenize(text)
    pos = [0]

    def peek():
        return toks[pos[0]][0] if pos[0] < len(toks) else None

    def take(kind=None):
        if pos[0] >= len(toks):
            raise ScalarParseError("unexpected end of scalar %r" % text)
        k, v = toks[pos[0]]
        if kind is not None and k != kind:
            raise ScalarParseError("expected %s at %r in %r" % (kind, v, text))
        pos[0] += 1
        return v

    def atom():
        k = peek()
        if k == "int":
            return Scalar.from_fraction(int(take()))
        if k == "t":
            take()
            return T
        if k == "(":
            take()
            v = expr()
            take(")")
            return v
        raise ScalarParseError("malformed scalar %r" % text)

    def factor():
        if peek() == "-":
            take()
            return -factor()
        v = atom()
        if peek() == "^":
            take()
            neg = False
            if peek() == "-":
                take()
                neg = True
            e = int(take("int"))
            out = ONE
            for _ in range(e):
                out = out * v
            v = ONE / out if neg else out
        return v

    def term():
        v = factor()
        while peek() in ("*", "/"):
            op = take()
            w = factor()
            v = v * w if op == "*" else v / w
        return v

    def expr():
        v = term()
        while peek() in ("+", "-"):
            op = take()
            w = term()
            v = v + w if op == "+" else v - w
        return v

    out = expr()
    if pos[0] != len(toks):
        raise ScalarParseError("trailing input in scalar %r" % text)
    return out
