"""Exact arithmetic over Q(sqrt d), polynomials in q over it, and fractions.

Everything downstream (torus orders, the matrices of the algorithm, value
tables) is expressed with these types, so equality is always decidable.
"""

from fractions import Fraction
import re

ALLOWED_D = (1, 2, 3)


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("cannot use %r as an exact rational" % (x,))


class QuadRational:
    """The number ``a + b*sqrt(d)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        if d not in ALLOWED_D:
            raise ValueError("unsupported base surd d=%r" % (d,))
        a = _frac(a)
        b = _frac(b)
        if d == 1:
            a, b = a + b, Fraction(0)
        self.a = a
        self.b = b
        self.d = d

    @property
    def rational_part(self):
        return self.a

    @property
    def surd_part(self):
        return self.b

    def _coerce(self, other):
        if isinstance(other, QuadRational):
            if other.d != self.d:
                raise ValueError("cannot combine values over sqrt%d and sqrt%d" % (self.d, other.d))
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRational(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadRational(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadRational(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadRational(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, e = self.a, self.b, other.a, other.b
        return QuadRational(a * c + self.d * b * e, a * e + b * c, self.d)

    __rmul__ = __mul__

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            # a^2 = d b^2 has no nonzero rational solution for square-free d > 1
            raise ZeroDivisionError("division by zero in Q(sqrt%d)" % self.d)
        return QuadRational(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadRational(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        """Galois conjugate a - b*sqrt(d)."""
        return QuadRational(self.a, -self.b, self.d)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadRational):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return "QuadRational(%s, %s, d=%d)" % (self.a, self.b, self.d)

    def __str__(self):
        return render_scalar(self)

    def to_json(self):
        return [_frac_str(self.a), _frac_str(self.b)]

    @classmethod
    def from_json(cls, pair, d):
        return cls(Fraction(pair[0]), Fraction(pair[1]), d)


def quad_arith(x, y, op):
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two values of Q(sqrt d)."""
    if x.d != y.d:
        raise ValueError("mismatched base: sqrt%d vs sqrt%d" % (x.d, y.d))
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError("unknown operation %r" % (op,))


def sqrt_d(d):
    return QuadRational(0, 1, d)


def _frac_str(x):
    return "%d/%d" % (x.numerator, x.denominator)


class Poly:
    """Polynomial in ``q`` with coefficients in Q(sqrt d), lowest degree first."""

    __slots__ = ("coeffs", "d")

    def __init__(self, coeffs=(), d=1):
        cs = [c if isinstance(c, QuadRational) else QuadRational(c, 0, d) for c in coeffs]
        for c in cs:
            if c.d != d:
                raise ValueError("coefficient over sqrt%d in a polynomial over sqrt%d" % (c.d, d))
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self.d = d

    @classmethod
    def q(cls, d=1):
        return cls((0, 1), d)

    @classmethod
    def const(cls, c, d=1):
        return cls((c,), d)

    @classmethod
    def monomial(cls, n, c=1, d=1):
        return cls([0] * n + [c], d)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self):
        return self.coeffs[-1] if self.coeffs else QuadRational(0, 0, self.d)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.d != self.d:
                raise ValueError("cannot combine polynomials over sqrt%d and sqrt%d" % (self.d, other.d))
            return other
        if isinstance(other, (int, Fraction, QuadRational)):
            return Poly((other,), self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadRational)):
            return Poly([c * other for c in self.coeffs], self.d)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly((1,), self.d)
        base = self
        while n:
            if n & 1:
                result = poly_mul(result, base)
            base = poly_mul(base, base)
            n >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other):
        return poly_divmod(self, self._coerce(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, self._coerce(other))[1]

    def shift(self, n):
        """Multiply by q**n."""
        if not self.coeffs:
            return self
        return Poly([QuadRational(0, 0, self.d)] * n + list(self.coeffs), self.d)

    def monic(self):
        if not self.coeffs:
            return self
        inv = self.coeffs[-1].inverse()
        return Poly([c * inv for c in self.coeffs], self.d)

    def conjugate(self):
        return Poly([c.conjugate() for c in self.coeffs], self.d)

    def __call__(self, x):
        acc = QuadRational(0, 0, self.d) if not isinstance(x, Poly) else Poly((), self.d)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_surd_free(self):
        return all(c.b == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadRational)):
            other = Poly((other,), self.d)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.d))

    def __repr__(self):
        return "Poly(%s)" % render_poly(self)

    def __str__(self):
        return render_poly(self)

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data, d):
        return cls([QuadRational.from_json(p, d) for p in data], d)


def poly_mul(a, b):
    if a.d != b.d:
        raise ValueError("mismatched base: sqrt%d vs sqrt%d" % (a.d, b.d))
    if not a.coeffs or not b.coeffs:
        return Poly((), a.d)
    zero = QuadRational(0, 0, a.d)
    out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] = out[i + j] + x * y
    return Poly(out, a.d)


def poly_divmod(a, b):
    """Euclidean division: a = quotient*b + remainder, deg(remainder) < deg(b)."""
    if a.d != b.d:
        raise ValueError("mismatched base: sqrt%d vs sqrt%d" % (a.d, b.d))
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    nb = len(b.coeffs)
    if len(rem) < nb:
        return Poly((), a.d), a
    inv_lead = b.coeffs[-1].inverse()
    quot = [QuadRational(0, 0, a.d)] * (len(rem) - nb + 1)
    for k in range(len(rem) - nb, -1, -1):
        c = rem[k + nb - 1]
        if c.is_zero():
            continue
        c = c * inv_lead
        quot[k] = c
        for j, y in enumerate(b.coeffs):
            rem[k + j] = rem[k + j] - c * y
    return Poly(quot, a.d), Poly(rem[: nb - 1], a.d)


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm over Q(sqrt d)."""
    a, b = a.monic(), b.monic()
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r.monic()
    return a


class RatFunc:
    """Reduced fraction of two polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, (int, Fraction, QuadRational)):
            d = num.d if isinstance(num, QuadRational) else (den.d if isinstance(den, Poly) else 1)
            num = Poly((num,), d)
        if den is None:
            den = Poly((1,), num.d)
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @property
    def d(self):
        return self.num.d

    @property
    def numerator(self):
        return self.num

    @property
    def denominator(self):
        return self.den

    @classmethod
    def from_poly(cls, p):
        return cls(p, Poly((1,), p.d), _reduced=True)

    @classmethod
    def const(cls, c, d):
        return cls.from_poly(Poly((c,), d))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.d != self.d:
                raise ValueError("cannot combine values over sqrt%d and sqrt%d" % (self.d, other.d))
            return other
        if isinstance(other, Poly):
            if other.d != self.d:
                raise ValueError("cannot combine values over sqrt%d and sqrt%d" % (self.d, other.d))
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction, QuadRational)):
            return RatFunc.from_poly(Poly((other,), self.d))
        return NotImplemented

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadRational, Poly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.d != other.d:
            return False
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RatFunc(%s)" % render_ratfunc(self)

    def __str__(self):
        return render_ratfunc(self)


def _reduce(num, den):
    if num.d != den.d:
        raise ValueError("mismatched base: sqrt%d vs sqrt%d" % (num.d, den.d))
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return num, Poly((1,), num.d)
    if den.is_constant():
        return num * den.coeffs[0].inverse(), Poly((1,), num.d)
    # the exact-division path covers nearly every value the algorithm produces
    quot, rem = poly_divmod(num, den)
    if rem.is_zero():
        return quot, Poly((1,), num.d)
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = poly_divmod(num, g)[0]
        den = poly_divmod(den, g)[0]
    lc = den.coeffs[-1]
    if not (lc == 1):
        inv = lc.inverse()
        num = num * inv
        den = den * inv
    return num, den


def ratfunc_reduce(num, den):
    return RatFunc(num, den)


def is_polynomial(r):
    """Return the polynomial ``r`` equals, or None if its denominator is not 1."""
    if r.den.degree == 0:
        return r.num
    return None


def as_ratfunc(x, d):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    return RatFunc.const(x, d)


class MatrixRF:
    """Small dense matrix of RatFunc entries, row-major."""

    __slots__ = ("rows", "cols", "entries", "d")

    def __init__(self, rows, cols, entries, d):
        if len(entries) != rows * cols:
            raise ValueError("expected %d entries, got %d" % (rows * cols, len(entries)))
        es = [as_ratfunc(e, d) for e in entries]
        for e in es:
            if e.d != d:
                raise ValueError("matrix entry over sqrt%d in a matrix over sqrt%d" % (e.d, d))
        self.rows = rows
        self.cols = cols
        self.entries = tuple(es)
        self.d = d

    @classmethod
    def from_rows(cls, rows, d):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r], d)

    @classmethod
    def zeros(cls, rows, cols, d):
        z = RatFunc.const(0, d)
        return cls(rows, cols, [z] * (rows * cols), d)

    @classmethod
    def identity(cls, n, d):
        one, zero = RatFunc.const(1, d), RatFunc.const(0, d)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)], d)

    @classmethod
    def diag(cls, values, d):
        n = len(values)
        zero = RatFunc.const(0, d)
        es = [zero] * (n * n)
        for i, v in enumerate(values):
            es[i * n + i] = as_ratfunc(v, d)
        return cls(n, n, es, d)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return MatrixRF(self.cols, self.rows,
                        [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.d)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d @ %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        zero = RatFunc.const(0, self.d)
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self[i, k]
                    if a.is_zero():
                        continue
                    b = other[k, j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                out.append(acc)
        return MatrixRF(self.rows, other.cols, out, self.d)

    def __add__(self, other):
        self._same_shape(other)
        return MatrixRF(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], self.d)

    def __sub__(self, other):
        self._same_shape(other)
        return MatrixRF(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)], self.d)

    def scale(self, c):
        return MatrixRF(self.rows, self.cols, [e * c for e in self.entries], self.d)

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch %dx%d vs %dx%d" % (self.rows, self.cols, other.rows, other.cols))

    def submatrix(self, rows, cols):
        return MatrixRF(len(rows), len(cols), [self[i, j] for i in rows for j in cols], self.d)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def inverse(self):
        """Gauss-Jordan inverse over the rational-function field."""
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        a = self.to_rows()
        inv = MatrixRF.identity(n, self.d).to_rows()
        for col in range(n):
            piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            p = a[col][col].inverse()
            a[col] = [x * p for x in a[col]]
            inv[col] = [x * p for x in inv[col]]
            for r in range(n):
                if r == col or a[r][col].is_zero():
                    continue
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return MatrixRF.from_rows(inv, self.d)

    def __eq__(self, other):
        if not isinstance(other, MatrixRF):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __repr__(self):
        return "MatrixRF(%dx%d)" % (self.rows, self.cols)


# ---------------------------------------------------------------- rendering

def render_scalar(x):
    """Plain-text form of a + b*sqrt(d), e.g. ``-3/2``, ``sqrt2``, ``(1+2*sqrt3)``."""
    if x.b == 0:
        return str(x.a)
    s = "sqrt%d" % x.d
    if x.b == 1:
        surd = s
    elif x.b == -1:
        surd = "-" + s
    else:
        surd = "%s*%s" % (x.b, s)
    if x.a == 0:
        return surd
    sign = "" if surd.startswith("-") else "+"
    return "(%s%s%s)" % (x.a, sign, surd)


def _term_text(c, k):
    if k == 0:
        return render_scalar(c)
    mono = "q" if k == 1 else "q^%d" % k
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return "%s*%s" % (render_scalar(c), mono)


def render_poly(p):
    """Descending powers, e.g. ``q^6-q^4+q^2-1``; zero renders as ``0``."""
    if p.is_zero():
        return "0"
    out = ""
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c.is_zero():
            continue
        t = _term_text(c, k)
        if out and not t.startswith("-"):
            out += "+"
        out += t
    return out


def render_ratfunc(r):
    p = is_polynomial(r)
    if p is not None:
        return render_poly(p)
    return "(%s)/(%s)" % (render_poly(r.num), render_poly(r.den))


def _latex_scalar(x):
    if x.b == 0:
        a = x.a
        if a.denominator == 1:
            return str(a.numerator)
        return "%s\\frac{%d}{%d}" % ("-" if a < 0 else "", abs(a.numerator), a.denominator)
    s = "\\sqrt{%d}" % x.d
    b = x.b
    if b == 1:
        surd = s
    elif b == -1:
        surd = "-" + s
    else:
        surd = _latex_scalar(QuadRational(b, 0, 1)) + s
    if x.a == 0:
        return surd
    sign = "" if surd.startswith("-") else "+"
    return "(%s%s%s)" % (_latex_scalar(QuadRational(x.a, 0, 1)), sign, surd)


def latex_poly(p):
    if p.is_zero():
        return "0"
    out = ""
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c.is_zero():
            continue
        if k == 0:
            t = _latex_scalar(c)
        else:
            mono = "q" if k == 1 else ("q^%d" % k if k < 10 else "q^{%d}" % k)
            if c == 1:
                t = mono
            elif c == -1:
                t = "-" + mono
            else:
                t = _latex_scalar(c) + mono
        if out and not t.startswith("-"):
            out += "+"
        out += t
    return out


def latex_ratfunc(r):
    p = is_polynomial(r)
    if p is not None:
        return latex_poly(p)
    return "\\frac{%s}{%s}" % (latex_poly(r.num), latex_poly(r.den))


# ---------------------------------------------------------------- parsing

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+(?:/\d+)?)?\s*\*?\s*
        (?P<surd>sqrt(?P<sd>\d))?\s*\*?\s*
        (?P<q>q(?:\^(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


_MIXED = re.compile(r"\((-?\d+(?:/\d+)?)([+-](?:\d+(?:/\d+)?\*)?sqrt\d)\)(\*q(?:\^\d+)?)?")


def _expand_mixed(m):
    mono = m.group(3) or ""
    return "%s%s%s%s" % (m.group(1), mono, m.group(2), mono)


def parse_poly(text, d):
    """Parse the plain-text rendering produced by :func:`render_poly`.

    Only expanded sums of terms ``[c][*][sqrtD][*][q[^k]]`` are accepted.
    """
    text = text.replace(" ", "")
    text = _MIXED.sub(_expand_mixed, text).replace("+-", "-")
    if text == "0":
        return Poly((), d)
    pos = 0
    result = Poly((), d)
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not (m.group("coef") or m.group("surd") or m.group("q")):
            raise ValueError("cannot parse polynomial %r at position %d" % (text, pos))
        if pos > 0 and not m.group("sign"):
            raise ValueError("missing operator in %r at position %d" % (text, pos))
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            coef = -coef
        if m.group("surd"):
            if int(m.group("sd")) != d:
                raise ValueError("sqrt%s in a polynomial over sqrt%d" % (m.group("sd"), d))
            c = QuadRational(0, coef, d)
        else:
            c = QuadRational(coef, 0, d)
        k = 0
        if m.group("q"):
            k = int(m.group("exp")) if m.group("exp") else 1
        result = result + Poly.monomial(k, c, d)
        pos = m.end()
    return result
