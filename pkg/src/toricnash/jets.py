"""Truncated Taylor (jet) arithmetic and the order-n Jacobian of a morphism.

Polynomials are exact: coefficients are Fractions, exponents are tuples.
The order-n Jacobian of g = (g_1, ..., g_s) at a point x is assembled by
rewriting each g_i in the shifted variables Z = X - x and reading off
coefficients of truncated products, so no symbolic differentiation is
needed.
"""

from fractions import Fraction

from .multiindex import enumerate_lambda, grlex_key


class Poly:
    """Multivariate polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for expo, coeff in terms.items():
                if len(expo) != nvars:
                    raise ValueError("exponent %r has wrong length" % (expo,))
                c = Fraction(coeff)
                if c:
                    clean[tuple(expo)] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, i):
        expo = [0] * nvars
        expo[i] = 1
        return cls(nvars, {tuple(expo): 1})

    @classmethod
    def monomial(cls, nvars, expo, coeff=1):
        return cls(nvars, {tuple(expo): coeff})

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.nvars, out)

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return Poly.constant(self.nvars, other)

    def coeff(self, expo):
        return self.terms.get(tuple(expo), Fraction(0))

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def truncated(self, n):
        """Drop every term of total degree > n."""
        return Poly(self.nvars, {e: c for e, c in self.terms.items()
                                 if sum(e) <= n})

    def __call__(self, point):
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for p, k in zip(point, e):
                val *= Fraction(p) ** k
            total += val
        return total

    def subs(self, polys):
        """Substitute polys[i] for variable i (composition)."""
        if len(polys) != self.nvars:
            raise ValueError("need one polynomial per variable")
        nv = polys[0].nvars
        total = Poly(nv, {})
        for e, c in self.terms.items():
            term = Poly.constant(nv, c)
            for p, k in zip(polys, e):
                for _ in range(k):
                    term = term * p
            total = total + term
        return total

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for e in sorted(self.terms, key=grlex_key):
            bits.append("%s*X^%s" % (self.terms[e], e))
        return "Poly(%s)" % " + ".join(bits)


def truncate_mul(p, q, n):
    """Product of two jets with all terms of degree > n dropped."""
    return (p * q).truncated(n)


class JetMatrix:
    """Exact matrix indexed by multi-indices in grlex order.

    rows -> Lambda_{s,n}, cols -> Lambda_{d,n}, entries Fractions.
    """

    __slots__ = ("row_index", "col_index", "entries")

    def __init__(self, row_index, col_index, entries):
        self.row_index = tuple(row_index)
        self.col_index = tuple(col_index)
        self.entries = tuple(tuple(Fraction(v) for v in row) for row in entries)
        for row in self.entries:
            if len(row) != len(self.col_index):
                raise ValueError("ragged matrix")

    @property
    def shape(self):
        return (len(self.row_index), len(self.col_index))

    def entry(self, beta, alpha):
        return self.entries[self.row_index.index(beta)][self.col_index.index(alpha)]

    def __eq__(self, other):
        return (isinstance(other, JetMatrix)
                and self.row_index == other.row_index
                and self.col_index == other.col_index
                and self.entries == other.entries)

    def matmul(self, other):
        if self.col_index != other.row_index:
            raise ValueError("inner indices do not match")
        rows = []
        for r in self.entries:
            rows.append(tuple(
                sum((a * other.entries[k][j] for k, a in enumerate(r) if a),
                    Fraction(0))
                for j in range(len(other.col_index))))
        return JetMatrix(self.row_index, other.col_index, rows)


def _shifted_components(g, x):
    """Each g_i rewritten in Z = X - x with the constant term removed."""
    d = len(x)
    shift = [Poly.variable(d, i) + Fraction(x[i]) for i in range(d)]
    out = []
    for gi in g:
        if gi.nvars != d:
            raise ValueError("g has %d variables but x has dimension %d"
                             % (gi.nvars, d))
        h = gi.subs(shift)
        h = h - h.coeff((0,) * d)
        out.append(h)
    return out


def jet_jacobian(g, x, n):
    """Order-n Jacobian matrix of the morphism g at the point x.

    Entry (beta, alpha) is the coefficient of (X-x)^alpha in the degree-n
    truncation of (g - g(x))^beta.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    s = len(g)
    d = len(x)
    h = [hi.truncated(n) for hi in _shifted_components(g, x)]
    # powers[i][k] = h_i^k truncated at n
    powers = []
    for hi in h:
        pk = [Poly.constant(d, 1)]
        for _ in range(n):
            pk.append(truncate_mul(pk[-1], hi, n))
        powers.append(pk)
    rows_idx = enumerate_lambda(s, n)
    cols_idx = enumerate_lambda(d, n)
    rows = []
    for beta in rows_idx:
        prod = Poly.constant(d, 1)
        for i, bi in enumerate(beta):
            if bi:
                prod = truncate_mul(prod, powers[i][bi], n)
        rows.append([prod.coeff(alpha) for alpha in cols_idx])
    return JetMatrix(rows_idx, cols_idx, rows)


def compose(psi, phi):
    """The morphism psi o phi as a tuple of expanded polynomials."""
    return tuple(p.subs(list(phi)) for p in psi)


def compose_check(psi, phi, x, n):
    """Whether the order-n chain rule holds for psi o phi at x."""
    y = [gi(x) for gi in phi]
    lhs = jet_jacobian(compose(psi, phi), x, n)
    rhs = jet_jacobian(psi, y, n).matmul(jet_jacobian(phi, x, n))
    return lhs == rhs
