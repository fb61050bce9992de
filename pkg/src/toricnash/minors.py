"""Enumeration of the non-vanishing maximal minors of the coefficient matrix.

Each D-row subset J with det != 0 contributes the exponent
A*beta_1 + ... + A*beta_D; after subtracting the global shift
sigma_n = sum of all alpha in Lambda_{d,n} this is the canonical form in
which chart centers are reported.  Two search modes exist: a naive scan
over all C(M, D) subsets and a DFS that grows an exact row-echelon basis
and abandons dependent or too-short branches.  They must agree.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .multiindex import enumerate_lambda


class BudgetExceeded(Exception):
    """The subset search hit its node ceiling before finishing."""


def det_exact(mat):
    """Exact determinant of a square integer matrix (Bareiss)."""
    m = [list(map(int, row)) for row in mat]
    k = len(m)
    if any(len(row) != k for row in m):
        raise ValueError("matrix is not square")
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for r in range(i + 1, k):
                if m[r][i]:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[k - 1][k - 1]


@dataclass(frozen=True)
class ExponentSet:
    """Canonical exponents of the non-zero maximal minors, lex-sorted."""

    order: int
    shift: tuple                      # sigma_n
    exponents: tuple                  # canonical: m_J - sigma_n
    witnesses: dict = field(compare=False, repr=False, default=None)

    def raw(self):
        """Unshifted exponents m_J = A*beta_1 + ... + A*beta_D."""
        return tuple(tuple(a + b for a, b in zip(e, self.shift))
                     for e in self.exponents)

    def __contains__(self, m):
        return tuple(m) in set(self.exponents)

    def __len__(self):
        return len(self.exponents)


def sigma_shift(d, n):
    """Coordinate-wise sum of all alpha in Lambda_{d,n}."""
    sigma = [0] * d
    for alpha in enumerate_lambda(d, n):
        for i, a in enumerate(alpha):
            sigma[i] += a
    return tuple(sigma)


def _row_sums(L):
    """A*beta for each row beta of the coefficient matrix."""
    return [L.A.apply(beta) for beta in L.row_index]


def _reduce_against(row, basis):
    """Reduce a row against an echelon basis; return (pivot, row) or None."""
    row = list(row)
    for piv, base in basis:
        f = row[piv]
        if f:
            g = Fraction(f, base[piv])
            for j in range(piv, len(row)):
                row[j] -= g * base[j]
    for j, v in enumerate(row):
        if v:
            return j, row
    return None


def nonzero_minor_exponents(L, mode="pruned", budget_nodes=None, stats=None):
    """The set S of canonical exponents of non-vanishing maximal minors.

    mode "naive" evaluates a determinant per subset; mode "pruned" walks
    rows in grlex order keeping an exact partial echelon basis so that
    dependent choices and unfinishable branches are cut early.
    budget_nodes caps determinants (naive) or search nodes (pruned).
    """
    if mode not in ("naive", "pruned"):
        raise ValueError("unknown mode %r" % (mode,))
    scaled = L.scaled_entries()
    M, D = L.shape
    if M < D:
        raise ValueError("degenerate input: %d rows but %d columns" % (M, D))
    row_sums = _row_sums(L)
    sigma = sigma_shift(L.A.d, L.order)
    found = {}

    def record(rows):
        m = [0] * L.A.d
        for r in rows:
            for i, v in enumerate(row_sums[r]):
                m[i] += v
        key = tuple(a - b for a, b in zip(m, sigma))
        if key not in found:
            found[key] = tuple(L.row_index[r] for r in rows)

    counter = {"nodes": 0}

    def tick():
        counter["nodes"] += 1
        if budget_nodes is not None and counter["nodes"] > budget_nodes:
            raise BudgetExceeded("search exceeded %d nodes" % budget_nodes)

    if mode == "naive":
        from itertools import combinations
        for rows in combinations(range(M), D):
            tick()
            if det_exact([scaled[r] for r in rows]) != 0:
                record(rows)
    else:
        frac_rows = [[Fraction(v) for v in row] for row in scaled]
        basis = []
        chosen = []

        def dfs(i):
            tick()
            if len(chosen) == D:
                record(chosen)
                return
            if M - i < D - len(chosen):
                return
            red = _reduce_against(frac_rows[i], basis)
            if red is not None:
                basis.append(red)
                chosen.append(i)
                dfs(i + 1)
                chosen.pop()
                basis.pop()
            dfs(i + 1)

        dfs(0)

    if stats is not None:
        stats["nodes"] = counter["nodes"]
        stats["mode"] = mode
    exps = tuple(sorted(found))
    return ExponentSet(order=L.order, shift=sigma, exponents=exps,
                       witnesses={e: found[e] for e in exps})
