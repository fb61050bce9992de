"""Affine-semigroup computations on chart generator sets.

A chart is centered at an exponent m0 of the minor set S and generated
by A together with the differences m - m0.  When the chart is essential
(origin outside the convex hull) the semigroup is pointed, its minimal
generating set is unique, and the chart is non-singular exactly when
that set has d elements.
"""

from dataclasses import dataclass

from . import lattice_geometry


@dataclass(frozen=True)
class Chart:
    center: tuple
    generators: tuple            # deduplicated, lex-sorted, zero removed
    essential: bool
    minimal_generators: tuple = None   # present iff essential
    smooth: bool = None                # present iff essential
    lattice_full: bool = None          # sanity check, reported not enforced


def chart_generators(A, S, m0):
    """A union {m - m0 : m in S, m != m0}, deduplicated and lex-sorted.

    Zero vectors (from m = m0 collisions with generators) are dropped:
    they generate nothing and would falsely trip the essentiality test.
    """
    m0 = tuple(m0)
    if m0 not in S:
        raise ValueError("center %r is not an exponent of S" % (m0,))
    gens = set(A.columns)
    for m in S.exponents:
        if m != m0:
            gens.add(tuple(a - b for a, b in zip(m, m0)))
    gens.discard((0,) * A.d)
    return tuple(sorted(gens))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def member(target, gens, w, _memo=None):
    """Whether target is an N-combination of gens.

    w must be a functional with w.g >= 1 for every generator; it bounds
    the search since each step consumes at least one unit of w-weight.
    """
    target = tuple(target)
    gens = sorted((tuple(g) for g in gens), key=lambda g: -_dot(w, g))
    memo = {} if _memo is None else _memo
    zero = (0,) * len(target)

    def rec(t, i):
        if t == zero:
            return True
        wt = _dot(w, t)
        if wt < 1:
            return False
        key = (t, i)
        if key in memo:
            return memo[key]
        ok = False
        for j in range(i, len(gens)):
            g = gens[j]
            if _dot(w, g) <= wt:
                if rec(tuple(a - b for a, b in zip(t, g)), j):
                    ok = True
                    break
        memo[key] = ok
        return ok

    return rec(target, 0)


def member_certificate(target, gens, w):
    """Multipliers lambda with sum lambda_i g_i = target, or None."""
    target = tuple(target)
    gens = [tuple(g) for g in gens]
    order = sorted(range(len(gens)), key=lambda j: -_dot(w, gens[j]))
    zero = (0,) * len(target)
    memo = {}

    def rec(t, i):
        if t == zero:
            return ()
        wt = _dot(w, t)
        if wt < 1:
            return None
        key = (t, i)
        if key in memo:
            return memo[key]
        out = None
        for pos in range(i, len(order)):
            g = gens[order[pos]]
            if _dot(w, g) <= wt:
                sub = rec(tuple(a - b for a, b in zip(t, g)), pos)
                if sub is not None:
                    out = (order[pos],) + sub
                    break
        memo[key] = out
        return out

    path = rec(target, 0)
    if path is None:
        return None
    lam = [0] * len(gens)
    for j in path:
        lam[j] += 1
    return tuple(lam)


def minimal_generators(gens):
    """Unique inclusion-minimal generating subset of a pointed semigroup.

    Candidates are retried in decreasing w-weight order until no element
    is an N-combination of the remaining ones.
    """
    gens = sorted({tuple(g) for g in gens})
    zero = (0,) * len(gens[0])
    gens = [g for g in gens if g != zero]
    w = lattice_geometry.positive_functional(gens)
    if w is None:
        raise ValueError("generators are not essential; "
                         "minimal generating set is not unique")
    keep = sorted(gens, key=lambda g: -_dot(w, g))
    changed = True
    while changed:
        changed = False
        for g in list(keep):
            rest = [h for h in keep if h != g]
            if rest and member(g, rest, w):
                keep.remove(g)
                changed = True
    return tuple(sorted(keep))


def analyze_chart(A, S, m0):
    """Build the chart at m0 and classify it."""
    gens = chart_generators(A, S, m0)
    kind, cert = lattice_geometry.origin_certificate(gens)
    if kind == "inside":
        return Chart(center=tuple(m0), generators=gens, essential=False)
    mingens = minimal_generators(gens)
    full = lattice_geometry.zspan_is_full(gens)
    return Chart(center=tuple(m0), generators=gens, essential=True,
                 minimal_generators=mingens,
                 smooth=(len(mingens) == A.d),
                 lattice_full=full)
