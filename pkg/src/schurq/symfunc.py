"""Symmetric-function algebra: complete generators h_n(t), their odd-variable
relatives q_n(s), determinantal Schur functions, Pfaffian Q-functions, and
the substitutions the verification identities need.

h_n and q_n come from the Newton-style recurrences

    n h_n = sum_{k=1..n} k t_k h_{n-k}
    n q_n = sum_{k odd <= n} k s_k q_{n-k}

which produce the coefficients of exp(sum t_k z^k) and exp(sum s_k z^k)
exactly, with no series truncation.
"""

from fractions import Fraction

from .exactalg import (SparsePoly, Sqrt2Rational, svar, tvar, zvar, S, T)

_H_CACHE = {0: SparsePoly.constant(1)}
_Q_CACHE = {0: SparsePoly.constant(1)}


def h_poly(n):
    """Weight-n complete generator in the t variables (0 for n < 0)."""
    if n < 0:
        return SparsePoly.zero()
    if n not in _H_CACHE:
        acc = SparsePoly.zero()
        for k in range(1, n + 1):
            acc = acc + SparsePoly.constant(k) * SparsePoly.variable(tvar(k)) * h_poly(n - k)
        _H_CACHE[n] = SparsePoly.constant(Fraction(1, n)) * acc
    return _H_CACHE[n]


def q_poly(n):
    """Weight-n generator in the odd s variables (0 for n < 0)."""
    if n < 0:
        return SparsePoly.zero()
    if n not in _Q_CACHE:
        acc = SparsePoly.zero()
        for k in range(1, n + 1, 2):
            acc = acc + SparsePoly.constant(k) * SparsePoly.variable(svar(k)) * q_poly(n - k)
        _Q_CACHE[n] = SparsePoly.constant(Fraction(1, n)) * acc
    return _Q_CACHE[n]


def poly_det(rows):
    """Exact determinant of a square matrix of SparsePoly entries.

    Laplace expansion along successive rows, memoized over the active
    column set (fine at the sizes the verification grids produce).
    """
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise ValueError("matrix must be square")
    full = (1 << d) - 1
    memo = {}

    def minor(row, colmask):
        if row == d:
            return SparsePoly.constant(1)
        key = colmask
        got = memo.get(key)
        if got is not None:
            return got
        acc = SparsePoly.zero()
        sign = 1
        for col in range(d):
            bit = 1 << col
            if not colmask & bit:
                continue
            entry = rows[row][col]
            if not entry.is_zero():
                sub = minor(row + 1, colmask & ~bit)
                term = entry * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, full)


def schur(lam):
    """Determinantal Schur function S_lam(t) for a partition lam
    (weakly decreasing; zeros are stripped)."""
    lam = tuple(int(p) for p in lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(p < 0 for p in lam):
        raise ValueError("not a partition: %r" % (lam,))
    lam = tuple(p for p in lam if p > 0)
    d = len(lam)
    if d == 0:
        return SparsePoly.constant(1)
    rows = [[h_poly(lam[i] + j - i) for j in range(d)] for i in range(d)]
    return poly_det(rows)


def qq_pair(m, n):
    """The antisymmetric pair function Q_{m,n}(s)."""
    if m < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    if m == n:
        return SparsePoly.zero()
    if m < n:
        return -qq_pair(n, m)
    acc = q_poly(m) * q_poly(n)
    for i in range(1, n + 1):
        term = SparsePoly.constant(2) * q_poly(m + i) * q_poly(n - i)
        acc = acc + (term if i % 2 == 0 else -term)
    return acc


def pfaffian(rows):
    """Pfaffian of a skew-symmetric even-dimensional SparsePoly matrix,
    by recursive first-row expansion."""
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise ValueError("matrix must be square")
    if d % 2 != 0:
        raise ValueError("Pfaffian needs even dimension")
    for i in range(d):
        for j in range(i, d):
            if not (rows[i][j] + rows[j][i]).is_zero():
                raise ValueError("matrix is not skew-symmetric")
    return _pf(rows, tuple(range(d)))


def _pf(rows, active):
    if not active:
        return SparsePoly.constant(1)
    first = active[0]
    rest = active[1:]
    acc = SparsePoly.zero()
    for pos, j in enumerate(rest):
        entry = rows[first][j]
        if entry.is_zero():
            continue
        sub = _pf(rows, rest[:pos] + rest[pos + 1:])
        term = entry * sub
        acc = acc + (term if pos % 2 == 0 else -term)
    return acc


def schur_q(lam):
    """Pfaffian Q-function Q_lam(s) of a strict partition.

    The index list is normalized by stripping zeros and then padding with a
    single 0 when the length is odd (the pad row gives a Q_{j,0} = q_j
    column, which is what makes the padding consistent).
    """
    parts = tuple(int(p) for p in lam)
    parts = tuple(p for p in parts if p != 0)
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)) or any(p < 0 for p in parts):
        raise ValueError("Q-function index must be strict: %r" % (lam,))
    if len(parts) % 2 == 1:
        parts = parts + (0,)
    d = len(parts)
    if d == 0:
        return SparsePoly.constant(1)
    rows = [[qq_pair(parts[i], parts[j]) for j in range(d)] for i in range(d)]
    return pfaffian(rows)


# ---------------------------------------------------------------------------
# substitutions
# ---------------------------------------------------------------------------

def subst_2t2(p):
    """Doubling substitution t_j -> 2 t_{2j} (t-polynomials only)."""
    mapping = {}
    for v in p.variables():
        if v[0] != T:
            raise ValueError("doubling substitution is defined on t-variables only")
        mapping[v] = SparsePoly.constant(2) * SparsePoly.variable(tvar(2 * v[1]))
    return p.substitute(mapping)


def subst_u(p):
    """Mixed-variable substitution: odd t_j -> t_j - s_j, the rest fixed."""
    mapping = {}
    for v in p.variables():
        if v[0] == T and v[1] % 2 == 1:
            mapping[v] = SparsePoly.variable(v) - SparsePoly.variable(svar(v[1]))
    return p.substitute(mapping)


def subst_odd(p):
    """Kill the even t variables, then apply the mixed substitution."""
    mapping = {}
    for v in p.variables():
        if v[0] == T and v[1] % 2 == 0:
            mapping[v] = SparsePoly.zero()
    return subst_u(p.substitute(mapping))


def subst_q_u(p):
    """Substitution s_j -> t_j - s_j on an s-polynomial (the u-coordinate
    reading of a Q-function)."""
    mapping = {}
    for v in p.variables():
        if v[0] == S:
            mapping[v] = SparsePoly.variable(tvar(v[1])) - SparsePoly.variable(v)
    return p.substitute(mapping)


def power_sum_specialize(p, n_vars):
    """Substitute t_j -> (z_1^j + ... + z_N^j)/j, giving a symmetric
    polynomial in the z variables."""
    if n_vars < 1:
        raise ValueError("need at least one z variable")
    mapping = {}
    for v in p.variables():
        if v[0] != T:
            raise ValueError("power-sum specialization is defined on t-variables only")
        j = v[1]
        acc = SparsePoly.zero()
        for i in range(1, n_vars + 1):
            acc = acc + SparsePoly.variable(zvar(i)) ** j
        mapping[v] = SparsePoly.constant(Fraction(1, j)) * acc
    return p.substitute(mapping)


def _det_fractions(rows):
    d = len(rows)
    if d == 0:
        return Fraction(1)
    memo = {}

    def minor(row, colmask):
        if row == d:
            return Fraction(1)
        got = memo.get(colmask)
        if got is not None:
            return got
        acc = Fraction(0)
        sign = 1
        for col in range(d):
            bit = 1 << col
            if not colmask & bit:
                continue
            if rows[row][col]:
                acc += sign * rows[row][col] * minor(row + 1, colmask & ~bit)
            sign = -sign
        memo[colmask] = acc
        return acc

    return minor(0, (1 << d) - 1)


def bialternant_eval(lam, zs):
    """Ratio of alternants det(z_i^{lam_j + N - j}) / det(z_i^{N - j})
    at a rational point with pairwise distinct nonzero coordinates."""
    lam = tuple(p for p in lam if p > 0)
    zs = [Fraction(z) for z in zs]
    n = len(zs)
    if len(set(zs)) != n:
        raise ValueError("z coordinates must be pairwise distinct")
    if any(z == 0 for z in zs):
        raise ValueError("z coordinates must be nonzero")
    if len(lam) > n:
        return Sqrt2Rational(0)
    exps = [(lam[j] if j < len(lam) else 0) + n - 1 - j for j in range(n)]
    num = _det_fractions([[z ** e for e in exps] for z in zs])
    den = _det_fractions([[z ** (n - 1 - j) for j in range(n)] for z in zs])
    return Sqrt2Rational(num / den)
