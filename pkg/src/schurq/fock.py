"""Neutral-fermion Fock space and its boson image.

The fermion algebra has generators b_n (n in Z) with

    b_m b_n + b_n b_m = (-1)^m delta_{m+n,0}

acting on a vacuum killed by every b_n with n < 0 (so b_0^2 = 1/2).  States
are stored as linear combinations of *words*: strictly decreasing tuples of
non-negative mode indices, applied left to right to the vacuum.  A trailing
zero is significant -- (3, 0) and (3,) are different states, and the basis
vector of a strict partition uses the even-padded part list as its word.

The two lowering operators of the rank-two twisted affine algebra act as
quadratic expressions in the modes:

    F0 = sqrt(2) * sum_m (-1)^(m+1) b_{3m} b_{-3m+1}
    F1 =           sum_m (-1)^m     b_{3m-1} b_{-3m+2}

Words map to charged-boson components by splitting the modes mod 3 into a
neutral family (phi_j = b_{3j}), a charged family (psi_k = b_{3k+1}) and its
dual (psistar_k = (-1)^(3k+1) b_{-3k-1}), rewriting the vacuum against a
charge-(-M) reference state, and straightening into normal form; the normal
words then read off as Q- and S-polynomials.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactalg import ONE, SparsePoly, Sqrt2Rational, ZERO
from .partitions import StrictPartition, bar_core, bar_quotient, is_added_member, stats
from .symfunc import schur, schur_q


def _check_word(word):
    word = tuple(int(x) for x in word)
    if any(x < 0 for x in word):
        raise ValueError("word entries must be non-negative mode indices")
    if any(word[i] <= word[i + 1] for i in range(len(word) - 1)):
        raise ValueError("word entries must be strictly decreasing")
    return word


class FockVector:
    """Finite linear combination of words with Sqrt2Rational coefficients."""

    def __init__(self, terms=None):
        self.terms = {}
        for word, coeff in (terms or {}).items():
            if not coeff.is_zero():
                self.terms[_check_word(word)] = coeff

    @staticmethod
    def zero():
        return FockVector()

    @staticmethod
    def from_word(word, coeff=ONE):
        return FockVector({tuple(word): coeff})

    @staticmethod
    def basis(lam):
        """The state of a strict partition: its even-padded parts as a word."""
        return FockVector({lam.even_padded(): ONE})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            c = out.get(word, ZERO) + coeff
            if c.is_zero():
                out.pop(word, None)
            else:
                out[word] = c
        return FockVector(out)

    def __neg__(self):
        return FockVector({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        if not isinstance(scalar, Sqrt2Rational):
            scalar = Sqrt2Rational(scalar)
        if scalar.is_zero():
            return FockVector()
        return FockVector({w: c * scalar for w, c in self.terms.items()})

    def coefficient(self, word):
        return self.terms.get(tuple(word), ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        lines = []
        for word in sorted(self.terms, reverse=True):
            ket = "|%s>" % ",".join(str(x) for x in word) if word else "|vac>"
            lines.append("%s * %s" % (self.terms[word], ket))
        return "\n".join(lines)

    def __repr__(self):
        return "FockVector(%r)" % (self.terms,)


def _beta_word(n, word):
    """Apply b_n to a single word; list of (Fraction coefficient, word)."""
    if not word:
        return [] if n < 0 else [(Fraction(1), (n,))]
    head, rest = word[0], word[1:]
    if n > head:
        return [(Fraction(1), (n,) + word)]
    if n == head:
        # b_n b_n = (1/2) (-1)^n delta_{2n,0}: only the zero mode survives
        return [(Fraction(1, 2), rest)] if n == 0 else []
    out = []
    if n == -head:
        sign = Fraction(-1) if head % 2 else Fraction(1)
        out.append((sign, rest))
    for c, w in _beta_word(n, rest):
        for c2, w2 in _beta_word(head, w):
            out.append((-c * c2, w2))
    return out


def beta_apply(n, vec):
    """The mode operator b_n applied to a vector."""
    out = {}
    for word, coeff in vec.terms.items():
        for frac, new_word in _beta_word(n, word):
            c = out.get(new_word, ZERO) + coeff * frac
            if c.is_zero():
                out.pop(new_word, None)
            else:
                out[new_word] = c
    return FockVector(out)


def single_node_action(i, vec):
    """The quadratic term growing a part i into i+1 (or creating a part 1
    when i = 0): (-1)^i b_{i+1} b_{-i} for i > 0, and b_1 b_0 for i = 0."""
    if i < 0:
        raise ValueError("part index must be non-negative")
    if i == 0:
        return beta_apply(1, beta_apply(0, vec))
    out = beta_apply(i + 1, beta_apply(-i, vec))
    return out.scale(-1) if i % 2 else out


def f_apply(i, vec):
    """One application of the lowering operator F0 or F1."""
    if i not in (0, 1):
        raise ValueError("operator index must be 0 or 1")
    top = max((w[0] for w in vec.terms if w), default=0)
    reach = top // 3 + 2
    out = FockVector()
    for m in range(-reach, reach + 1):
        if i == 0:
            term = beta_apply(3 * m, beta_apply(-3 * m + 1, vec))
            scalar = Sqrt2Rational(0, -1 if m % 2 == 0 else 1)  # sqrt2 * (-1)^(m+1)
        else:
            term = beta_apply(3 * m - 1, beta_apply(-3 * m + 2, vec))
            scalar = Sqrt2Rational(-1 if m % 2 else 1)
        out = out + term.scale(scalar)
    return out


def f_power_normalized(i, n, vec):
    """F_i^n / n! applied to a vector."""
    if n < 0:
        raise ValueError("power must be non-negative")
    for _ in range(n):
        vec = f_apply(i, vec)
    return vec.scale(Fraction(1, factorial(n)))


# ---------------------------------------------------------------------------
# straightening into normal form
# ---------------------------------------------------------------------------

_PHI, _PSI, _PSISTAR = 0, 1, 2


@dataclass(frozen=True)
class NormalWord:
    """A straightened word phi_{j1}..phi_{ja} psi_{i1}..psi_{ir} |0,charge>
    with strictly decreasing indices, the j's >= 0 and the i's > charge."""

    coeff: Fraction
    phis: tuple
    psis: tuple
    charge: int


def _rename(word):
    """Mod-3 renaming of the modes; returns (sign, letters)."""
    sign = 1
    letters = []
    for c in word:
        r = c % 3
        if r == 0:
            letters.append((_PHI, c // 3))
        elif r == 1:
            letters.append((_PSI, (c - 1) // 3))
        else:
            letters.append((_PSISTAR, -((c + 1) // 3)))
            if c % 2:
                sign = -sign
    return sign, letters


def _straighten(coeff, letters, charge):
    """Normal-order a phi/psi/psistar letter sequence acting on |0,charge>.

    Each psistar (rightmost first) walks to the right, anticommuting past
    unrelated letters and splitting into a contraction term at every psi of
    equal index, until it annihilates against the reference state.  The
    remaining letters are bubble-sorted into a decreasing phi block followed
    by a decreasing psi block, with equal neighbours contracted (phi_0^2 =
    1/2) or killed, and the trailing psi's are absorbed into the charge.
    """
    results = []
    stack = [(coeff, tuple(letters), charge)]
    while stack:
        c, seq, q = stack.pop()
        star = max((k for k, (t, _) in enumerate(seq) if t == _PSISTAR), default=None)
        if star is not None:
            idx = seq[star][1]
            work = list(seq)
            p = star
            while p < len(work) - 1:
                kind, j = work[p + 1]
                if kind == _PSI and j == idx:
                    stack.append((c, tuple(work[:p] + work[p + 2:]), q))
                work[p], work[p + 1] = work[p + 1], work[p]
                c = -c
                p += 1
            # the walker reached the reference state |0,q>
            if idx < q:
                raise ValueError("psistar_%d does not annihilate |0,%d>" % (idx, q))
            continue
        dead = False
        work = list(seq)
        changed = True
        while changed and not dead:
            changed = False
            for p in range(len(work) - 1):
                (t1, i1), (t2, i2) = work[p], work[p + 1]
                if t1 == t2 and i1 == i2:
                    if t1 == _PHI and i1 == 0:
                        c = c * Fraction(1, 2)
                        del work[p:p + 2]
                    else:
                        dead = True
                    changed = True
                    break
                if (t1, -i1) > (t2, -i2):
                    work[p], work[p + 1] = work[p + 1], work[p]
                    c = -c
                    changed = True
                    break
        if dead:
            continue
        phis = tuple(i for t, i in work if t == _PHI)
        psis = [i for t, i in work if t == _PSI]
        while psis:
            if psis[-1] == q:
                psis.pop()
                q += 1
            elif psis[-1] < q:
                dead = True
                break
            else:
                break
        if dead:
            continue
        if phis and phis[-1] < 0:
            raise ValueError("negative phi index has no normal form")
        results.append(NormalWord(c, phis, tuple(psis), q))
    return _merge_normal(results)


def _merge_normal(words):
    acc = {}
    for nw in words:
        key = (nw.phis, nw.psis, nw.charge)
        acc[key] = acc.get(key, Fraction(0)) + nw.coeff
    return tuple(NormalWord(c, *key[:2], charge=key[2])
                 for key, c in sorted(acc.items()) if c != 0)


def to_normal_words(word):
    """Express a word (or the padded word of a strict partition) as a
    combination of normal words on |0,-M> where M = max(1, ceil((word_max
    + 1)/3))."""
    if isinstance(word, StrictPartition):
        word = word.even_padded()
    word = _check_word(word)
    sign, letters = _rename(word)
    m_ref = 1 if not word else max(1, -(-(word[0] + 1) // 3))
    letters += [(_PSI, -j) for j in range(1, m_ref + 1)]
    return _straighten(Fraction(sign), letters, -m_ref)


# ---------------------------------------------------------------------------
# boson image
# ---------------------------------------------------------------------------

class BosonElement:
    """Element of the charged-boson space: polynomials indexed by a parity
    sigma in {0,1} and an integer charge."""

    def __init__(self, components=None):
        self.components = {}
        for key, poly in (components or {}).items():
            if not poly.is_zero():
                sigma, charge = key
                if sigma not in (0, 1):
                    raise ValueError("sector parity must be 0 or 1")
                self.components[(sigma, int(charge))] = poly

    @staticmethod
    def zero():
        return BosonElement()

    def is_zero(self):
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, BosonElement):
            return NotImplemented
        return self.components == other.components

    def __add__(self, other):
        out = dict(self.components)
        for key, poly in other.components.items():
            tot = out.get(key, SparsePoly.zero()) + poly
            if tot.is_zero():
                out.pop(key, None)
            else:
                out[key] = tot
        return BosonElement(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar):
        return BosonElement({key: SparsePoly.constant(scalar) * poly
                             for key, poly in self.components.items()})

    def component(self, sigma, charge):
        return self.components.get((sigma, charge), SparsePoly.zero())

    def __str__(self):
        if not self.components:
            return "0"
        return "\n".join("(%d, %d): %s" % (sigma, charge, poly)
                         for (sigma, charge), poly in sorted(self.components.items()))

    def __repr__(self):
        return "BosonElement(%r)" % (self.components,)


def normal_word_image(nw):
    """The polynomial image of a normal word: sqrt(2)^(-a) times the
    Q-function of the phi indices (zeros stripped) times the S-function of
    the psi indices re-based at the charge, in the sector (a mod 2, q+r)."""
    a = len(nw.phis)
    r = len(nw.psis)
    q = nw.charge
    s_index = tuple(nw.psis[j] - q - (r - 1 - j) for j in range(r))
    poly = schur_q(tuple(p for p in nw.phis if p > 0)) * schur(s_index)
    scalar = Sqrt2Rational(nw.coeff) * Sqrt2Rational.sqrt2_pow(-a)
    return (a % 2, q + r), SparsePoly.constant(scalar) * poly


def phi(vec):
    """The boson image of a Fock vector."""
    out = BosonElement()
    for word, coeff in vec.terms.items():
        for nw in to_normal_words(word):
            key, poly = normal_word_image(nw)
            out = out + BosonElement({key: SparsePoly.constant(coeff) * poly})
    return out


def phi_closed_form(lam, i, m, n):
    """The boson image of the basis state of lam, evaluated by the closed
    formula for members of the n-fold color-i addition family over the
    staircase core (c_m for i = 1, c_{-m} for i = 0)."""
    if i not in (0, 1):
        raise ValueError("color must be 0 or 1")
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    core = bar_core(m if i == 1 else -m)
    if not is_added_member(core, i, n, lam):
        raise ValueError("%s is not an n=%d color-%d addition over %s"
                         % (lam, n, i, core))
    st = stats(lam)
    quot = bar_quotient(lam)
    eps = m % 2
    if i == 1:
        sign = -1 if (st.f + m) % 2 else 1
        scalar = Sqrt2Rational(sign) * Sqrt2Rational.sqrt2_pow(-eps)
        poly = SparsePoly.constant(scalar) * schur(quot.q1)
        return BosonElement({(eps, m - 2 * n): poly})
    sign = -1 if (st.f + st.g + (st.h if eps else 0)) % 2 else 1
    scalar = Sqrt2Rational(sign) * Sqrt2Rational.sqrt2_pow(-st.a)
    poly = SparsePoly.constant(scalar) * schur_q(quot.q0) * schur(quot.q1)
    return BosonElement({((n + m) % 2, n - m): poly})


def core_state_image(m):
    """The boson image of the staircase core state indexed by m (any sign):
    a scalar in the sector (|m| mod 2, m)."""
    k = abs(m)
    eps = k % 2
    exponent = k if m >= 0 else k * (k - 1) // 2 + k
    sign = -1 if exponent % 2 else 1
    scalar = Sqrt2Rational(sign) * Sqrt2Rational.sqrt2_pow(-eps)
    return BosonElement({(eps, m): SparsePoly.constant(scalar)})
