"""Verification engine: the strict-partition identities as exact checks.

Each check builds its two sides independently -- combinatorial sums of
Schur / Q-polynomials on one side, a closed form or a Fock-space computation
on the other -- and compares them term by term.  No numeric tolerance is
involved anywhere; a check passes only on literal equality.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import SparsePoly, Sqrt2Rational, svar, tvar, zvar
from .partitions import (bar_core, bar_quotient, delta0, delta1,
                         enumerate_added, stats)
from .symfunc import (bialternant_eval, pfaffian, poly_det,
                      power_sum_specialize, qq_pair, schur, schur_q,
                      subst_2t2, subst_odd, subst_q_u, subst_u)
from .fock import (FockVector, core_state_image, f_power_normalized, phi,
                   phi_closed_form)

FAMILIES = ("main1", "main2", "trapezoid", "f-power", "core-states",
            "phi-consistency", "symfunc-props")


@dataclass
class CheckResult:
    name: str
    params: dict
    passed: bool
    lhs_rendering: str
    rhs_rendering: str
    elapsed_ms: int

    def as_dict(self):
        return {"name": self.name, "params": self.params, "passed": self.passed,
                "lhs_rendering": self.lhs_rendering,
                "rhs_rendering": self.rhs_rendering,
                "elapsed_ms": self.elapsed_ms}


@dataclass
class SuiteConfig:
    max_m: int = 4
    max_n: int = 4
    families: tuple = FAMILIES

    def __post_init__(self):
        if self.max_m < 0 or self.max_n < 0:
            raise ValueError("grid bounds must be non-negative")
        unknown = set(self.families) - set(FAMILIES)
        if unknown:
            raise ValueError("unknown families: %s" % ", ".join(sorted(unknown)))


def _result(name, params, lhs, rhs, t0, passed=None):
    if passed is None:
        passed = lhs == rhs
    return CheckResult(name, params, passed, str(lhs), str(rhs),
                       int(round((time.perf_counter() - t0) * 1000)))


def _sorted_added(core, i, n):
    return sorted(enumerate_added(core, i, n), key=lambda p: p.parts, reverse=True)


def check_main1(m, n):
    """Signed sum of quotient Schur functions over color-1 additions equals
    the doubled-variable rectangle Schur function."""
    if n > m:
        raise ValueError("needs n <= m")
    t0 = time.perf_counter()
    lhs = SparsePoly.zero()
    for mu in _sorted_added(bar_core(m), 1, n):
        term = SparsePoly.constant(delta1(mu, n)) * schur(bar_quotient(mu).q1)
        lhs = lhs + term
    rhs = subst_2t2(schur((n,) * (m - n)))
    return _result("main1", {"m": m, "n": n}, lhs, rhs, t0)


def check_main2(m, n):
    """Signed Q*S sum over color-0 additions equals the empty-Q subsum with
    odd t-variables shifted by the s-variables."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    t0 = time.perf_counter()
    members = _sorted_added(bar_core(-m), 0, n)
    lhs = SparsePoly.zero()
    rhs = SparsePoly.zero()
    for mu in members:
        quot = bar_quotient(mu)
        sign = SparsePoly.constant(delta0(mu, m))
        lhs = lhs + sign * schur_q(quot.q0) * schur(quot.q1)
        if not quot.q0:
            rhs = rhs + sign * subst_u(schur(quot.q1))
    return _result("main2", {"m": m, "n": n}, lhs, rhs, t0)


def check_trapezoid(m, n):
    """The trapezoidal Q-function in shifted variables equals the signed
    odd-variable Schur sum over empty-Q color-0 additions."""
    if m - n + 1 < 0:
        raise ValueError("needs m - n + 1 >= 0")
    t0 = time.perf_counter()
    trapezoid = tuple(p for p in range(m, m - n, -1) if p > 0)
    lhs = subst_q_u(schur_q(trapezoid))
    sign = -1 if ((m + 1) * (m + 2 * n) // 2) % 2 else 1
    rhs = SparsePoly.zero()
    for mu in _sorted_added(bar_core(-m), 0, n):
        quot = bar_quotient(mu)
        if not quot.q0:
            coeff = SparsePoly.constant(sign * delta0(mu, m))
            rhs = rhs + coeff * subst_odd(schur(quot.q1))
    return _result("trapezoid", {"m": m, "n": n}, lhs, rhs, t0)


def check_f_power(i, m, n):
    """Iterated lowering operator on a core state against its combinatorial
    expansion over added-node families."""
    if i not in (0, 1):
        raise ValueError("operator index must be 0 or 1")
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    t0 = time.perf_counter()
    if i == 1:
        lhs = f_power_normalized(1, n, FockVector.basis(bar_core(m)))
        rhs = FockVector.zero()
        for lam in _sorted_added(bar_core(m), 1, n):
            rhs = rhs + FockVector.basis(lam)
        rhs = rhs.scale(2 ** n)
    else:
        lhs = f_power_normalized(0, n, FockVector.basis(bar_core(-m)))
        rhs = FockVector.zero()
        for lam in _sorted_added(bar_core(-m), 0, n):
            rhs = rhs + FockVector.basis(lam).scale(Sqrt2Rational.sqrt2_pow(stats(lam).a))
        rhs = rhs.scale(Sqrt2Rational.sqrt2_pow(-(m % 2)))
    return _result("f-power", {"i": i, "m": m, "n": n}, lhs, rhs, t0)


def check_core_states(m):
    """Boson image of the two core states indexed by +-m against the stated
    sign and sqrt(2)-power."""
    if m < 1:
        raise ValueError("needs m >= 1")
    t0 = time.perf_counter()
    lhs_pos, lhs_neg = phi(FockVector.basis(bar_core(m))), phi(FockVector.basis(bar_core(-m)))
    rhs_pos, rhs_neg = core_state_image(m), core_state_image(-m)
    lhs = "core +%d -> %s\ncore -%d -> %s" % (m, lhs_pos, m, lhs_neg)
    rhs = "core +%d -> %s\ncore -%d -> %s" % (m, rhs_pos, m, rhs_neg)
    passed = lhs_pos == rhs_pos and lhs_neg == rhs_neg
    return _result("core-states", {"m": m}, lhs, rhs, t0, passed)


def check_phi_consistency(i, m, n):
    """Fermionic straightening against the closed-form boson image, state by
    state over a whole added-node family."""
    if i not in (0, 1):
        raise ValueError("color must be 0 or 1")
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    t0 = time.perf_counter()
    core = bar_core(m if i == 1 else -m)
    lhs_lines, rhs_lines = [], []
    passed = True
    for lam in _sorted_added(core, i, n):
        left = phi(FockVector.basis(lam))
        right = phi_closed_form(lam, i, m, n)
        passed = passed and left == right
        lhs_lines.append("%s -> %s" % (lam, left))
        rhs_lines.append("%s -> %s" % (lam, right))
    return _result("phi-consistency", {"i": i, "m": m, "n": n},
                   "\n".join(lhs_lines), "\n".join(rhs_lines), t0, passed)


# ---------------------------------------------------------------------------
# symmetric-function property checks
# ---------------------------------------------------------------------------

def _partitions_of(n, max_part=None):
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first):
            yield (first,) + rest


def _strict_partitions_of(n, max_part=None):
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in _strict_partitions_of(n - first, first - 1):
            yield (first,) + rest


def check_symfunc_homogeneity(max_weight=10):
    """Every S and Q polynomial is homogeneous of its index weight."""
    t0 = time.perf_counter()
    bad = 0
    cases = 0
    for w in range(max_weight + 1):
        for lam in _partitions_of(w):
            cases += 1
            p = schur(lam)
            if p.is_zero() or not p.is_homogeneous() or p.weighted_degree() != w:
                bad += 1
        for lam in _strict_partitions_of(w):
            cases += 1
            p = schur_q(lam)
            if p.is_zero() or not p.is_homogeneous() or p.weighted_degree() != w:
                bad += 1
    report = "%d violations in %d cases" % (bad, cases)
    return _result("symfunc-props:homogeneity", {"max_weight": max_weight},
                   report, "0 violations in %d cases" % cases, t0, bad == 0)


def check_symfunc_antisymmetry(max_index=8):
    """The pair function changes sign under index swap and vanishes on the
    diagonal."""
    t0 = time.perf_counter()
    bad = 0
    cases = 0
    for m in range(max_index + 1):
        for n in range(m + 1):
            cases += 1
            if not (qq_pair(m, n) + qq_pair(n, m)).is_zero():
                bad += 1
    report = "%d violations in %d cases" % (bad, cases)
    return _result("symfunc-props:antisymmetry", {"max_index": max_index},
                   report, "0 violations in %d cases" % cases, t0, bad == 0)


def check_symfunc_pfaffian_det(trials=6, seed=20260815):
    """Squared Pfaffian equals the determinant for random skew matrices."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    gens = [SparsePoly.constant(1), SparsePoly.variable(tvar(1)),
            SparsePoly.variable(tvar(2)), SparsePoly.variable(svar(1)),
            SparsePoly.variable(svar(3))]
    bad = 0
    for trial in range(trials):
        d = rng.choice((2, 4, 6))
        rows = [[SparsePoly.zero()] * d for _ in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                entry = SparsePoly.constant(rng.randint(-3, 3)) * rng.choice(gens)
                rows[i][j] = entry
                rows[j][i] = -entry
        if not (pfaffian(rows) ** 2 - poly_det(rows)).is_zero():
            bad += 1
    report = "%d violations in %d trials" % (bad, trials)
    return _result("symfunc-props:pfaffian-det", {"trials": trials, "seed": seed},
                   report, "0 violations in %d trials" % trials, t0, bad == 0)


def check_symfunc_bialternant(max_weight=6, max_length=3, points=5, seed=20260815):
    """Determinantal Schur polynomials specialize to the ratio of alternants
    at random rational points."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    zpoints = []
    while len(zpoints) < points:
        zs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(max_length)]
        if 0 not in zs and len(set(zs)) == max_length:
            zpoints.append(zs)
    bad = 0
    cases = 0
    for w in range(max_weight + 1):
        for lam in _partitions_of(w):
            if len(lam) > max_length:
                continue
            specialized = power_sum_specialize(schur(lam), max_length)
            for zs in zpoints:
                cases += 1
                point = {zvar(k + 1): Sqrt2Rational(zs[k]) for k in range(max_length)}
                if specialized.evaluate(point) != bialternant_eval(lam, zs):
                    bad += 1
    report = "%d violations in %d cases" % (bad, cases)
    return _result("symfunc-props:bialternant",
                   {"max_weight": max_weight, "max_length": max_length,
                    "points": points, "seed": seed},
                   report, "0 violations in %d cases" % cases, t0, bad == 0)


def check_symfunc_props():
    return [check_symfunc_homogeneity(), check_symfunc_antisymmetry(),
            check_symfunc_pfaffian_det(), check_symfunc_bialternant()]


# ---------------------------------------------------------------------------
# suite runner
# ---------------------------------------------------------------------------

def run_suite(cfg):
    """Run the selected families over the configured grid, in a fixed order."""
    results = []
    for family in cfg.families:
        if family == "main1":
            for m in range(cfg.max_m + 1):
                for n in range(min(m, cfg.max_n) + 1):
                    results.append(check_main1(m, n))
        elif family == "main2":
            for m in range(cfg.max_m + 1):
                for n in range(cfg.max_n + 1):
                    results.append(check_main2(m, n))
        elif family == "trapezoid":
            for m in range(cfg.max_m + 1):
                for n in range(cfg.max_n + 1):
                    if m - n + 1 >= 0:
                        results.append(check_trapezoid(m, n))
        elif family == "f-power":
            for i in (0, 1):
                for m in range(cfg.max_m + 1):
                    for n in range(cfg.max_n + 1):
                        results.append(check_f_power(i, m, n))
        elif family == "core-states":
            for m in range(1, cfg.max_m + 1):
                results.append(check_core_states(m))
        elif family == "phi-consistency":
            for i in (0, 1):
                for m in range(cfg.max_m + 1):
                    for n in range(cfg.max_n + 1):
                        results.append(check_phi_consistency(i, m, n))
        elif family == "symfunc-props":
            results.extend(check_symfunc_props())
    return results
