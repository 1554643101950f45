"""Gaussian periods of L_n as signed NIB generators (tame n).

With conductor f = p_1 ... p_t (distinct primes), the periods eta_i are the
traces of exp(2*pi*i/f) from Q(zeta_f) to L_n.  They form one full Galois
orbit of NIB generators: eta_i = ((-1)^t * eps / (e*c^2)) *
(a0*rho^(i) + a1*rho^(i+1) + m) for the generator data (a0, a1, m, eps) of
any valid pair, and their shared minimal polynomial is F_+ when
eps = (-1)^t, else F_-.

Which of the three conjugate expressions to *print* is a pure numbering
convention: the identity only pins the period orbit, not which conjugate
is eta_0.  The convention here: when the square-free closed forms apply
they are printed; otherwise the printed conjugate is the one whose value
at the sigma^2-positioned real root equals the canonical period (the
coset of 1).  The independent oracle never relies on the convention: it
reconstructs the minimal polynomial from period sums over index-3
subgroups of (Z/fZ)^* and compares exactly after rounding.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import mpmath

from .arith import factor, legendre3, mobius
from .cubic_field import FieldElement, MonicCubic, numeric_roots
from .invariants import conductor, require_tame
from .nib import (
    NibGenerator,
    all_generators,
    canonical_pair,
    epsilon,
    generator,
    special_forms,
)


class PrecisionInsufficientError(ArithmeticError):
    """The working precision cannot separate or certify the period data."""


@dataclass(frozen=True)
class GaussianReport:
    n: int
    prime_count: int
    epsilon: int
    sign: int
    canonical: tuple[int, int]
    display: NibGenerator
    min_poly: MonicCubic
    numeric_match: tuple[bool, float] | None = None

    @property
    def period_element(self) -> FieldElement:
        return self.display.element


@dataclass(frozen=True)
class CorollaryForm:
    """Simplified period identity in the square-free cases."""

    kind: str  # "lehmer" (3 not dividing n, Delta square-free) or "h"
    n: int
    prime_count: int
    v: int | None
    element: FieldElement
    min_poly: MonicCubic


@dataclass(frozen=True)
class NumericVerification:
    ok: bool
    residual: float
    precision_bits: int
    subgroup: str | None


def _display_generator(n: int) -> NibGenerator:
    """The generator printed as "the" Gaussian period of L_n."""
    inv = conductor(n)
    dec = inv.decomposition
    t = inv.prime_count
    mu = 1 if t % 2 == 0 else -1
    if n % 3 != 0 and dec.e == 1 and dec.c == 1:
        w = mu * legendre3(n)
        return generator(n, w, 0)
    if n % 27 == 12 and dec.e == 1 and dec.c == 3:
        return generator(n, mu, -mu)
    return _display_by_matching(n)


def _display_by_matching(n: int, bits: int = 96) -> NibGenerator:
    inv = conductor(n)
    t = inv.prime_count
    mu = 1 if t % 2 == 0 else -1
    trio = [g for g in all_generators(n) if g.epsilon == mu]
    roots = numeric_roots(n, bits)
    with mpmath.workprec(bits + 32):
        subgroups = _matched_subgroup(n, trio, roots, bits)
        if subgroups is None:
            if bits >= 1024:
                raise PrecisionInsufficientError(
                    f"cannot identify the period subgroup for n={n} at {bits} bits"
                )
            return _display_by_matching(n, bits * 2)
        _, periods = subgroups
        eta0 = periods[0]
        tol = mpmath.mpf(2) ** (-bits // 3)
        hits = [g for g in trio if abs(g.element.eval_at(roots[2]) - eta0) < tol]
        if len(hits) != 1:
            if bits >= 1024:
                raise PrecisionInsufficientError(
                    f"cannot separate period conjugates for n={n} at {bits} bits"
                )
            return _display_by_matching(n, bits * 2)
        return hits[0]


def period_identity(n: int, verify_bits: int | None = None) -> GaussianReport:
    """The Gaussian-period identification for tame n.

    The report carries the canonical pair, its trace sign eps, the global
    sign (-1)^t * eps, the printed generator (one fixed conjugate of the
    period orbit) and the period minimal polynomial.
    """
    require_tame(n)
    inv = conductor(n)
    t = inv.prime_count
    pair = canonical_pair(n).canonical
    eps = epsilon(n, *pair)
    mu = 1 if t % 2 == 0 else -1
    sign = mu * eps
    display = _display_generator(n)
    report = GaussianReport(
        n=n,
        prime_count=t,
        epsilon=eps,
        sign=sign,
        canonical=pair,
        display=display,
        min_poly=display.min_poly,
    )
    if display.epsilon != mu or display.element.trace() != mobius(inv.conductor):
        raise ArithmeticError(f"period trace violation for n={n}; arithmetic bug")
    if verify_bits is not None:
        result = numeric_verify(n, verify_bits)
        report = dataclasses.replace(report, numeric_match=(result.ok, result.residual))
    return report


def corollary_forms(n: int) -> CorollaryForm | None:
    """The simplified square-free identities, when their hypotheses hold.

    3 not dividing n and Delta_n square-free: eta = (-1)^t*(n/3)*(v_n + rho),
    v_n = ((n/3) - n)/3, minimal polynomial f_+/- or g_+/- by the parity
    of t.  n = 12 (mod 27) and Delta_n/27 square-free: eta =
    (-1)^(t+1)/9*(rho^2 - (n+2)*rho - 5) with h_+/-.
    """
    t = conductor(n).prime_count
    mu = 1 if t % 2 == 0 else -1
    sf = special_forms(n)
    if sf is None:
        return None
    poly = sf.poly_plus if mu == 1 else sf.poly_minus
    if sf.kind in ("f", "g"):
        w = mu * legendre3(n)
        v = (legendre3(n) - n) // 3
        elem = FieldElement.from_coeffs(n, w * v, w, 0)
        return CorollaryForm("lehmer", n, t, v, elem, poly)
    # eta = (-1)^(t+1)/9 * (rho^2 - (n+2)*rho - 5)
    w = -mu
    elem = FieldElement(n, (-5 * w, -(n + 2) * w, w), 9)
    return CorollaryForm("h", n, t, None, elem, poly)


class _CubeClassifier:
    """Classifies units of (Z/fZ)^* by cubic-residue character per prime."""

    def __init__(self, f: int):
        self.f = f
        fac = factor(f)
        if any(e > 1 for _, e in fac.factors):
            raise ValueError(f"f = {f} is not square-free")
        self.primes = fac.primes()
        self.split_primes = tuple(p for p in self.primes if p % 3 == 1)
        if not self.split_primes:
            raise ValueError(f"3 does not divide phi({f}): no cubic subfield")
        self._maps = []
        for p in self.split_primes:
            g = _primitive_root(p)
            w = pow(g, (p - 1) // 3, p)
            self._maps.append((p, (p - 1) // 3, {1: 0, w: 1, w * w % p: 2}))

    def vector(self, h: int) -> tuple[int, ...]:
        return tuple(tab[pow(h % p, e, p)] for p, e, tab in self._maps)

    def hyperplanes(self) -> list[tuple[int, ...]]:
        """All index-3 subgroups of (Z/fZ)^*, as dual vectors up to scaling."""
        s = len(self.split_primes)
        out: list[tuple[int, ...]] = []

        def rec(i: int, cur: tuple[int, ...], leading: bool) -> None:
            if i == s:
                if any(cur):
                    out.append(cur)
                return
            choices = (0, 1) if leading else (0, 1, 2)
            for coef in choices:
                rec(i + 1, cur + (coef,), leading and coef == 0)

        rec(0, (), True)
        return out

    def full_conductor(self, lam: tuple[int, ...]) -> bool:
        return all(c != 0 for c in lam) and len(self.split_primes) == len(self.primes)


def _primitive_root(p: int) -> int:
    qs = [q for q, _ in factor(p - 1).factors]
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in qs):
        g += 1
    return g


def _period_sums(
    cls: _CubeClassifier, lambdas: list[tuple[int, ...]], precision_bits: int
) -> dict[tuple[int, ...], list[mpmath.mpf]]:
    """One pass over (Z/fZ)^*, accumulating the three cosets per hyperplane."""
    f = cls.f
    with mpmath.workprec(precision_bits + 32):
        zeta = mpmath.expjpi(mpmath.mpf(2) / f)
        buckets = {lam: [mpmath.mpf(0)] * 3 for lam in lambdas}
        z = mpmath.mpc(1)
        for h in range(1, f):
            z = z * zeta
            if math.gcd(h, f) != 1:
                continue
            vec = cls.vector(h)
            re = mpmath.re(z)
            for lam in lambdas:
                k = 0
                for coef, v in zip(lam, vec):
                    k += coef * v
                buckets[lam][k % 3] += re
        return buckets


def numeric_periods(
    f: int, precision_bits: int = 256
) -> list[tuple[str, list[mpmath.mpf]]]:
    """Gaussian periods for every full-conductor index-3 subgroup of (Z/fZ)^*.

    Each entry is (description, [eta_0, eta_1, eta_2]) with eta_0 the coset
    of 1.  Subgroups whose fixed field has conductor properly dividing f
    are discarded.
    """
    if f <= 1:
        raise ValueError(f"need f > 1, got {f}")
    cls = _CubeClassifier(f)
    lambdas = [lam for lam in cls.hyperplanes() if cls.full_conductor(lam)]
    buckets = _period_sums(cls, lambdas, precision_bits)
    out = []
    for lam in lambdas:
        desc = "chi" + "".join(
            f" {p}^{c}" for p, c in zip(cls.split_primes, lam)
        )
        out.append((desc, buckets[lam]))
    return out


def numeric_verify(n: int, precision_bits: int = 256) -> NumericVerification:
    """Check the period identification numerically against subgroup sums.

    True iff some full-conductor subgroup yields three periods whose monic
    cubic (symmetric functions rounded to nearest integers) equals the
    predicted minimal polynomial with pre-rounding residual below
    2^(-precision_bits/2), and the period values match the generator values
    at the sigma-ordered roots under some cyclic labeling.
    """
    require_tame(n)
    inv = conductor(n)
    f = inv.conductor
    report = period_identity(n)
    predicted = report.min_poly.coefficients()
    dec = inv.decomposition
    ec2 = dec.e * dec.c**2
    a0, a1 = report.display.a0, report.display.a1
    m = report.display.m
    roots = numeric_roots(n, precision_bits)
    with mpmath.workprec(precision_bits + 32):
        tol = mpmath.mpf(2) ** (-(precision_bits // 2))
        want = [
            (a0 * roots[i] + a1 * roots[(i + 1) % 3] + m) / ec2 for i in range(3)
        ]
        best_residual = mpmath.inf
        closest_any = mpmath.inf
        matched: str | None = None
        round_ok = False
        for desc, periods in numeric_periods(f, precision_bits):
            e1 = periods[0] + periods[1] + periods[2]
            e2 = (
                periods[0] * periods[1]
                + periods[1] * periods[2]
                + periods[2] * periods[0]
            )
            e3 = periods[0] * periods[1] * periods[2]
            approx = [-e1, e2, -e3]
            rounded = [int(mpmath.nint(x)) for x in approx]
            residual = max(abs(x - r) for x, r in zip(approx, rounded))
            closest_any = min(closest_any, residual)
            if rounded != [int(c) for c in predicted[1:]]:
                continue
            round_ok = True
            if residual < best_residual:
                best_residual = residual
            if residual >= tol:
                continue
            sorted_want = sorted(want)
            sorted_periods = sorted(periods)
            value_err = max(
                abs(a - b) for a, b in zip(sorted_want, sorted_periods)
            )
            if value_err < tol:
                matched = desc
                best_residual = max(residual, value_err)
                break
        if matched is not None:
            return NumericVerification(
                ok=True,
                residual=float(best_residual),
                precision_bits=precision_bits,
                subgroup=matched,
            )
        if round_ok or closest_any > mpmath.mpf("0.1"):
            # Either the right polynomial appeared with too-large residual, or
            # the sums were too inaccurate to trust any rounding at all.
            raise PrecisionInsufficientError(
                f"period residual too large for n={n} at {precision_bits} bits"
            )
        return NumericVerification(
            ok=False,
            residual=float("inf"),
            precision_bits=precision_bits,
            subgroup=None,
        )


def numeric_verify_auto(
    n: int, precision_bits: int = 256, cap: int = 4096
) -> NumericVerification:
    """numeric_verify with the doubling retry policy, capped at 4096 bits."""
    bits = precision_bits
    while True:
        try:
            return numeric_verify(n, bits)
        except PrecisionInsufficientError:
            if bits * 2 > cap:
                raise
            bits *= 2


def _matched_subgroup(
    n: int, trio: list[NibGenerator], roots, bits: int
) -> tuple[str, list[mpmath.mpf]] | None:
    """The subgroup whose period triple equals the generator value set."""
    inv = conductor(n)
    with mpmath.workprec(bits + 32):
        tol = mpmath.mpf(2) ** (-bits // 3)
        vals = sorted(g.element.eval_at(roots[0]) for g in trio)
        for desc, periods in numeric_periods(inv.conductor, bits):
            err = max(abs(a - b) for a, b in zip(vals, sorted(periods)))
            if err < tol:
                return desc, periods
    return None
