"""All normal integral basis generators of a tame simplest cubic field.

For a pair (a0, a1) with a0^2 - a0*a1 + a1^2 = e*c and (a0 + a1*zeta) | A_n,
the element

    alpha = (a0*rho + a1*rho' + m) / (e*c^2),
    m = (eps*e*c^2 - n*(a0 + a1)) / 3,

is a generator of a normal integral basis, where eps in {-1, +1} is
n*(a0+a1) mod 3 if 3 does not divide n and a0 mod 3 if n = 12 (mod 27).
The six unit-associate pairs give all six generators: two sign classes of
three conjugates each.  Every generator is verified on construction
against the trace-form discriminant oracle and the closed-form minimal
polynomial, which are computed along independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eisenstein import PairSet, a_element, find_pair, sigma_pair, EisensteinInt
from .cubic_field import FieldElement, MonicCubic, trace_form_disc
from .invariants import conductor, require_tame


@dataclass(frozen=True)
class NibGenerator:
    """One NIB generator with its defining data and minimal polynomial."""

    n: int
    a0: int
    a1: int
    epsilon: int
    m: int
    element: FieldElement
    min_poly: MonicCubic

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a0, self.a1)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the four independent checks on a generator."""

    trace_ok: bool
    integral_ok: bool
    disc_ok: bool
    closed_form_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.trace_ok and self.integral_ok and self.disc_ok and self.closed_form_ok


def _require_valid_pair(n: int, a0: int, a1: int, e: int, c: int) -> None:
    s = a0 * a0 - a0 * a1 + a1 * a1
    if s != e * c:
        raise ValueError(f"pair ({a0},{a1}) has norm {s}, expected e*c = {e * c}")
    if not EisensteinInt(a0, a1).divides(a_element(n)):
        raise ValueError(f"{a0}{a1:+}ζ does not divide A_{n}")


def epsilon(n: int, a0: int, a1: int) -> int:
    """The trace sign of the generator for the pair (a0, a1)."""
    require_tame(n)
    inv = conductor(n)
    _require_valid_pair(n, a0, a1, inv.decomposition.e, inv.decomposition.c)
    if n % 3 != 0:
        r = n * (a0 + a1) % 3
    else:
        r = a0 % 3
    if r == 0:
        raise ArithmeticError(
            f"epsilon undefined for n={n}, pair ({a0},{a1}): residue 0 mod 3 "
            "cannot occur for a valid pair"
        )
    return 1 if r == 1 else -1


def m_value(n: int, a0: int, a1: int, eps: int) -> int:
    """m = (eps*e*c^2 - n*(a0 + a1)) / 3, asserting exact divisibility."""
    dec = conductor(n).decomposition
    numerator = eps * dec.e * dec.c**2 - n * (a0 + a1)
    if numerator % 3 != 0:
        raise ArithmeticError(
            f"3 does not divide {numerator} for n={n}, pair ({a0},{a1}): invalid input"
        )
    return numerator // 3


def _element(n: int, a0: int, a1: int, m: int, e: int, c: int) -> FieldElement:
    """(a1*rho^2 + (a0 - a1*n - a1)*rho + m - 2*a1) / (e*c^2)."""
    return FieldElement(n, (m - 2 * a1, a0 - a1 * n - a1, a1), e * c * c)


def min_poly_closed(n: int, a0: int, a1: int, m: int, eps: int, sign: int) -> MonicCubic:
    """Closed-form minimal polynomial F_sign of sign*alpha.

    F_+ (sign=+1) and F_- (sign=-1) share the linear coefficient
    (a0*a1*n^2 + 2*(a0+a1)*m*n - e*c*(n+3) + 3*m^2) / (e^2*c^4); the X^2 and
    constant coefficients flip sign with the generator.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    dec = conductor(n).decomposition
    e, c = dec.e, dec.c
    ec = e * c
    lin = Fraction(
        a0 * a1 * n**2 + 2 * (a0 + a1) * m * n - ec * (n + 3) + 3 * m**2,
        e**2 * c**4,
    )
    const = Fraction(
        a0 * a1 * m * n**2
        - a0**2 * a1 * n * (n + 3)
        + (a0 + a1) * m**2 * n
        - ec * m * (n + 3)
        + a0 * a1 * (a0 - a1) * (n**2 + 3 * n + 6)
        + a0**3
        + a1**3
        + m**3
        - 3 * a0**2 * a1,
        e**3 * c**6,
    )
    return MonicCubic(Fraction(-sign * eps), lin, -sign * const)


def verify_nib(g: NibGenerator) -> VerificationReport:
    """Re-check a generator: trace, integrality, disc oracle, closed form."""
    inv = conductor(g.n)
    dec = inv.decomposition
    elem = _element(g.n, g.a0, g.a1, g.m, dec.e, dec.c)
    conj = elem.conjugates()
    tr = elem.trace()
    trace_ok = tr == g.epsilon and abs(tr) == 1
    direct = MonicCubic(-tr, ((conj[0] * conj[1]) + (conj[0] + conj[1]) * conj[2]).as_rational(),
                        -(conj[0] * conj[1] * conj[2]).as_rational())
    integral_ok = direct.is_integral()
    disc_ok = trace_form_disc(*conj) == inv.discriminant
    try:
        closed = min_poly_closed(g.n, g.a0, g.a1, g.m, g.epsilon, 1)
        closed_form_ok = closed == direct and g.min_poly == direct and g.element == elem
    except (ValueError, ArithmeticError):
        closed_form_ok = False
    return VerificationReport(trace_ok, integral_ok, disc_ok, closed_form_ok)


def generator(n: int, a0: int, a1: int) -> NibGenerator:
    """Build and verify the NIB generator for one pair."""
    require_tame(n)
    dec = conductor(n).decomposition
    eps = epsilon(n, a0, a1)
    m = m_value(n, a0, a1, eps)
    elem = _element(n, a0, a1, m, dec.e, dec.c)
    g = NibGenerator(
        n=n,
        a0=a0,
        a1=a1,
        epsilon=eps,
        m=m,
        element=elem,
        min_poly=elem.min_poly(),
    )
    report = verify_nib(g)
    if not report.all_ok:
        raise ArithmeticError(f"generator verification failed for n={n}, pair ({a0},{a1}): {report}")
    return g


def canonical_pair(n: int) -> PairSet:
    """The canonical pair set for s = e*c (tame n)."""
    require_tame(n)
    dec = conductor(n).decomposition
    return find_pair(n, dec.e * dec.c)


def all_generators(n: int) -> list[NibGenerator]:
    """The six generators, ordered [c, σc, σ²c, -c, -σc, -σ²c] from the canonical pair.

    The first trio are mutual conjugates (one minimal polynomial), the
    second trio their negatives (the reflected polynomial).
    """
    pairs = canonical_pair(n)
    p0 = pairs.canonical
    p1 = sigma_pair(p0)
    p2 = sigma_pair(p1)
    ordered = [p0, p1, p2, _neg(p0), _neg(p1), _neg(p2)]
    return [generator(n, *p) for p in ordered]


def _neg(pair: tuple[int, int]) -> tuple[int, int]:
    return (-pair[0], -pair[1])


@dataclass(frozen=True)
class SpecialForm:
    """A square-free-case generator with its f/g/h polynomial pair."""

    kind: str  # "f", "g" or "h"
    element: FieldElement
    pair: tuple[int, int]
    m: int
    poly_plus: MonicCubic
    poly_minus: MonicCubic


def special_forms(n: int) -> SpecialForm | None:
    """The f/g/h closed forms when the square-free hypotheses hold, else None.

    f: n = 1 (mod 3), Delta_n square-free, generator (1-n)/3 + rho.
    g: n = 2 (mod 3), Delta_n square-free, generator (1+n)/3 - rho.
    h: n = 12 (mod 27), Delta_n/27 square-free, generator (rho - rho' + 3)/9.
    """
    dec = conductor(n).decomposition
    square_free = dec.e == 1 and dec.c == 1
    if n % 3 == 1 and square_free:
        m = (1 - n) // 3
        elem = FieldElement(n, (m, 1, 0))
        plus = MonicCubic.of(
            -1, Fraction(-(n**2 + 3 * n + 8), 3), Fraction(-(2 * n**3 + 6 * n**2 + 18 * n + 1), 27)
        )
        return SpecialForm("f", elem, (1, 0), m, plus, plus.reflected())
    if n % 3 == 2 and square_free:
        m = (1 + n) // 3
        elem = FieldElement(n, (m, -1, 0))
        plus = MonicCubic.of(
            -1, Fraction(-(n**2 + 3 * n + 8), 3), Fraction(2 * n**3 + 12 * n**2 + 36 * n + 53, 27)
        )
        return SpecialForm("g", elem, (-1, 0), m, plus, plus.reflected())
    if n % 27 == 12 and dec.e == 1 and dec.c == 3:
        elem = _element(n, 1, -1, 3, 1, 3)
        plus = MonicCubic.of(
            -1, Fraction(-(n**2 + 3 * n - 18), 81), Fraction(4 * n**2 + 12 * n + 9, 729)
        )
        return SpecialForm("h", elem, (1, -1), m=3, poly_plus=plus, poly_minus=plus.reflected())
    return None
