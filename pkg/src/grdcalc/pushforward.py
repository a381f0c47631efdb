"""Closed-form push-forwards of alpha, beta, gamma and their re-derivation.

For rho = 0 the series space covers the moduli space of pointed genus-g
curves with degree N, and the push-forward of each tautological class is an
explicit combination of lambda, psi and the boundary classes delta_i.  The
closed forms are stated here directly; ``solve_from_families`` re-derives
them by assembling the special-family data into an over-determined exact
linear system, which must be consistent with a unique solution.  The two
routes agreeing coefficient-for-coefficient is the package's central check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from . import linalg
from .errors import ConsistencyError, PreconditionError
from .families import ClassLabel, push_m21, push_marked
from .invariants import castelnuovo_count, require_rho_zero, xi
from .picard import (LAMBDA, PSI, DivisorClass, PicSpace, delta, make_class,
                     pullback_i, pullback_j, pullback_k, reduce_m21)


@dataclass(frozen=True)
class PushforwardSolution:
    """Solution of the push-forward problem in the a*lambda - sum b_i delta_i + c*psi convention."""

    a: Fraction
    b: Tuple[Fraction, ...]
    c: Fraction

    def as_divisor_class(self, g: int) -> DivisorClass:
        if len(self.b) != g:
            raise PreconditionError(f"need {g} boundary coefficients, got {len(self.b)}")
        items: Dict[str, Fraction] = {LAMBDA: self.a, PSI: self.c}
        for i, bi in enumerate(self.b):
            items[delta(i)] = -bi
        return make_class(PicSpace.mg1(g), items)

    @classmethod
    def from_divisor_class(cls, D: DivisorClass) -> "PushforwardSolution":
        if D.space.kind != "mg1":
            raise PreconditionError("expected a class on mg1(g)")
        g = D.space.g
        return cls(a=D.get(LAMBDA),
                   b=tuple(-D.get(delta(i)) for i in range(g)),
                   c=D.get(PSI))


def _require_finite_cover_params(g: int, r: int, d: int) -> None:
    require_rho_zero(g, r, d)
    if g <= 2:
        raise PreconditionError("push-forward prefactor has a pole for g <= 2")


def alpha(g: int, r: int, d: int) -> DivisorClass:
    """Push-forward of the squared line-bundle class, on mg1(g).

    dN/(6(g-1)(g-2)) times
    [ 6(gd - 2g^2 + 8d - 8g + 4) lambda + (2g^2 - gd + 3g - 4d - 2) delta_0
      + 6 sum_i (g-i)(gd + 2ig - 2id - 2d) delta_i - 6d(g-2) psi ].
    """
    _require_finite_cover_params(g, r, d)
    n = castelnuovo_count(g, r, d)
    pref = Fraction(d, 6 * (g - 1) * (g - 2)) * n
    items: Dict[str, Fraction] = {
        LAMBDA: pref * 6 * (g * d - 2 * g * g + 8 * d - 8 * g + 4),
        delta(0): pref * (2 * g * g - g * d + 3 * g - 4 * d - 2),
        PSI: pref * (-6 * d * (g - 2)),
    }
    for i in range(1, g):
        items[delta(i)] = pref * 6 * (g - i) * (g * d + 2 * i * g - 2 * i * d - 2 * d)
    return make_class(PicSpace.mg1(g), items)


def beta(g: int, r: int, d: int) -> DivisorClass:
    """Push-forward of (line bundle class).(dualizing class), on mg1(g).

    dN/(2(g-1)) times
    [ 12 lambda - delta_0 + 4 sum_i (g-i)(g-i-1) delta_i - 2(g-1) psi ].
    """
    require_rho_zero(g, r, d)
    if g <= 1:
        raise PreconditionError("push-forward prefactor has a pole for g <= 1")
    n = castelnuovo_count(g, r, d)
    pref = Fraction(d, 2 * (g - 1)) * n
    items: Dict[str, Fraction] = {
        LAMBDA: pref * 12,
        delta(0): -pref,
        PSI: pref * (-2 * (g - 1)),
    }
    for i in range(1, g):
        items[delta(i)] = pref * 4 * (g - i) * (g - i - 1)
    return make_class(PicSpace.mg1(g), items)


def gamma(g: int, r: int, d: int) -> DivisorClass:
    """Push-forward of the section-bundle class, on mg1(g).

    N/(2(g-1)(g-2)) times
    [ (-(g+3) xi + 5r(r+2)) lambda - d(r+1)(g-2) psi
      + (1/6)((g+1) xi - 3r(r+2)) delta_0
      + sum_i (g-i)(i xi + (g-i-2) r(r+2)) delta_i ].
    """
    _require_finite_cover_params(g, r, d)
    n = castelnuovo_count(g, r, d)
    x = xi(g, r, d)
    pref = Fraction(1, 2 * (g - 1) * (g - 2)) * n
    rr = r * (r + 2)
    items: Dict[str, Fraction] = {
        LAMBDA: pref * (-(g + 3) * x + 5 * rr),
        PSI: pref * (-d * (r + 1) * (g - 2)),
        delta(0): pref * Fraction(1, 6) * ((g + 1) * x - 3 * rr),
    }
    for i in range(1, g):
        items[delta(i)] = pref * (g - i) * (i * x + (g - i - 2) * rr)
    return make_class(PicSpace.mg1(g), items)


_CLOSED_FORMS = {ClassLabel.ALPHA: alpha, ClassLabel.BETA: beta, ClassLabel.GAMMA: gamma}


def closed_form(g: int, r: int, d: int, label: ClassLabel) -> DivisorClass:
    return _CLOSED_FORMS[label](g, r, d)


def combination(g: int, r: int, d: int, c_alpha, c_beta, c_gamma,
                pullback_part: DivisorClass | None = None) -> DivisorClass:
    """Push forward a combination of alpha, beta, gamma and a pulled-back class.

    The cover has degree N, so the push-forward of a pulled-back divisor is
    N times that divisor (projection formula).
    """
    require_rho_zero(g, r, d)
    space = PicSpace.mg1(g)
    out = DivisorClass.zero(space)
    for coeff, fn in ((c_alpha, alpha), (c_beta, beta), (c_gamma, gamma)):
        coeff = Fraction(coeff)
        if coeff != 0:
            out = out + fn(g, r, d).scale(coeff)
    if pullback_part is not None and not pullback_part.is_zero():
        if pullback_part.space != space:
            raise PreconditionError("pullback part must live on mg1(g)")
        out = out + pullback_part.scale(castelnuovo_count(g, r, d))
    return out


def solve_from_families(g: int, r: int, d: int, label: ClassLabel) -> PushforwardSolution:
    """Recover the push-forward from special-family data alone.

    Writing the unknown class as a*lambda - sum_{i<g} b_i delta_i + c*psi,
    three families constrain it:

    * moving marked point, one equation per h in 1..g-1:
      b_h - b_{g-h} + (2h-1) c = degree of the push-forward on that family
      (for even g the h = g/2 equation degenerates to (g-1)c = rhs and is
      kept, since it still pins c);
    * elliptic-tail family, one equation per epsilon_i, i in 2..g-2: the
      restriction of the unknown class must vanish;
    * genus-2-tail family: the restriction matches the known push-forward,
      compared in the reduced basis (lambda, delta_1, psi) because raw
      delta_0 coefficients are only defined modulo the genus-2 relation.

    The system has about twice as many equations as unknowns; it is solved
    by exact elimination and every redundant equation is required to hold.
    """
    require_rho_zero(g, r, d)
    if g < 5:
        raise PreconditionError("family assembly needs g >= 5")
    nvars = g + 2  # a, b_0..b_{g-1}, c
    col_a, col_c = 0, g + 1

    def col_b(i: int) -> int:
        return 1 + i

    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []

    def new_row() -> List[Fraction]:
        return [Fraction(0)] * nvars

    for h in range(1, g):
        row = new_row()
        row[col_b(h)] += 1
        row[col_b(g - h)] -= 1
        row[col_c] += 2 * h - 1
        rows.append(row)
        rhs.append(push_marked(g, r, d, h, label))

    for i in range(2, g - 1):
        row = new_row()
        row[col_b(1)] += Fraction((g - i) * (g - i - 1), (g - 1) * (g - 2))
        row[col_b(g - 1)] += Fraction((g - i) * (i - 1), g - 2)
        row[col_b(i)] -= 1
        rows.append(row)
        rhs.append(Fraction(0))

    target = reduce_m21(push_m21(g, r, d, label))
    row = new_row()
    row[col_a], row[col_b(0)] = Fraction(1), Fraction(-10)
    rows.append(row)
    rhs.append(target.get(LAMBDA))
    row = new_row()
    row[col_b(0)], row[col_b(g - 1)] = Fraction(2), Fraction(-1)
    rows.append(row)
    rhs.append(target.get(delta(1)))
    row = new_row()
    row[col_b(g - 2)] = Fraction(1)
    rows.append(row)
    rhs.append(target.get(PSI))

    names = ["a"] + [f"b_{i}" for i in range(g)] + ["c"]
    try:
        x = linalg.solve_unique(rows, rhs)
    except linalg.InconsistentSystemError as exc:
        raise ConsistencyError(
            f"family data contradicts for ({g},{r},{d}) {label.value}: {exc}") from exc
    except linalg.RankDeficientError as exc:
        free = ", ".join(names[i] for i in exc.free_columns)
        raise ConsistencyError(
            f"family system for ({g},{r},{d}) {label.value} leaves {free} undetermined") from exc
    return PushforwardSolution(a=x[col_a], b=tuple(x[col_b(i)] for i in range(g)), c=x[col_c])


def assembly_matches_closed_form(g: int, r: int, d: int, label: ClassLabel) -> bool:
    """True iff the assembled solution equals the closed form, coefficient for coefficient."""
    assembled = solve_from_families(g, r, d, label).as_divisor_class(g)
    return assembled == closed_form(g, r, d, label)


def annihilated_by_elliptic_tails(g: int, r: int, d: int, label: ClassLabel) -> bool:
    """Restriction of the closed form to the elliptic-tail family vanishes."""
    return pullback_i(g, closed_form(g, r, d, label)).is_zero()


def marked_degrees_match(g: int, r: int, d: int, label: ClassLabel) -> bool:
    """Closed-form degrees on the moving-point family match the family data for every h."""
    D = closed_form(g, r, d, label)
    return all(pullback_k(g, h, D) == push_marked(g, r, d, h, label)
               for h in range(1, g))


def genus2_restriction_matches(g: int, r: int, d: int, label: ClassLabel) -> bool:
    """Closed form restricted to the genus-2-tail family matches the family push-forward."""
    D = closed_form(g, r, d, label)
    return reduce_m21(pullback_j(g, D)) == reduce_m21(push_m21(g, r, d, label))
