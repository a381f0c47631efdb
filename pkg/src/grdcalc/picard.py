"""Rational divisor class groups of three moduli spaces and their pull-backs.

Spaces
------
* ``mg1(g)``: stable 1-pointed genus-g curves, basis
  (lambda, psi, delta_0, ..., delta_{g-1});
* ``m21``: stable 1-pointed genus-2 curves, basis (lambda, psi, delta_0, delta_1);
* ``m0g(g)``: stable g-pointed rational curves, basis (epsilon_2, ..., epsilon_{g-2}),
  where epsilon_i is the boundary class whose first-marked-point component
  carries i marked points.

The three pull-back maps come from test families inside the space of pointed
genus-g curves: attaching g fixed elliptic tails to a pointed rational curve
(``pullback_i``), attaching a fixed genus-(g-2) curve to a varying pointed
genus-2 curve (``pullback_j``), and moving the marked point along one
component of a fixed two-component curve (``pullback_k``).

A divisor class stores its literal signed coefficients.  Solutions of the
push-forward problem are conventionally written a*lambda - sum b_i delta_i
+ c*psi, so the stored delta coefficients are the negated b_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

from . import linalg
from .errors import PreconditionError

LAMBDA = "lambda"
PSI = "psi"


def delta(i: int) -> str:
    return f"delta_{i}"


def epsilon(i: int) -> str:
    return f"epsilon_{i}"


@dataclass(frozen=True)
class PicSpace:
    """One of the three divisor class groups, identified by kind and genus."""

    kind: str
    g: int

    @classmethod
    def mg1(cls, g: int) -> "PicSpace":
        if g < 2:
            raise PreconditionError("mg1 needs g >= 2")
        return cls("mg1", g)

    @classmethod
    def m21(cls) -> "PicSpace":
        return cls("m21", 2)

    @classmethod
    def m0g(cls, g: int) -> "PicSpace":
        if g < 4:
            raise PreconditionError("m0g needs g >= 4 for a non-empty basis")
        return cls("m0g", g)

    def basis(self) -> Tuple[str, ...]:
        if self.kind in ("mg1", "m21"):
            return (LAMBDA, PSI) + tuple(delta(i) for i in range(self.g))
        return tuple(epsilon(i) for i in range(2, self.g - 1))

    def __str__(self) -> str:
        return {"mg1": f"mg1({self.g})", "m21": "m21", "m0g": f"m0g({self.g})"}[self.kind]


@dataclass
class DivisorClass:
    """Sparse rational coefficient vector over the basis of one space.

    Treated as immutable: arithmetic returns new instances, zero coefficients
    are never stored, and all symbols are validated against the basis.
    """

    space: PicSpace
    coeffs: Dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        allowed = set(self.space.basis())
        clean: Dict[str, Fraction] = {}
        for sym, c in self.coeffs.items():
            if sym not in allowed:
                raise PreconditionError(f"symbol {sym!r} is not in the basis of {self.space}")
            c = Fraction(c)
            if c != 0:
                clean[sym] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, space: PicSpace) -> "DivisorClass":
        return cls(space, {})

    @classmethod
    def basis_vector(cls, space: PicSpace, sym: str, coeff=1) -> "DivisorClass":
        return cls(space, {sym: Fraction(coeff)})

    def get(self, sym: str) -> Fraction:
        return self.coeffs.get(sym, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if self.space != other.space:
            raise PreconditionError("cannot add classes on different spaces")
        out = dict(self.coeffs)
        for sym, c in other.coeffs.items():
            v = out.get(sym, Fraction(0)) + c
            if v == 0:
                out.pop(sym, None)
            else:
                out[sym] = v
        return DivisorClass(self.space, out)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.space, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def scale(self, c) -> "DivisorClass":
        c = Fraction(c)
        if c == 0:
            return DivisorClass.zero(self.space)
        return DivisorClass(self.space, {s: c * v for s, v in self.coeffs.items()})

    def __rmul__(self, c) -> "DivisorClass":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return (isinstance(other, DivisorClass)
                and self.space == other.space and self.coeffs == other.coeffs)

    def sorted_items(self) -> List[Tuple[str, Fraction]]:
        order = {sym: i for i, sym in enumerate(self.space.basis())}
        return sorted(self.coeffs.items(), key=lambda kv: order[kv[0]])

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{s}" for s, c in self.sorted_items())
        return f"DivisorClass({self.space}, {body or '0'})"


def make_class(space: PicSpace, items: Mapping[str, object] | Iterable[Tuple[str, object]]) -> DivisorClass:
    """Convenience constructor from a symbol -> coefficient mapping."""
    mapping = dict(items)
    return DivisorClass(space, {s: Fraction(v) for s, v in mapping.items()})


def _require_space(D: DivisorClass, space: PicSpace, what: str) -> None:
    if D.space != space:
        raise PreconditionError(f"{what} expects a class on {space}, got {D.space}")


def pullback_i(g: int, D: DivisorClass) -> DivisorClass:
    """Restrict a class on mg1(g) to the family of elliptic-tail curves.

    The family attaches g fixed elliptic tails to a varying stable g-pointed
    rational curve.  lambda, psi and delta_0 die; delta_i restricts to
    epsilon_i in the middle range, while delta_1 and delta_{g-1} restrict to
    explicit negative combinations of the epsilon_i.
    """
    if g < 5:
        raise PreconditionError("pullback_i needs g >= 5")
    _require_space(D, PicSpace.mg1(g), "pullback_i")
    target = PicSpace.m0g(g)
    out: Dict[str, Fraction] = {}

    def bump(sym: str, c: Fraction) -> None:
        v = out.get(sym, Fraction(0)) + c
        if v == 0:
            out.pop(sym, None)
        else:
            out[sym] = v

    c1 = D.get(delta(1))
    ctop = D.get(delta(g - 1))
    for i in range(2, g - 1):
        bump(epsilon(i), D.get(delta(i)))
        if c1:
            bump(epsilon(i), -c1 * Fraction((g - i) * (g - i - 1), (g - 1) * (g - 2)))
        if ctop:
            bump(epsilon(i), -ctop * Fraction((g - i) * (i - 1), g - 2))
    return DivisorClass(target, out)


def pullback_j(g: int, D: DivisorClass) -> DivisorClass:
    """Restrict a class on mg1(g) to the genus-2-tail family.

    The family attaches a fixed 2-pointed genus-(g-2) curve to a varying
    pointed genus-2 curve: lambda and delta_0 survive, delta_{g-2} becomes
    -psi, delta_{g-1} becomes delta_1, everything else dies.
    """
    if g < 5:
        raise PreconditionError("pullback_j needs g >= 5")
    _require_space(D, PicSpace.mg1(g), "pullback_j")
    target = PicSpace.m21()
    return make_class(target, {
        LAMBDA: D.get(LAMBDA),
        delta(0): D.get(delta(0)),
        PSI: -D.get(delta(g - 2)),
        delta(1): D.get(delta(g - 1)),
    })


def pullback_k(g: int, h: int, D: DivisorClass) -> Fraction:
    """Degree of a class on mg1(g) on the moving-marked-point family.

    The marked point moves along the genus-h component of a fixed
    two-component curve of total genus g: psi has degree 2h - 1, delta_h
    degree -1, delta_{g-h} degree +1, all other basis classes degree 0.
    For 2h = g the two delta contributions land on the same symbol and
    cancel.
    """
    if not 1 <= h <= g - 1:
        raise PreconditionError(f"need 1 <= h <= g-1, got h={h}")
    _require_space(D, PicSpace.mg1(g), "pullback_k")
    return (2 * h - 1) * D.get(PSI) - D.get(delta(h)) + D.get(delta(g - h))


def epsilon_intersection_matrix(g: int) -> List[List[Fraction]]:
    """Intersection numbers of the test curves against the epsilon basis.

    Square of size g - 3: rows are the curves B_1, ..., B_{g-3} (B_1 moves
    the first marked point along a fixed curve, B_j for j >= 2 moves one
    point on the (g-j)-marked component of a fixed curve in epsilon_j);
    columns are epsilon_2, ..., epsilon_{g-2}.  Row 1 is (g-1, 0, ..., 0);
    row j >= 2 carries -1 on epsilon_j, +1 on epsilon_{j+1} when that is not
    the last column, and g - j - 1 on epsilon_{g-2}.  The g = 5 and g = 6
    degenerations of this pattern are [[4,0],[-1,2]] and
    [[5,0,0],[-1,1,3],[0,-1,2]].
    """
    if g < 5:
        raise PreconditionError("epsilon_intersection_matrix needs g >= 5")
    n = g - 3
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[0][0] = Fraction(g - 1)
    for j in range(2, g - 2):
        rows[j - 1][j - 2] = Fraction(-1)
        if j + 1 <= g - 3:
            rows[j - 1][j - 1] = Fraction(1)
        rows[j - 1][n - 1] += Fraction(g - j - 1)
    return rows


def epsilon_matrix_determinant(g: int) -> Fraction:
    return linalg.determinant(epsilon_intersection_matrix(g))


# Rank-3 reduction on m21: the classical genus-2 relation among the
# generators, 10*lambda = delta_0 + 2*delta_1 (Mumford).  Encoded once so
# that every consumer eliminates delta_0 the same way; the over-determined
# push-forward assembly cross-checks it.
GENUS2_RELATION: Dict[str, Fraction] = {
    LAMBDA: Fraction(10),
    delta(0): Fraction(-1),
    delta(1): Fraction(-2),
}


def reduce_m21(D: DivisorClass) -> DivisorClass:
    """Rewrite a class on m21 in the basis (lambda, delta_1, psi).

    Eliminates delta_0 through delta_0 = 10*lambda - 2*delta_1; idempotent,
    and constant on orbits of the relation.
    """
    _require_space(D, PicSpace.m21(), "reduce_m21")
    c0 = D.get(delta(0))
    if c0 == 0:
        return D
    out = dict(D.coeffs)
    out.pop(delta(0))
    out[LAMBDA] = D.get(LAMBDA) + 10 * c0
    out[delta(1)] = D.get(delta(1)) - 2 * c0
    return DivisorClass(PicSpace.m21(), out)


def parse_class(space: PicSpace, text: str) -> DivisorClass:
    """Parse ``symbol:coeff,symbol:coeff`` into a class on the given space."""
    items: Dict[str, Fraction] = {}
    text = text.strip()
    if text:
        for chunk in text.split(","):
            if ":" not in chunk:
                raise PreconditionError(f"bad class term {chunk!r}, expected symbol:coeff")
            sym, val = chunk.split(":", 1)
            sym = sym.strip()
            items[sym] = items.get(sym, Fraction(0)) + Fraction(val.strip())
    return DivisorClass(space, items)
