"""Intersection numbers on the Grassmannian of projective r-planes in P^d.

Schubert indices follow the weakly increasing box convention
(b_0 <= b_1 <= ... <= b_r <= d - r); the codimension of the cycle sigma_b is
the sum of the entries, and the special cycle zeta of codimension r has index
(0, 1, 1, ..., 1).  Integrals of zeta^k against sigma_b are available through
two independent routes:

* a closed-form factorial evaluation (``special_power_integral``), and
* full expansion in the Chow ring by iterating the dual Pieri rule
  (``zeta_power_integral_pieri``).

Agreement of the two routes over an exhaustive family of small shapes is part
of the package's verification suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import PreconditionError

Index = Tuple[int, ...]


@dataclass(frozen=True)
class GrassShape:
    """The Grassmannian of projective r-planes in projective d-space."""

    r: int
    d: int

    def __post_init__(self):
        if not 0 <= self.r <= self.d:
            raise PreconditionError(f"need 0 <= r <= d, got r={self.r}, d={self.d}")

    @property
    def rows(self) -> int:
        return self.r + 1

    @property
    def width(self) -> int:
        return self.d - self.r

    @property
    def dim(self) -> int:
        return self.rows * self.width


def check_partition(shape: GrassShape, b: Sequence[int]) -> Index:
    """Validate a Schubert index for the shape and return it as a tuple."""
    b = tuple(int(x) for x in b)
    if len(b) != shape.rows:
        raise PreconditionError(
            f"index needs {shape.rows} entries for {shape}, got {len(b)}")
    prev = 0
    for x in b:
        if x < prev:
            raise PreconditionError(f"index {b} is not weakly increasing")
        prev = x
    if b and (b[0] < 0 or b[-1] > shape.width):
        raise PreconditionError(f"index {b} leaves the box of width {shape.width}")
    return b


def zero_index(shape: GrassShape) -> Index:
    return (0,) * shape.rows


def point_index(shape: GrassShape) -> Index:
    return (shape.width,) * shape.rows


def zeta_index(shape: GrassShape) -> Index:
    """Index of the special cycle of codimension r: r ones and one zero."""
    return (0,) + (1,) * shape.r


class SchubertCombo:
    """Finite formal rational combination of Schubert cycles on one shape.

    Terms map increasing box indices to nonzero coefficients.  Coefficients
    arising from Pieri multiplication stay plain integers; scalar action by a
    Fraction promotes them.
    """

    __slots__ = ("shape", "terms")

    def __init__(self, shape: GrassShape, terms: Dict[Index, Fraction] | None = None):
        self.shape = shape
        self.terms: Dict[Index, Fraction] = {}
        if terms:
            for b, c in terms.items():
                if c == 0:
                    continue
                self.terms[check_partition(shape, b)] = c

    @classmethod
    def single(cls, shape: GrassShape, b: Sequence[int], coeff=1) -> "SchubertCombo":
        return cls(shape, {tuple(b): coeff})

    def coefficient(self, b: Sequence[int]) -> Fraction:
        return Fraction(self.terms.get(tuple(b), 0))

    def scale(self, c) -> "SchubertCombo":
        out = SchubertCombo(self.shape)
        if c != 0:
            out.terms = {b: c * v for b, v in self.terms.items()}
        return out

    def __add__(self, other: "SchubertCombo") -> "SchubertCombo":
        if self.shape != other.shape:
            raise PreconditionError("cannot add combinations on different shapes")
        out = SchubertCombo(self.shape)
        out.terms = dict(self.terms)
        for b, c in other.terms.items():
            v = out.terms.get(b, 0) + c
            if v == 0:
                out.terms.pop(b, None)
            else:
                out.terms[b] = v
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, SchubertCombo)
                and self.shape == other.shape and self.terms == other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Index, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*s{list(b)}" for b, c in self)
        return f"SchubertCombo({self.shape}, {body or '0'})"


def special_power_integral(shape: GrassShape, k: int, b: Sequence[int]) -> Fraction:
    """Integral of zeta^k . sigma_b by the closed factorial formula.

    With a_i = b_i + i, the value is
    k! / prod_i (k - d + r + a_i)! * prod_{i<j} (a_j - a_i)
    whenever r*k + sum(b) equals the dimension of the shape; a negative
    factorial argument means the cycle is forced outside the box and the
    whole product vanishes.  A failed dimension count also gives zero.
    """
    b = check_partition(shape, b)
    if k < 0:
        raise PreconditionError("power must be non-negative")
    if shape.r * k + sum(b) != shape.dim:
        return Fraction(0)
    a = [bi + i for i, bi in enumerate(b)]
    shifts = [k - shape.d + shape.r + ai for ai in a]
    if any(s < 0 for s in shifts):
        return Fraction(0)
    num = factorial(k)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            num *= a[j] - a[i]
    den = 1
    for s in shifts:
        den *= factorial(s)
    return Fraction(num, den)


def _vertical_strips(lam: Index, p: int, max_part: int) -> List[Index]:
    """All partitions obtained from a decreasing tuple by a vertical p-strip.

    At most one box per row, result decreasing and capped at max_part.
    """
    n = len(lam)
    out: List[Index] = []
    acc: List[int] = [0] * n

    def rec(i: int, prev: int, used: int) -> None:
        if p - used > n - i:
            return
        if i == n:
            if used == p:
                out.append(tuple(acc))
            return
        acc[i] = lam[i]
        rec(i + 1, lam[i], used)
        grown = lam[i] + 1
        if used < p and grown <= prev and grown <= max_part:
            acc[i] = grown
            rec(i + 1, grown, used + 1)

    rec(0, max_part, 0)
    return out


def pieri_multiply(combo: SchubertCombo, p: int) -> SchubertCombo:
    """Multiply a combination by the vertical-strip class sigma_{1^p}.

    Dual Pieri rule: each term, read as a decreasing partition, gains a
    vertical strip of p boxes (at most one per row); anything leaving the box
    is discarded.  p = 0 is the identity, p may not exceed the row count.
    """
    shape = combo.shape
    if not 0 <= p <= shape.rows:
        raise PreconditionError(f"strip size {p} not in 0..{shape.rows}")
    out = SchubertCombo(shape)
    terms = out.terms
    width = shape.width
    for b, c in combo.terms.items():
        lam = b[::-1]
        for mu in _vertical_strips(lam, p, width):
            key = mu[::-1]
            v = terms.get(key, 0) + c
            if v == 0:
                terms.pop(key, None)
            else:
                terms[key] = v
    return out


def integral(combo: SchubertCombo) -> Fraction:
    """Degree map: the coefficient of the point class, zero if absent."""
    return combo.coefficient(point_index(combo.shape))


# Highest zeta-power expansion reached so far, per (shape, starting index).
# Extending an entry reuses the stored combination; only the last level is
# kept, so memory stays at one combination per distinct query.  Under
# concurrent use the worst case is recomputation, never a wrong value.
_zeta_progress: Dict[Tuple[GrassShape, Index], Tuple[int, SchubertCombo]] = {}


def zeta_power_integral_pieri(shape: GrassShape, k: int, b: Sequence[int]) -> Fraction:
    """Integral of zeta^k . sigma_b by k iterated Pieri multiplications.

    Fully independent of the closed form: expands the product in the Chow
    ring and reads off the point-class coefficient.
    """
    b = check_partition(shape, b)
    if k < 0:
        raise PreconditionError("power must be non-negative")
    key = (shape, b)
    done, combo = _zeta_progress.get(key, (0, SchubertCombo.single(shape, b)))
    if done > k:
        done, combo = 0, SchubertCombo.single(shape, b)
    for _ in range(k - done):
        combo = pieri_multiply(combo, shape.r)
    _zeta_progress[key] = (k, combo)
    return integral(combo)


def iter_box_indices(shape: GrassShape, max_weight: int | None = None) -> Iterator[Index]:
    """All weakly increasing indices in the box, optionally capped in weight."""

    def rec(prefix: List[int], remaining_rows: int, weight: int) -> Iterator[Index]:
        if remaining_rows == 0:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 0
        for v in range(lo, shape.width + 1):
            w = weight + v
            if max_weight is not None and w > max_weight:
                break
            prefix.append(v)
            yield from rec(prefix, remaining_rows - 1, w)
            prefix.pop()

    return rec([], shape.rows, 0)
