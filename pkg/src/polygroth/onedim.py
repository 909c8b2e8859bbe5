"""Weight-sum invariant of one-dimensional constructible sets over a
subgroup of the rationals.

Every constructible subset of the line is a finite disjoint union of points
and open intervals with rational (or infinite) endpoints; that canonical
shape is computed here, and each group element x picks up a weight in
{-2..2} from how the set approaches x from either side.  Summing weights
over the group gives an invariant that is additive on disjoint unions and,
for a non-divisible group like Z, separates sets that plain Euler
characteristics cannot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .constructible import ConstructibleSet, eval_point, hyperplanes_of
from .errors import UsageError
from .exactq import rat


@dataclass(frozen=True)
class SubgroupQ:
    """The rationals, or the cyclic group c*Z for a positive rational c."""

    generator: Optional[Fraction]  # None means all of Q

    def __post_init__(self):
        if self.generator is not None and self.generator <= 0:
            raise UsageError("cyclic subgroup needs a positive generator")

    @classmethod
    def rationals(cls) -> "SubgroupQ":
        return cls(None)

    @classmethod
    def cyclic(cls, c) -> "SubgroupQ":
        return cls(rat(c))

    @property
    def divisible(self) -> bool:
        return self.generator is None

    def contains(self, x) -> bool:
        if self.generator is None:
            return True
        return (rat(x) / self.generator).denominator == 1


@dataclass(frozen=True)
class OneDimCanonical:
    """Canonical form: sorted singleton points, plus sorted open intervals
    (None = the corresponding infinity), pairwise disjoint, none mergeable."""

    points: tuple[Fraction, ...]
    intervals: tuple[tuple[Optional[Fraction], Optional[Fraction]], ...]

    def member(self, x) -> bool:
        x = rat(x)
        if x in self.points:
            return True
        return any((lo is None or lo < x) and (hi is None or x < hi)
                   for lo, hi in self.intervals)

    def approaches_from_left(self, x) -> bool:
        """Is (x - eps, x) inside the set for small eps?"""
        x = rat(x)
        return any((lo is None or lo < x) and (hi is None or x <= hi)
                   for lo, hi in self.intervals)

    def approaches_from_right(self, x) -> bool:
        x = rat(x)
        return any((lo is None or lo <= x) and (hi is None or x < hi)
                   for lo, hi in self.intervals)


def canonicalize(C: ConstructibleSet) -> OneDimCanonical:
    """Points-and-open-intervals form of a 1-dimensional constructible set.

    Membership is sampled once per region of the line cut by the atom
    boundaries (it is constant there), then consecutive in-set regions merge
    into components; each component contributes its open interior plus any
    closed endpoints.
    """
    if C.ambient != 1:
        raise UsageError("canonicalize runs on 1-dimensional sets")
    cuts = sorted({b / Fraction(a[0]) for a, b in hyperplanes_of(C)})
    # regions: (-inf, c1), {c1}, (c1, c2), ..., {cm}, (cm, +inf)
    regions = []  # (kind, lo, hi) with kind in {"pt", "iv"}
    if not cuts:
        regions.append(("iv", None, None))
    else:
        regions.append(("iv", None, cuts[0]))
        for i, c in enumerate(cuts):
            regions.append(("pt", c, c))
            if i + 1 < len(cuts):
                regions.append(("iv", c, cuts[i + 1]))
        regions.append(("iv", cuts[-1], None))

    def sample(kind, lo, hi):
        if kind == "pt":
            return lo
        if lo is None and hi is None:
            return Fraction(0)
        if lo is None:
            return hi - 1
        if hi is None:
            return lo + 1
        return (lo + hi) / 2

    flags = [eval_point(C, [sample(*r)]) for r in regions]

    points = []
    intervals = []
    i = 0
    while i < len(regions):
        if not flags[i]:
            i += 1
            continue
        j = i
        while j + 1 < len(regions) and flags[j + 1]:
            j += 1
        comp = regions[i:j + 1]
        if len(comp) == 1 and comp[0][0] == "pt":
            points.append(comp[0][1])
        else:
            lo_kind, lo = comp[0][0], comp[0][1]
            hi_kind, hi = comp[-1][0], comp[-1][2]
            if lo_kind == "pt":
                points.append(lo)
            if hi_kind == "pt" and (hi_kind, hi) != (lo_kind, lo):
                points.append(hi)
            intervals.append((lo, hi))
        i = j + 1
    return OneDimCanonical(tuple(points), tuple(intervals))


def weight(C: OneDimCanonical, x) -> int:
    """The five-case local weight of x with respect to the set.

    2 for an isolated point of the set, 1 when exactly one closed side
    sticks in, 0 in the interior of the set or its complement, -1 and -2
    mirror the positive cases for the complement.
    """
    x = rat(x)
    inside = C.member(x)
    left = C.approaches_from_left(x)
    right = C.approaches_from_right(x)
    if inside:
        return 2 - int(left) - int(right)
    return -(int(left) + int(right))


def candidate_points(C: OneDimCanonical) -> list[Fraction]:
    """Where the weight can be nonzero: isolated points and finite interval
    endpoints.  Everywhere else x is interior to the set or its complement,
    so the weight vanishes; the weight tests exercise this."""
    out = set(C.points)
    for lo, hi in C.intervals:
        if lo is not None:
            out.add(lo)
        if hi is not None:
            out.add(hi)
    return sorted(out)


def chi_gamma(C, gamma: SubgroupQ) -> int:
    """Sum of weights over the subgroup (finite support)."""
    canon = C if isinstance(C, OneDimCanonical) else canonicalize(C)
    return sum(weight(canon, x)
               for x in candidate_points(canon) if gamma.contains(x))
