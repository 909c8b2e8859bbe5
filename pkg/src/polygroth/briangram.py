"""Brianchon-Gram decompositions with exact verification.

A polyhedron's indicator function equals the signed sum of the indicator
functions of its tangent cones along the nonempty relatively bounded faces,
with sign (-1)^(dim F + ell); for polytopes this runs over all faces with
sign (-1)^(dim F).  Verification is symbolic: both sides are constant on
the cells of the arrangement of the parent's facet hyperplanes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructible import (
    And,
    Atom,
    ConstructibleSet,
    DEFAULT_MAX_HYPERPLANES,
    Or,
    SignedPolyCombo,
    functions_equal,
)
from .errors import DomainError
from .euler import chi
from .exactq import vec
from .polyhedron import (
    Face,
    HPolyhedron,
    contains,
    faces,
    irredundant,
    is_empty,
    is_relatively_bounded,
    is_visible,
    recession,
    tangent_cone,
)


@dataclass(frozen=True)
class BGTerm:
    face: Face
    sign: int
    cone: HPolyhedron  # tangent cone of the parent along the face


@dataclass(frozen=True)
class BGDecomposition:
    parent: HPolyhedron
    ell: int  # lineality dimension of the parent
    terms: tuple[BGTerm, ...]

    def combo(self) -> SignedPolyCombo:
        out = SignedPolyCombo.zero(self.parent.ambient)
        for t in self.terms:
            out = out + SignedPolyCombo.of_polyhedron(t.cone, t.sign)
        return out


def bg_decompose(P: HPolyhedron) -> BGDecomposition:
    """Sign (-1)^(dim F + ell) tangent-cone term per nonempty relatively
    bounded face; the empty polyhedron decomposes into nothing."""
    if is_empty(P):
        return BGDecomposition(P, 0, ())
    Q = irredundant(P)
    ell = recession(Q).ell
    terms = []
    for f in faces(Q):
        if not is_relatively_bounded(Q, f):
            continue
        sign = (-1) ** (f.dim + ell)
        terms.append(BGTerm(f, sign, tangent_cone(Q, f)))
    return BGDecomposition(Q, ell, tuple(terms))


def bg_verify(P: HPolyhedron,
              max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> bool:
    """Exact check that the decomposition reproduces the indicator of P."""
    dec = bg_decompose(P)
    lhs = SignedPolyCombo.of_polyhedron(P) if not is_empty(P) \
        else SignedPolyCombo.zero(P.ambient)
    return functions_equal(lhs, dec.combo(), max_hyperplanes)


def face_constructible(F: Face) -> ConstructibleSet:
    """The closed face as a constructible set: parent rows plus the tight
    rows reversed (so they hold with equality)."""
    parent = F.parent
    atoms = [Atom(a, b) for a, b in parent.rows]
    atoms += [Atom(tuple(-c for c in a), -b)
              for i, (a, b) in enumerate(parent.rows) if i in F.tight]
    return ConstructibleSet(parent.ambient, And(tuple(atoms)))


def _relatively_bounded_faces(P: HPolyhedron):
    if is_empty(P):
        raise DomainError("the empty polyhedron has no faces")
    Q = irredundant(P)
    return Q, [f for f in faces(Q) if is_relatively_bounded(Q, f)]


def bounded_union_chi(P: HPolyhedron,
                      max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> int:
    """chi of the union of the relatively bounded faces; equals (-1)^ell."""
    Q, bounded = _relatively_bounded_faces(P)
    union = ConstructibleSet(
        Q.ambient, Or(tuple(face_constructible(f).expr for f in bounded)))
    return chi(union, max_hyperplanes)


def visible_union_chi(P: HPolyhedron, x,
                      max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> int:
    """chi of the union of the relatively bounded faces visible from the
    exterior point x; equals (-1)^ell."""
    x = vec(x)
    if contains(P, x):
        raise DomainError("visibility is defined for exterior points only")
    Q, bounded = _relatively_bounded_faces(P)
    visible = [f for f in bounded if is_visible(Q, f, x)]
    union = ConstructibleSet(
        Q.ambient, Or(tuple(face_constructible(f).expr for f in visible)))
    return chi(union, max_hyperplanes)
