"""Kac root classification, positive-root enumeration, and shape recognition.

Roots are classified by iterative reflection descent: repeatedly reflect a
positive vector down at a loopfree vertex pairing positively with it. The
descent ends at a coordinate vector (real root), inside the fundamental
region (imaginary root), or leaves the positive orthant (not a root).
Everything is exact integer arithmetic; enumeration routines are bounded
by :class:`~quiverdec.caps.Caps`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Sequence

from .caps import DEFAULT_CAPS, Caps
from .errors import InternalInconsistency
from .quiver_core import (
    DimVector,
    Quiver,
    connected_components,
    dim_vector,
    has_connected_support,
    p_form,
    pairing_with_simple,
)


class RootClass(Enum):
    NOT_ROOT = "NotRoot"
    REAL = "Real"
    ISOTROPIC_IMAGINARY = "IsotropicImaginary"
    NONISOTROPIC_IMAGINARY = "NonIsotropicImaginary"

    @property
    def is_root(self) -> bool:
        return self is not RootClass.NOT_ROOT

    @property
    def is_imaginary(self) -> bool:
        return self in (RootClass.ISOTROPIC_IMAGINARY, RootClass.NONISOTROPIC_IMAGINARY)


def simple_reflection(q: Quiver, vertex: str, a: Sequence[int]) -> DimVector:
    """Reflect at a loopfree vertex; an involution preserving q and p."""
    a = dim_vector(q, a)
    if not q.is_loopfree(vertex):
        raise ValueError(f"cannot reflect at vertex {vertex!r}: it carries a loop")
    i = q.index(vertex)
    c = pairing_with_simple(q, a, vertex)
    return tuple(e - c if j == i else e for j, e in enumerate(a))


def in_fundamental_region(q: Quiver, a: Sequence[int]) -> bool:
    """Nonzero, nonnegative, connected support, (a, e_i) <= 0 everywhere."""
    a = dim_vector(q, a)
    if any(e < 0 for e in a) or all(e == 0 for e in a):
        return False
    if not has_connected_support(q, a):
        return False
    return all(pairing_with_simple(q, a, v) <= 0 for v in q.vertices)


def classify_root(q: Quiver, a: Sequence[int]) -> RootClass:
    """Classify a vector by reflection descent.

    Accepts a nonzero vector with all entries >= 0 or all <= 0 (a negative
    vector is classified through its absolute value); mixed signs are never
    roots. Descent always picks the lowest-indexed loopfree vertex pairing
    positively, so runs are reproducible.
    """
    a = dim_vector(q, a)
    if all(e == 0 for e in a):
        raise ValueError("the zero vector is not classified")
    if all(e <= 0 for e in a):
        a = tuple(-e for e in a)
    if any(e < 0 for e in a):
        return RootClass.NOT_ROOT

    loopfree = [v for v in q.vertices if q.is_loopfree(v)]
    while True:
        if sum(a) == 1:
            # coordinate vector; at a loop vertex it sits in the fundamental region
            if q.is_loopfree(q.vertices[a.index(1)]):
                return RootClass.REAL
        descended = False
        for v in loopfree:
            if pairing_with_simple(q, a, v) > 0:
                a = simple_reflection(q, v, a)
                descended = True
                break
        if descended:
            if any(e < 0 for e in a):
                return RootClass.NOT_ROOT
            continue
        # no descent available: fundamental region or disconnected support
        if not has_connected_support(q, a):
            return RootClass.NOT_ROOT
        p = p_form(q, a)
        if p == 1:
            return RootClass.ISOTROPIC_IMAGINARY
        if p > 1:
            return RootClass.NONISOTROPIC_IMAGINARY
        raise InternalInconsistency(
            f"vector {a!r} stuck in descent with p={p}; the fundamental region has p >= 1"
        )


def iter_box(bound: Sequence[int], include_zero: bool = False):
    """Yield all componentwise-bounded nonnegative vectors, ascending lex."""
    for vec in itertools.product(*(range(b + 1) for b in bound)):
        if include_zero or any(vec):
            yield vec


def positive_roots_upto(q: Quiver, bound: Sequence[int], caps: Caps = DEFAULT_CAPS) -> tuple[DimVector, ...]:
    """All positive roots componentwise below ``bound``, ascending lex."""
    bound = dim_vector(q, bound)
    if any(b < 0 for b in bound):
        raise ValueError("bound must be nonnegative")
    caps.check_box(bound)
    return tuple(a for a in iter_box(bound) if classify_root(q, a).is_root)


# -- shape recognition -------------------------------------------------------


class ShapeKind(Enum):
    DYNKIN = "Dynkin"
    EXTENDED_DYNKIN = "ExtendedDynkin"
    OTHER = "Other"


@dataclass(frozen=True)
class QuiverShape:
    kind: ShapeKind
    delta: DimVector | None = None
    extending: tuple[str, ...] | None = None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "delta": list(self.delta) if self.delta is not None else None,
            "extending": list(self.extending) if self.extending is not None else None,
        }


def _char_poly_signs(cartan) -> list[Fraction]:
    """Elementary symmetric functions e_k of the eigenvalues, k = 1..n.

    Faddeev-LeVerrier over exact rationals: the matrix is symmetric with
    integer entries, so eigenvalues are real and the e_k decide positive
    (semi)definiteness: all e_k > 0 iff positive definite, all e_k >= 0 iff
    positive semidefinite.
    """
    n = len(cartan)
    m = [[Fraction(x) for x in row] for row in cartan]
    work = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    coeffs = []
    a_prev = Fraction(0)
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                work[i][i] += a_prev
        nxt = [
            [sum(m[i][t] * work[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(nxt[i][i] for i in range(n))
        a_k = -trace / k
        coeffs.append(a_k)
        work = nxt
        a_prev = a_k
    # det(xI - M) = x^n + a_1 x^(n-1) + ... + a_n and e_k = (-1)^k a_k
    return [(-1) ** k * a for k, a in enumerate(coeffs, start=1)]


def _integer_kernel(cartan) -> list[DimVector]:
    """Basis of the rational kernel, scaled to primitive integer vectors."""
    n = len(cartan)
    m = [[Fraction(x) for x in row] for row in cartan]
    pivots = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -m[r][f]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in vec]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        basis.append(tuple(x // g for x in ints))
    return basis


def classify_shape(q: Quiver) -> QuiverShape:
    """Recognize Dynkin / extended Dynkin quivers from the quadratic form.

    Dynkin means positive definite; extended Dynkin means positive
    semidefinite with a one-dimensional radical spanned by a strictly
    positive primitive vector delta (computed from the exact kernel, never
    from a lookup table). Disconnected or empty quivers report Other; use
    :func:`shape_components` for a per-component analysis.
    """
    if q.n == 0 or len(connected_components(q)) != 1:
        return QuiverShape(ShapeKind.OTHER)
    e_k = _char_poly_signs(q.cartan_matrix())
    if all(e > 0 for e in e_k):
        return QuiverShape(ShapeKind.DYNKIN)
    if all(e >= 0 for e in e_k):
        kernel = _integer_kernel(q.cartan_matrix())
        if len(kernel) == 1:
            delta = kernel[0]
            if all(x < 0 for x in delta):
                delta = tuple(-x for x in delta)
            if all(x > 0 for x in delta):
                extending = tuple(v for v, d in zip(q.vertices, delta) if d == 1)
                return QuiverShape(ShapeKind.EXTENDED_DYNKIN, delta, extending)
    return QuiverShape(ShapeKind.OTHER)


def shape_components(q: Quiver):
    """Shape of each connected component, as (vertices, shape) pairs."""
    from .quiver_core import restrict

    return [(comp, classify_shape(restrict(q, comp))) for comp in connected_components(q)]


# -- the affine ADE catalogue -------------------------------------------------


def dynkin_quiver(name: str) -> Quiver:
    """A linearly oriented Dynkin quiver: ``A1``..``An``, ``Dn``, ``E6``-``E8``."""
    family, rank = name[0].upper(), int(name[1:])
    edges: list[tuple[int, int]]
    if family == "A" and rank >= 1:
        edges = [(i, i + 1) for i in range(1, rank)]
    elif family == "D" and rank >= 4:
        edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank)]
    elif family == "E" and rank in (6, 7, 8):
        # chain 1..(rank-1) with vertex ``rank`` hanging off the third node
        edges = [(i, i + 1) for i in range(1, rank - 1)] + [(3, rank)]
    else:
        raise ValueError(f"unknown Dynkin type {name!r}")
    vertices = [str(i) for i in range(1, rank + 1)]
    return Quiver(vertices, [[str(t), str(h)] for t, h in edges])


def extended_dynkin_quiver(name: str) -> Quiver:
    """The extended quiver of an ADE type, with an extending vertex ``0``.

    ``A0`` is the one-loop quiver, ``A1`` the double arrow; the families
    follow the usual affine diagrams. Orientations are arbitrary since the
    bilinear form only sees the underlying graph.
    """
    family, rank = name[0].upper(), int(name[1:])
    if family == "A" and rank == 0:
        return Quiver(["0"], [["0", "0"]])
    if family == "A" and rank >= 1:
        vertices = [str(i) for i in range(rank + 1)]
        edges = [(str(i), str((i + 1) % (rank + 1))) for i in range(rank + 1)]
        return Quiver(vertices, edges)
    if family == "D" and rank >= 4:
        # path p3 .. p(rank-1) with two leaves at each end
        path = [f"p{i}" for i in range(3, rank)]
        vertices = ["0", "1"] + path + ["2", "3"]
        edges = [("0", path[0]), ("1", path[0]), ("2", path[-1]), ("3", path[-1])]
        edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
        return Quiver(vertices, edges)
    if family == "E" and rank in (6, 7, 8):
        base = dynkin_quiver(f"E{rank}")
        # the extending vertex attaches to the affine node of each diagram
        attach = {6: str(rank), 7: "1", 8: str(rank - 1)}[rank]
        return Quiver(list(base.vertices) + ["0"], [list(a) for a in base.arrows] + [[attach, "0"]])
    raise ValueError(f"unknown extended Dynkin type {name!r}")


_FAMILY_BY_MAX_DELTA = {1: "A", 2: "D", 3: "E", 4: "E", 6: "E"}


def ade_label(q: Quiver, shape: QuiverShape | None = None) -> str:
    """ADE type of an extended Dynkin quiver, e.g. ``A1`` for the double arrow.

    The family is read off the computed delta (max entry 1 -> A, 2 -> D,
    3/4/6 -> E6/E7/E8) and cross-checked against the catalogue's degree
    sequence, so a misclassification cannot slip through silently.
    """
    shape = shape or classify_shape(q)
    if shape.kind is not ShapeKind.EXTENDED_DYNKIN or shape.delta is None:
        raise ValueError("ADE labels exist only for extended Dynkin quivers")
    top = max(shape.delta)
    family = _FAMILY_BY_MAX_DELTA.get(top)
    if family is None:
        raise InternalInconsistency(f"delta {shape.delta!r} matches no affine ADE diagram")
    rank = q.n - 1 if family != "E" else {3: 6, 4: 7, 6: 8}[top]
    label = f"{family}{rank}"
    reference = extended_dynkin_quiver(label)
    ref_shape = classify_shape(reference)
    same_degrees = sorted(q.degree(v) for v in q.vertices) == sorted(
        reference.degree(v) for v in reference.vertices
    )
    if not same_degrees or sorted(shape.delta) != sorted(ref_shape.delta) or q.n != reference.n:
        raise InternalInconsistency(f"shape of {q!r} does not match the {label} diagram")
    return label
