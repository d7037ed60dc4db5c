"""Canonical decomposition of dimension vectors and the structure report.

Every vector expressible as a sum of orthogonal positive roots has a
unique coarsest decomposition into Sigma members: it maximizes the summed
parameter count p, every other Sigma decomposition refines it, and the
reduction it describes factors as a product of symmetric powers of the
factors attached to its terms. The decomposition is computed here by the
maximization characterization, with the uniqueness of the maximizer
asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import InternalInconsistency, NotInNRLambdaPlus, SumMismatch
from .lambda_roots import (
    LambdaContext,
    in_sigma_lambda,
    norm_lambda,
    sigma_lambda_upto,
)
from .quiver_core import (
    DimVector,
    dim_vector,
    p_form,
    restrict,
    restrict_vector,
    support,
    weight_entry_to_json,
    weight_to_json_list,
)
from .reflection_walk import PairState, fundamental_representative
from .root_system import (
    RootClass,
    ShapeKind,
    ade_label,
    classify_root,
    classify_shape,
)


class Term(NamedTuple):
    sigma: DimVector
    multiplicity: int
    root_class: RootClass
    p_value: int


@dataclass(frozen=True)
class CanonicalDecomposition:
    """Multiset of Sigma members with multiplicities, summing to ``total``.

    Terms are ordered by descending p, then ascending lexicographically.
    ``norm`` is the maximal p-sum, half the dimension of the reduction.
    """

    terms: tuple[Term, ...]
    total: DimVector
    norm: int

    def multiset(self) -> tuple[DimVector, ...]:
        """The terms written out with multiplicity, sorted ascending."""
        out = []
        for t in self.terms:
            out.extend([t.sigma] * t.multiplicity)
        return tuple(sorted(out))

    def to_json_dict(self) -> dict:
        return {
            "alpha": list(self.total),
            "norm": self.norm,
            "terms": [
                {
                    "sigma": list(t.sigma),
                    "m": t.multiplicity,
                    "class": t.root_class.value,
                    "p": t.p_value,
                }
                for t in self.terms
            ],
        }


def _maximal_sigma_multiset(ctx: LambdaContext, a: DimVector):
    """Maximize the p-sum over multisets of Sigma members summing to ``a``.

    Returns (best p-sum, number of maximizing multisets, one witness).
    Multisets are generated in nondecreasing part order, so each one is
    counted exactly once. Returns None when ``a`` has no such expression.
    """
    elements = sigma_lambda_upto(ctx, a)
    p_of = {e: p_form(ctx.quiver, e) for e in elements}
    memo: dict[tuple[DimVector, int], tuple[int, int, tuple] | None] = {}

    def go(residual: DimVector, k: int):
        if not any(residual):
            return (0, 1, ())
        key = (residual, k)
        if key in memo:
            return memo[key]
        best = None
        for j in range(k, len(elements)):
            beta = elements[j]
            if any(x > r for x, r in zip(beta, residual)):
                continue
            sub = go(tuple(r - x for r, x in zip(residual, beta)), j)
            if sub is None:
                continue
            value = p_of[beta] + sub[0]
            if best is None or value > best[0]:
                best = (value, sub[1], (beta,) + sub[2])
            elif value == best[0]:
                best = (best[0], best[1] + sub[1], best[2])
        memo[key] = best
        return best

    return go(a, 0)


def sigma_maximizer_count(ctx: LambdaContext, a: Sequence[int]) -> int:
    """How many Sigma multisets attain the maximal p-sum; expected 1."""
    a = dim_vector(ctx.quiver, a)
    if any(e < 0 for e in a):
        raise NotInNRLambdaPlus(f"{a!r} has a negative entry")
    if all(e == 0 for e in a):
        return 1
    result = _maximal_sigma_multiset(ctx, a)
    if result is None:
        raise NotInNRLambdaPlus(f"{a!r} is not a sum of orthogonal positive roots")
    return result[1]


def canonical_decompose(ctx: LambdaContext, a: Sequence[int]) -> CanonicalDecomposition:
    """The unique coarsest decomposition into Sigma members.

    Asserts internally that the maximizing multiset is unique, that its
    p-sum agrees with the norm over all orthogonal-root decompositions,
    and that multiplicities above one only occur on terms with p <= 1;
    any violation raises InternalInconsistency since it would contradict
    guarantees the construction is built on.
    """
    a = dim_vector(ctx.quiver, a)
    if any(e < 0 for e in a):
        raise NotInNRLambdaPlus(f"{a!r} has a negative entry")
    if all(e == 0 for e in a):
        return CanonicalDecomposition((), a, 0)
    result = _maximal_sigma_multiset(ctx, a)
    if result is None:
        raise NotInNRLambdaPlus(f"{a!r} is not a sum of orthogonal positive roots")
    best, count, witness = result
    if count != 1:
        raise InternalInconsistency(
            f"{count} maximizing multisets for {a!r}; expected exactly one"
        )
    if best != norm_lambda(ctx, a):
        raise InternalInconsistency(
            f"maximal p-sum over Sigma multisets ({best}) disagrees with the norm"
        )
    counts: dict[DimVector, int] = {}
    for part in witness:
        counts[part] = counts.get(part, 0) + 1
    terms = []
    for sigma, mult in counts.items():
        if not in_sigma_lambda(ctx, sigma):
            raise InternalInconsistency(f"term {sigma!r} fails the Sigma test")
        cls = classify_root(ctx.quiver, sigma)
        p = p_form(ctx.quiver, sigma)
        if cls is RootClass.NONISOTROPIC_IMAGINARY and mult != 1:
            raise InternalInconsistency(
                f"non-isotropic term {sigma!r} appears with multiplicity {mult}"
            )
        terms.append(Term(sigma, mult, cls, p))
    terms.sort(key=lambda t: (-t.p_value, t.sigma))
    return CanonicalDecomposition(tuple(terms), a, best)


def dimension_of_N(ctx: LambdaContext, a: Sequence[int]) -> int:
    """Dimension of the reduction: twice the norm."""
    return 2 * norm_lambda(ctx, a)


def representation_type(ctx: LambdaContext, a: Sequence[int]) -> list[tuple[int, DimVector]]:
    """(multiplicity, dimension vector) pairs of the general semisimple element."""
    return [(t.multiplicity, t.sigma) for t in canonical_decompose(ctx, a).terms]


# -- factor classification -----------------------------------------------------


@dataclass(frozen=True)
class Factor:
    """How one term of the decomposition contributes to the product.

    ``kind`` is "Point" for real terms, "Kleinian" for isotropic ones
    (with the ADE type in ``label`` when the normalization search
    succeeds), and "NonIsotropicBlock" otherwise. The dimension
    contribution is ``2 * multiplicity * p``.
    """

    sigma: DimVector
    multiplicity: int
    kind: str
    label: str | None
    symmetric_power: int
    dimension_contribution: int

    def describe(self) -> str:
        if self.kind == "Point":
            return "Point"
        if self.kind == "Kleinian":
            return f"Kleinian({self.label})" if self.label else "Kleinian(?)"
        return "NonIsotropicBlock"


@dataclass(frozen=True)
class ProductReport:
    decomposition: CanonicalDecomposition
    factors: tuple[Factor, ...]
    formula: str
    weight: tuple

    def to_json_dict(self) -> dict:
        terms = []
        for term, factor in zip(self.decomposition.terms, self.factors):
            terms.append(
                {
                    "sigma": list(term.sigma),
                    "m": term.multiplicity,
                    "class": term.root_class.value,
                    "p": term.p_value,
                    "factor": factor.describe(),
                }
            )
        return {
            "alpha": list(self.decomposition.total),
            "lambda": weight_to_json_list(self.weight),
            "dimension": 2 * self.decomposition.norm,
            "terms": terms,
            "formula": self.formula,
        }


def kleinian_label(ctx: LambdaContext, sigma: Sequence[int]) -> str | None:
    """ADE type of the Kleinian factor attached to an isotropic Sigma member.

    Normalizes the (weight, sigma) pair to one whose dimension vector lies
    in the fundamental region; its support quiver must then be extended
    Dynkin with the vector equal to its delta. Returns None when the
    bounded search gives out before reaching the fundamental region.
    """
    sigma = dim_vector(ctx.quiver, sigma)
    found = fundamental_representative(
        ctx.quiver, PairState(ctx.weight, sigma), budget=ctx.caps.max_states
    )
    if found is None:
        return None
    state, _ = found
    supp = support(ctx.quiver, state.dim)
    sub = restrict(ctx.quiver, supp)
    shape = classify_shape(sub)
    if shape.kind is not ShapeKind.EXTENDED_DYNKIN:
        raise InternalInconsistency(
            f"fundamental representative {state.dim!r} has support of kind {shape.kind.value}"
        )
    if restrict_vector(ctx.quiver, state.dim, supp) != shape.delta:
        raise InternalInconsistency(
            f"fundamental representative {state.dim!r} is not the delta of its support"
        )
    return ade_label(sub, shape)


def _format_vector(vec) -> str:
    return "(" + ",".join(str(x) for x in vec) + ")"


def _format_weight(lam) -> str:
    return "(" + ",".join(str(weight_entry_to_json(x)) for x in lam) + ")"


def product_structure_report(ctx: LambdaContext, a: Sequence[int]) -> ProductReport:
    """Classify every factor and render the product formula.

    Real terms contribute points and are rendered once as a trailing
    "point"; isotropic terms come with symmetric powers and, when the
    normalization search succeeds, an ADE label; non-isotropic terms are
    single unsymmetrized blocks. The empty decomposition renders "point".
    """
    decomposition = canonical_decompose(ctx, a)
    lam_str = _format_weight(ctx.weight)
    factors = []
    pieces = []
    any_point = False
    for term in decomposition.terms:
        contribution = 2 * term.multiplicity * term.p_value
        if term.root_class is RootClass.REAL:
            factors.append(
                Factor(term.sigma, term.multiplicity, "Point", None, term.multiplicity, 0)
            )
            any_point = True
            continue
        if term.root_class is RootClass.ISOTROPIC_IMAGINARY:
            label = kleinian_label(ctx, term.sigma)
            factors.append(
                Factor(term.sigma, term.multiplicity, "Kleinian", label,
                       term.multiplicity, contribution)
            )
        else:
            factors.append(
                Factor(term.sigma, term.multiplicity, "NonIsotropicBlock", None,
                       1, contribution)
            )
        body = f"N({lam_str},{_format_vector(term.sigma)})"
        if term.multiplicity > 1:
            body = f"S^{term.multiplicity} " + body
        pieces.append(body)
    if any_point or not pieces:
        pieces.append("point")
    return ProductReport(decomposition, tuple(factors), " x ".join(pieces), ctx.weight)


# -- refinement -----------------------------------------------------------------


def check_refinement(d1: Sequence[Sequence[int]], d2: Sequence[Sequence[int]]) -> bool:
    """Can the parts of ``d1`` be grouped to sum to the parts of ``d2``?

    Both arguments are multisets of vectors; they must sum to the same
    total or SumMismatch is raised. The search is exact-cover style
    backtracking with duplicate-part pruning.
    """
    parts = sorted(tuple(int(x) for x in v) for v in d1)
    targets = sorted((tuple(int(x) for x in v) for v in d2), key=lambda t: (-sum(t), t))
    if parts and targets and len(parts[0]) != len(targets[0]):
        raise SumMismatch("decompositions live on different vertex sets")
    n = len(parts[0]) if parts else (len(targets[0]) if targets else 0)
    total1 = tuple(sum(v[i] for v in parts) for i in range(n))
    total2 = tuple(sum(v[i] for v in targets) for i in range(n))
    if total1 != total2:
        raise SumMismatch(f"sums differ: {total1!r} vs {total2!r}")

    def pick(remaining: tuple, target, start: int, chosen: list, out: list) -> bool:
        """Try every sub-multiset of ``remaining`` summing to ``target``."""
        if not any(target):
            rest = list(remaining)
            for idx in sorted(chosen, reverse=True):
                del rest[idx]
            return cover(tuple(rest), out)
        prev = None
        for idx in range(start, len(remaining)):
            part = remaining[idx]
            if part == prev:
                continue  # identical parts give identical branches
            if any(x > t for x, t in zip(part, target)):
                prev = part
                continue
            chosen.append(idx)
            if pick(remaining, tuple(t - x for t, x in zip(target, part)), idx + 1, chosen, out):
                return True
            chosen.pop()
            prev = part
        return False

    def cover(remaining: tuple, queue: list) -> bool:
        if not queue:
            return not remaining
        return pick(remaining, queue[0], 0, [], queue[1:])

    return cover(tuple(parts), list(targets))
