"""The weight-dependent root sets and the norm they induce.

For a quiver with weight ``lam`` the positive roots orthogonal to ``lam``
form the set here called the orthogonal roots (R-plus). Their additive
closure, the strict-inequality subset Sigma, and the maximal parameter sum
over decompositions are all decided by definitional dynamic programming
over enumerated roots: correctness at desk scale is the contract, so the
membership tests follow the defining inequalities literally rather than
any sharper criterion.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .caps import DEFAULT_CAPS, Caps
from .errors import NotInNRLambdaPlus
from .quiver_core import (
    DimVector,
    Quiver,
    WeightVector,
    dim_vector,
    lambda_dot,
    p_form,
    weight_vector,
)
from .root_system import classify_root, positive_roots_upto


class LambdaContext:
    """A quiver with a fixed exact-rational weight and resource caps.

    Memo tables live on the context, so sweeps over many vectors against
    one weight share work. A context is cheap to create and safe to use
    from one thread at a time; distinct contexts are fully independent.
    """

    def __init__(self, quiver: Quiver, weight: Iterable, caps: Caps = DEFAULT_CAPS):
        self.quiver = quiver
        self.weight: WeightVector = weight_vector(quiver, weight)
        self.caps = caps
        self._roots_cache: dict[DimVector, tuple[DimVector, ...]] = {}
        self._best_cache: dict[DimVector, int | None] = {}

    def orthogonal_roots_upto(self, bound: Sequence[int]) -> tuple[DimVector, ...]:
        """Positive roots below ``bound`` orthogonal to the weight, ascending lex."""
        bound = dim_vector(self.quiver, bound)
        if bound not in self._roots_cache:
            roots = positive_roots_upto(self.quiver, bound, self.caps)
            self._roots_cache[bound] = tuple(
                b for b in roots if lambda_dot(self.weight, b) == 0
            )
        return self._roots_cache[bound]

    def _best_sum_p(self, target: DimVector, roots: tuple[DimVector, ...]) -> int | None:
        """Max p-sum over decompositions of ``target`` into orthogonal roots.

        Returns None when no decomposition exists. Memoized by residual
        vector only: the usable roots below a residual do not depend on the
        top-level bound the caller enumerated with.
        """
        if not any(target):
            return 0
        cache = self._best_cache
        if target in cache:
            return cache[target]
        best = None
        for beta in roots:
            if all(x <= t for x, t in zip(beta, target)):
                rest = self._best_sum_p(
                    tuple(t - x for t, x in zip(target, beta)), roots
                )
                if rest is not None:
                    value = p_form(self.quiver, beta) + rest
                    if best is None or value > best:
                        best = value
        cache[target] = best
        return best


def in_R_lambda_plus(ctx: LambdaContext, a: Sequence[int]) -> bool:
    """Positive root orthogonal to the weight?"""
    a = dim_vector(ctx.quiver, a)
    if all(e == 0 for e in a) or any(e < 0 for e in a):
        return False
    return classify_root(ctx.quiver, a).is_root and lambda_dot(ctx.weight, a) == 0


def in_N_R_lambda_plus(ctx: LambdaContext, a: Sequence[int]) -> bool:
    """Sum (possibly empty) of orthogonal positive roots?

    Vectors with a negative entry are never members, so sweeps like
    "m * delta - a for every m" can call this without pre-filtering.
    """
    a = dim_vector(ctx.quiver, a)
    if any(e < 0 for e in a):
        return False
    if all(e == 0 for e in a):
        return True
    roots = ctx.orthogonal_roots_upto(a)
    return ctx._best_sum_p(a, roots) is not None


def norm_lambda(ctx: LambdaContext, a: Sequence[int]) -> int:
    """Maximal p-sum over decompositions into orthogonal positive roots."""
    a = dim_vector(ctx.quiver, a)
    if any(e < 0 for e in a):
        raise NotInNRLambdaPlus(f"{a!r} has a negative entry")
    if all(e == 0 for e in a):
        return 0
    best = ctx._best_sum_p(a, ctx.orthogonal_roots_upto(a))
    if best is None:
        raise NotInNRLambdaPlus(f"{a!r} is not a sum of orthogonal positive roots")
    return best


def max_proper_sum_p(ctx: LambdaContext, a: Sequence[int]) -> int | None:
    """Max p-sum over decompositions of ``a`` with at least two parts.

    None when no such decomposition exists, e.g. for coordinate vectors.
    """
    a = dim_vector(ctx.quiver, a)
    if any(e < 0 for e in a) or all(e == 0 for e in a):
        return None
    roots = ctx.orthogonal_roots_upto(a)
    best = None
    for beta in roots:
        if beta == a:
            continue
        if all(x <= t for x, t in zip(beta, a)):
            rest = ctx._best_sum_p(tuple(t - x for t, x in zip(a, beta)), roots)
            if rest is not None:
                value = p_form(ctx.quiver, beta) + rest
                if best is None or value > best:
                    best = value
    return best


def in_sigma_lambda(ctx: LambdaContext, a: Sequence[int]) -> bool:
    """Orthogonal positive root whose p exceeds that of every proper split.

    The defining inequality is strict and quantifies over decompositions
    into two or more orthogonal positive roots; with no proper split the
    condition is vacuous.
    """
    a = dim_vector(ctx.quiver, a)
    if not in_R_lambda_plus(ctx, a):
        return False
    bound = max_proper_sum_p(ctx, a)
    return bound is None or bound < p_form(ctx.quiver, a)


def sigma_lambda_upto(ctx: LambdaContext, bound: Sequence[int]) -> tuple[DimVector, ...]:
    """All Sigma members componentwise below ``bound``, ascending lex.

    Members are necessarily roots, so only enumerated roots are tested.
    """
    bound = dim_vector(ctx.quiver, bound)
    if any(b < 0 for b in bound):
        return ()
    return tuple(b for b in ctx.orthogonal_roots_upto(bound) if in_sigma_lambda(ctx, b))
