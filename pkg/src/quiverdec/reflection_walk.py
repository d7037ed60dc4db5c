"""The admissible-reflection calculus on (weight, dimension) pairs.

Reflecting at a loopfree vertex acts on dimension vectors by the simple
reflection and on weights by the dual reflection; the move is admissible
when the weight is nonzero at that vertex. Sequences of admissible moves
generate an equivalence on pairs, explored here by bounded breadth-first
search: the class can be infinite, so every search carries a state budget
and reports whether it exhausted the reachable set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import BudgetExhausted, InadmissibleStep
from .quiver_core import (
    DimVector,
    Quiver,
    WeightVector,
    dim_vector,
    pairing_with_simple,
    weight_to_json_list,
    weight_vector,
)
from .root_system import in_fundamental_region, simple_reflection


class PairState(NamedTuple):
    weight: WeightVector
    dim: DimVector


class TraceStep(NamedTuple):
    vertex: str | None  # None marks the initial state
    state: PairState


def make_pair(q: Quiver, weight: Iterable, dim: Iterable[int]) -> PairState:
    return PairState(weight_vector(q, weight), dim_vector(q, dim))


def dual_reflection(q: Quiver, vertex: str, lam: Sequence) -> WeightVector:
    """Reflect a weight at a loopfree vertex; dual to the simple reflection."""
    lam = weight_vector(q, lam)
    if not q.is_loopfree(vertex):
        raise ValueError(f"cannot reflect at vertex {vertex!r}: it carries a loop")
    i = q.index(vertex)
    row = q.cartan_matrix()[i]
    return tuple(x - row[j] * lam[i] for j, x in enumerate(lam))


def is_admissible(q: Quiver, pair: PairState, vertex: str) -> bool:
    """Loopfree vertex where the weight is nonzero."""
    return q.is_loopfree(vertex) and pair.weight[q.index(vertex)] != 0


def reflect_pair(q: Quiver, pair: PairState, vertex: str) -> PairState:
    return PairState(
        dual_reflection(q, vertex, pair.weight),
        simple_reflection(q, vertex, pair.dim),
    )


def apply_sequence(
    q: Quiver, pair: PairState, seq: Sequence[str]
) -> tuple[PairState, tuple[TraceStep, ...]]:
    """Apply reflections in order, checking admissibility step by step.

    Returns the final pair and the full trace, initial state included.
    """
    state = PairState(weight_vector(q, pair.weight), dim_vector(q, pair.dim))
    trace = [TraceStep(None, state)]
    for pos, vertex in enumerate(seq):
        if not is_admissible(q, state, vertex):
            raise InadmissibleStep(pos, vertex)
        state = reflect_pair(q, state, vertex)
        trace.append(TraceStep(vertex, state))
    return state, tuple(trace)


@dataclass(frozen=True)
class NormalizedPair:
    state: PairState
    sequence: tuple[str, ...]
    exhaustive: bool


def _dim_key(state: PairState):
    return (sum(state.dim), state.dim)


def normalize_pair(q: Quiver, pair: PairState, budget: int = 100_000) -> NormalizedPair:
    """Search the admissible class for a pair of minimal total dimension.

    Breadth-first with exact-state deduplication, admitting at most
    ``budget`` states; ties in the total break lexicographically on the
    dimension vector. The result is minimal among the states explored and
    is flagged ``exhaustive`` only when the queue emptied within budget:
    the class is infinite for many quivers, so global minimality is only
    certified by that flag. A non-positive budget cannot admit even the
    input and raises :class:`~quiverdec.errors.BudgetExhausted` carrying it.
    """
    start = PairState(weight_vector(q, pair.weight), dim_vector(q, pair.dim))
    if budget <= 0:
        raise BudgetExhausted(
            "budget of 0 states cannot explore anything",
            NormalizedPair(start, (), False),
        )
    best = NormalizedPair(start, (), True)
    seen = {start}
    queue = deque([(start, ())])
    admitted = 1
    truncated = False
    while queue:
        state, seq = queue.popleft()
        if _dim_key(state) < _dim_key(best.state):
            best = NormalizedPair(state, seq, True)
        for vertex in q.vertices:
            if not is_admissible(q, state, vertex):
                continue
            nxt = reflect_pair(q, state, vertex)
            if nxt in seen:
                continue
            if admitted >= budget:
                truncated = True
                continue
            seen.add(nxt)
            admitted += 1
            queue.append((nxt, seq + (vertex,)))
    if truncated:
        return NormalizedPair(best.state, best.sequence, False)
    return best


def fundamental_representative(
    q: Quiver, pair: PairState, budget: int = 100_000
) -> tuple[PairState, tuple[str, ...]] | None:
    """First reachable pair whose dimension lies in the fundamental region.

    Breadth-first, so the realizing sequence is as short as possible.
    Returns None when the budget runs out or no such pair is reachable.
    """
    start = PairState(weight_vector(q, pair.weight), dim_vector(q, pair.dim))
    if budget <= 0:
        return None
    seen = {start}
    queue = deque([(start, ())])
    admitted = 1
    while queue:
        state, seq = queue.popleft()
        if all(e >= 0 for e in state.dim) and in_fundamental_region(q, state.dim):
            return state, seq
        for vertex in q.vertices:
            if not is_admissible(q, state, vertex):
                continue
            nxt = reflect_pair(q, state, vertex)
            if nxt in seen:
                continue
            if admitted >= budget:
                return None
            seen.add(nxt)
            admitted += 1
            queue.append((nxt, seq + (vertex,)))
    return None


def strip_simple(q: Quiver, pair: PairState) -> tuple[str, PairState] | None:
    """Peel one coordinate vector where the weight vanishes.

    Returns the lowest-indexed loopfree vertex with zero weight and positive
    pairing against the dimension vector, together with the reduced pair;
    None when no vertex qualifies. Iterating this terminates since each
    step lowers the total dimension by one.
    """
    lam = weight_vector(q, pair.weight)
    a = dim_vector(q, pair.dim)
    for vertex in q.vertices:
        if not q.is_loopfree(vertex):
            continue
        if lam[q.index(vertex)] != 0:
            continue
        if pairing_with_simple(q, a, vertex) > 0:
            i = q.index(vertex)
            reduced = tuple(e - 1 if j == i else e for j, e in enumerate(a))
            return vertex, PairState(lam, reduced)
    return None


def trace_to_json(trace: Sequence[TraceStep]) -> list[dict]:
    """Serialize a reflection trace, initial state first."""
    return [
        {
            "vertex": step.vertex,
            "lambda": weight_to_json_list(step.state.weight),
            "alpha": list(step.state.dim),
        }
        for step in trace
    ]
