from fractions import Fraction

import pytest

import quiverdec as qd
from quiverdec.errors import NotInNRLambdaPlus

EX4 = qd.Quiver(["1", "2", "3", "4"], [["1", "2"], ["2", "3"], ["2", "4"], ["3", "4"]])
EX4_WEIGHT = (0, 1, -2, 1)
KRONECKER = qd.extended_dynkin_quiver("A1")
A2 = qd.dynkin_quiver("A2")
K3 = qd.Quiver(["0", "1"], [["0", "1"]] * 3)


@pytest.fixture(scope="module")
def ex4_ctx():
    return qd.LambdaContext(EX4, EX4_WEIGHT)


def test_in_R_examples(ex4_ctx):
    assert not qd.in_R_lambda_plus(ex4_ctx, (0, 0, 1, 0))
    assert qd.in_R_lambda_plus(qd.LambdaContext(KRONECKER, (0, 0)), (1, 1))
    assert qd.in_R_lambda_plus(qd.LambdaContext(A2, (1, -1)), (1, 1))
    assert not qd.in_R_lambda_plus(qd.LambdaContext(A2, (1, -1)), (1, 0))


def test_in_NR_examples(ex4_ctx):
    assert qd.in_N_R_lambda_plus(ex4_ctx, (0, 0, 0, 0))
    assert not qd.in_N_R_lambda_plus(ex4_ctx, (0, 0, 1, 2))
    assert qd.in_N_R_lambda_plus(qd.LambdaContext(A2, (1, -1)), (2, 2))
    # negative entries are simply not members
    assert not qd.in_N_R_lambda_plus(ex4_ctx, (0, -1, 0, 1))


def test_no_m_clears_delta_gap(ex4_ctx):
    # the added-vertex counterexample: no multiple of delta reaches past alpha'
    delta = (0, 1, 1, 1)
    alpha_prime = (0, 3, 2, 1)
    for m in range(9):
        gap = tuple(m * d - x for d, x in zip(delta, alpha_prime))
        assert not qd.in_N_R_lambda_plus(ex4_ctx, gap), m


def test_sigma_examples(ex4_ctx):
    assert qd.in_sigma_lambda(ex4_ctx, (1, 3, 2, 1))
    assert not qd.in_sigma_lambda(qd.LambdaContext(A2, (0, 0)), (1, 1))
    assert qd.in_sigma_lambda(qd.LambdaContext(K3, (0, 0)), (2, 2))


def test_sigma_upto_examples():
    kron0 = qd.LambdaContext(KRONECKER, (0, 0))
    assert set(qd.sigma_lambda_upto(kron0, (2, 2))) == {(1, 0), (0, 1), (1, 1)}
    a2 = qd.LambdaContext(A2, (1, -1))
    assert qd.sigma_lambda_upto(a2, (2, 2)) == ((1, 1),)
    assert qd.sigma_lambda_upto(a2, (0, 0)) == ()


def test_sigma_zero_extended_dynkin_is_delta_and_simples():
    for name in ("A1", "A2", "D4"):
        q = qd.extended_dynkin_quiver(name)
        delta = qd.classify_shape(q).delta
        ctx = qd.LambdaContext(q, [0] * q.n)
        expected = {delta} | {qd.coordinate_vector(q, v) for v in q.vertices}
        assert set(qd.sigma_lambda_upto(ctx, tuple(2 * d for d in delta))) == expected


def test_norm_examples(ex4_ctx):
    kron0 = qd.LambdaContext(KRONECKER, (0, 0))
    assert qd.norm_lambda(kron0, (2, 3)) == 2
    assert qd.norm_lambda(ex4_ctx, (1, 3, 2, 1)) == 0
    # one-term decompositions are optimal on Sigma members
    assert qd.norm_lambda(ex4_ctx, (0, 1, 1, 1)) == qd.p_form(EX4, (0, 1, 1, 1)) == 1
    with pytest.raises(NotInNRLambdaPlus):
        qd.norm_lambda(ex4_ctx, (0, 0, 1, 2))
    with pytest.raises(NotInNRLambdaPlus):
        qd.norm_lambda(ex4_ctx, (0, -1, 0, 0))
    assert qd.norm_lambda(ex4_ctx, (0, 0, 0, 0)) == 0


def test_membership_chain_on_samples(ex4_ctx):
    import itertools

    for a in itertools.product(range(2), range(3), range(3), range(2)):
        if not any(a):
            continue
        in_sigma = qd.in_sigma_lambda(ex4_ctx, a)
        in_r = qd.in_R_lambda_plus(ex4_ctx, a)
        in_nr = qd.in_N_R_lambda_plus(ex4_ctx, a)
        assert not (in_sigma and not in_r)
        assert not (in_r and not in_nr)


def test_norm_superadditive():
    ctx = qd.LambdaContext(KRONECKER, (0, 0))
    import itertools

    members = [
        v
        for v in itertools.product(range(4), repeat=2)
        if any(v) and qd.in_N_R_lambda_plus(ctx, v)
    ]
    for a in members:
        for b in members:
            total = tuple(x + y for x, y in zip(a, b))
            assert qd.norm_lambda(ctx, total) >= qd.norm_lambda(ctx, a) + qd.norm_lambda(ctx, b)


def test_sigma_reflection_equivariance_along_chain(ex4_ctx):
    # admissible moves carry Sigma members to Sigma members
    pair = qd.make_pair(EX4, EX4_WEIGHT, (1, 3, 2, 1))
    _, trace = qd.apply_sequence(EX4, pair, ["2", "3", "4", "2"])
    for step in trace:
        ctx = qd.LambdaContext(EX4, step.state.weight)
        assert qd.in_sigma_lambda(ctx, step.state.dim)


def test_sigma_is_delta_plus_indecomposables():
    # on an extended Dynkin quiver with the weight orthogonal to delta,
    # Sigma is delta together with the indecomposable members of the
    # additive closure, and everything lies below delta
    import itertools

    cases = [("A1", (1, -1)), ("A2", (Fraction(1, 2), Fraction(-1, 2), 0)), ("A2", (0, 0, 0))]
    for name, lam in cases:
        q = qd.extended_dynkin_quiver(name)
        delta = qd.classify_shape(q).delta
        ctx = qd.LambdaContext(q, lam)
        assert qd.lambda_dot(ctx.weight, delta) == 0
        box = tuple(2 * d for d in delta)
        members = {
            v
            for v in itertools.product(*(range(b + 1) for b in box))
            if any(v) and qd.in_N_R_lambda_plus(ctx, v)
        }

        def splits(v):
            for x in itertools.product(*(range(e + 1) for e in v)):
                if any(x) and x != v and x in members:
                    rest = tuple(a - b for a, b in zip(v, x))
                    if rest in members:
                        return True
            return False

        indecomposable = {v for v in members if not splits(v)}
        sigma = set(qd.sigma_lambda_upto(ctx, box))
        assert sigma == indecomposable | {delta}, (name, lam)
        assert all(all(x <= d for x, d in zip(s, delta)) for s in sigma)


def test_max_proper_sum_p():
    ctx = qd.LambdaContext(K3, (0, 0))
    assert qd.max_proper_sum_p(ctx, (2, 2)) == 4
    assert qd.max_proper_sum_p(ctx, (1, 0)) is None
    kron0 = qd.LambdaContext(KRONECKER, (0, 0))
    assert qd.max_proper_sum_p(kron0, (1, 1)) == 0


def test_weight_entries_are_exact():
    lam = [Fraction(1, 3), Fraction(-1, 3), 0, 0]
    ctx = qd.LambdaContext(EX4, lam)
    assert ctx.weight[0] == Fraction(1, 3)
    assert qd.lambda_dot(ctx.weight, (1, 1, 0, 0)) == 0
    assert qd.in_R_lambda_plus(ctx, (1, 1, 0, 0))
