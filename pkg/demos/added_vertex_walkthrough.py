"""The added-vertex example: one extra vertex joined to a triangle.

The quiver has vertices 1..4 with vertex 1 joined by a single arrow to the
extending vertex 2 of a three-cycle. With weight (0, 1, -2, 1) the vector
(1, 3, 2, 1) is a Sigma member: a chain of admissible reflections walks it
down to a coordinate vector. Yet no multiple of delta = (0, 1, 1, 1)
reaches past its restriction, which is exactly why the coordinate-vector
conclusion needs that reachability hypothesis.

Run with: python demos/added_vertex_walkthrough.py
"""

import quiverdec as qd
from quiverdec import oracle

q = qd.load_fixture("ex4.json")
weight = (0, 1, -2, 1)
alpha = (1, 3, 2, 1)
ctx = qd.LambdaContext(q, weight)

print("quiver:", q)
j, k, delta = oracle.added_vertex_split(q)
print(f"added vertex {j}, joined to extending vertex {k}, delta = {list(delta)}")

print("\nReflection chain at vertices 2, 3, 4, 2:")
pair = qd.make_pair(q, weight, alpha)
final, trace = qd.apply_sequence(q, pair, ["2", "3", "4", "2"])
for step in trace:
    lam = tuple(str(x) for x in step.state.weight)
    marker = f"  ~{step.vertex}~> " if step.vertex else "start:  "
    print(f"{marker}(({','.join(lam)}), {step.state.dim})")
print(f"endpoint is the coordinate vector at {j}: {final.dim}")

print(f"\nSigma membership of {alpha}: {qd.in_sigma_lambda(ctx, alpha)}")
print(f"norm = {qd.norm_lambda(ctx, alpha)}, so the reduction is a single point")

print("\nNo multiple of delta reaches past alpha' (the restriction):")
alpha_prime = tuple(0 if v == j else x for v, x in zip(q.vertices, alpha))
for m in range(9):
    gap = tuple(m * d - x for d, x in zip(delta, alpha_prime))
    print(f"  m = {m}: m*delta - alpha' = {gap}  member: {qd.in_N_R_lambda_plus(ctx, gap)}")

print("\nExhaustive sweep over the box (1,4,4,4):")
report = oracle.check_maincase(ctx, (1, 4, 4, 4), 6)
print(f"  Sigma members with entry 1 at {j}: {report.instances_checked}")
print(f"  with a qualifying multiple: {report.info['with_qualifying_m']}")
print(f"  without one: {report.info['without_qualifying_m']}")
print(f"  counterexamples: {report.counterexamples or 'none'}")

print("\nRoot pairing inequality for the Sigma member:")
report = oracle.check_rootineq(ctx, alpha)
print(f"  roots below delta checked: {report.instances_checked}, counterexamples: {report.counterexamples or 'none'}")
