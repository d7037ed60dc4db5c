"""Zero weight on an extended Dynkin quiver: symmetric products of one factor.

With the zero weight, the Sigma set of an extended Dynkin quiver is delta
together with the coordinate vectors, so every dimension vector decomposes
as the largest possible stack of deltas plus leftover coordinate vectors,
and the reduction is a symmetric power of the deformed Kleinian surface.

Run with: python demos/symmetric_products.py
"""

import quiverdec as qd

for name in ("A1", "A2", "D4"):
    q = qd.extended_dynkin_quiver(name)
    shape = qd.classify_shape(q)
    delta = shape.delta
    ctx = qd.LambdaContext(q, [0] * q.n)

    print("=" * 64)
    print(f"Extended Dynkin type {name}: delta = {list(delta)}")
    print("=" * 64)

    members = qd.sigma_lambda_upto(ctx, tuple(2 * d for d in delta))
    print(f"Sigma with zero weight, below 2*delta: {[list(m) for m in members]}")

    for multiple in (1, 2, 3):
        alpha = tuple(multiple * d for d in delta)
        report = qd.product_structure_report(ctx, alpha)
        print(f"\nalpha = {multiple}*delta = {list(alpha)}")
        print(f"  dimension {2 * report.decomposition.norm}, formula {report.formula}")

    alpha = tuple(2 * d + (1 if i == 0 else 0) for i, d in enumerate(delta))
    report = qd.product_structure_report(ctx, alpha)
    print(f"\nalpha = 2*delta + eps = {list(alpha)}")
    for term, factor in zip(report.decomposition.terms, report.factors):
        print(f"  {term.multiplicity} x {term.sigma}: {factor.describe()}")
    print(f"  formula: {report.formula}")
    print()

print("The Kleinian label reads off the support of the normalized vector:")
kron = qd.extended_dynkin_quiver("A1")
print(" ", qd.kleinian_label(qd.LambdaContext(kron, (0, 0)), (1, 1)), "for the double arrow")
jordan = qd.extended_dynkin_quiver("A0")
print(" ", qd.kleinian_label(qd.LambdaContext(jordan, (0,)), (1,)), "for the loop")
