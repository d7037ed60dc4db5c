"""A tour of the root-system layer: forms, classification, shapes.

Run with: python demos/root_system_tour.py
"""

import quiverdec as qd

print("=" * 64)
print("Quivers and their quadratic forms")
print("=" * 64)

quivers = {
    "A2 (1 -> 2)": qd.dynkin_quiver("A2"),
    "Kronecker (two parallel arrows)": qd.extended_dynkin_quiver("A1"),
    "Jordan (one loop)": qd.extended_dynkin_quiver("A0"),
    "3-Kronecker (three parallel arrows)": qd.Quiver(["0", "1"], [["0", "1"]] * 3),
}

for name, q in quivers.items():
    shape = qd.classify_shape(q)
    print(f"\n{name}")
    print(f"  vertices {list(q.vertices)}, arrows {[list(a) for a in q.arrows]}")
    print(f"  shape: {shape.kind.value}", end="")
    if shape.delta:
        print(f", delta = {list(shape.delta)}, extending vertices {list(shape.extending)}", end="")
    print()
    for vec in [(1, 0)[: q.n], (1, 1)[: q.n], (1, 2)[: q.n], (2, 2)[: q.n]]:
        if len(vec) != q.n or not any(vec):
            continue
        cls = qd.classify_root(q, vec)
        print(f"  {vec}: q = {qd.q_form(q, vec):3d}  p = {qd.p_form(q, vec):3d}  {cls.value}")

print()
print("=" * 64)
print("Positive roots in a box")
print("=" * 64)
kron = quivers["Kronecker (two parallel arrows)"]
print("\nKronecker roots below (3,3):")
for beta in qd.positive_roots_upto(kron, (3, 3)):
    print(f"  {beta}  ({qd.classify_root(kron, beta).value})")

print("\nReflections: descending (2,3) at vertex 0 then 1")
a = (2, 3)
for v in ("1", "0", "1"):
    image = qd.simple_reflection(kron, v, a)
    print(f"  s_{v}{a} = {image}   p preserved: {qd.p_form(kron, a) == qd.p_form(kron, image)}")
    a = image

print("\nThe fundamental region holds the imaginary seeds:")
for vec in [(1, 1), (2, 2), (1, 2)]:
    print(f"  {vec}: {qd.in_fundamental_region(kron, vec)}")
