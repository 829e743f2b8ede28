"""Newton polytopes of the orbit-closure classes of a torus acting on C^2.

Prints vertices, then tests which classes sit in the ambient polytope with the origin removed.
"""
from mchern import golden
from mchern.algebra import lambda_class
from mchern.polytope import newton_polytope, punctured_containment

classes = golden.plane_classes()
ambient = newton_polytope(lambda_class(golden.PLANE, [golden.W1, golden.W2], "minus_one"))
print("ambient:", sorted(ambient.vertices))
for name, cls in classes.items():
    P = newton_polytope(cls)
    inside = punctured_containment(P, ambient)
    print(f"{name:>5}  {'punctured-inside' if inside else '                '}  {sorted(P.vertices)}")
