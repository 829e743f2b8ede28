"""Motivic Chern classes of Schubert cells in Gr(2,4), point by point.

Run: python3 demos/grassmannian.py
"""
from mchern.flag import FlagShape, check_axioms, codim, enumerate_indices, mc_schubert

shape = FlagShape([2, 2])
for I in enumerate_indices(shape):
    cls = mc_schubert(I)
    report = check_axioms(cls, I)
    print(f"cell {I}  codim {codim(I)}  axioms {'ok' if report.passed else 'FAILED'}")
    for J, value in sorted(cls.restrictions.items(), key=lambda kv: str(kv[0])):
        if not value.is_zero():
            print(f"    at {J}: {value}")
