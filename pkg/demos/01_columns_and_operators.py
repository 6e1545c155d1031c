"""Columns, splitting, and crystal operators.

Run with: python demos/01_columns_and_operators.py
"""

from kncrystals import (
    CartanType,
    columns,
    crystal_graph,
    e,
    element,
    eps,
    f,
    graph_to_dot,
    split_column,
    validate_column,
    weight,
)

C5 = CartanType("C", 5)
C3 = CartanType("C", 3)
A2 = CartanType("A", 3)

print("Letters are signed integers: 3 is the letter 3, -3 its barred copy.")
print("Total order on C3:", C3.alphabet())
print()

print("A symplectic column may repeat a letter in barred and unbarred form,")
print("as long as the pair sits low enough.  The height-5 column below is")
print("admissible; splitting trades each duplicated letter for a fresh one:")
col = validate_column(C5, (4, 5, -5, -4, -3))
left, right = split_column(C5, col)
print(f"  column {col}")
print(f"  left  {left}")
print(f"  right {right}")
print()

print("The pair (1, -1) at height 2 is NOT admissible:")
try:
    validate_column(CartanType("C", 2), (1, -1))
except Exception as ex:
    print(" ", type(ex).__name__, "-", ex)
print()

print("Crystal operators act on tensor products by the signature rule.")
b = element(C3, [(2,), (2, -2), (-3, -2), (1, 2, 3)])
print("start:   ", b)
for i in (2, 1, 0):
    b = f(b, i)
    print(f"after f_{i}:", b)
print()

print("eps/phi count how often an operator applies:")
gen = element(C3, [(1, 2, 3)])
print("  eps_i of the generator column:", [eps(gen, i) for i in C3.index_set])
print("  weight (content):", weight(gen))
print()

print("The operator f_0 trades a barred 1 for a 1 (type C) or an n for a 1")
print("(type A).  The full B^{1,1} graph of A2 in DOT form:")
print(graph_to_dot(crystal_graph(A2, (1,))))

print("Column crystals are enumerable:", len(columns(C3, 2)),
      "columns of height 2 in C3.")
