"""Ground states of the nonperfect type C path model and their walks.

Run with: python demos/03_ground_states_and_walks.py
"""

from kncrystals import (
    CartanType,
    cut_construction,
    demazure_grading_oracle,
    demazure_walk,
    energy_DR,
    ground_states,
    iter_tensor_elements,
    parse_filling,
)

C3 = CartanType("C", 3)

print("Type C column crystals are not perfect: anchoring a tensor product")
print("against the level-1 vacuum admits several highest weight elements.")
states = ground_states(C3, (1, 2, 2, 3))
for g in states:
    print(f"  weight L{g.weight_index}: {g.element}")
print()

print("Each ground state walks down to an unbarred element through shape-")
print("driven words of Demazure arrows; growing the shape by one horizontal")
print("domino per step:")
g = [s for s in states if s.element.factors[0] == (2,)][0]
res = demazure_walk(g)
v = g.element
print("  v_0 =", v)
for j, (state, word) in enumerate(res.steps):
    names = "".join(f"f{i}" for i in reversed(word))
    print(f"  F_{j} = {names}  (shape {state})")
from kncrystals import f  # noqa: E402

for j, (_, word) in enumerate(res.steps):
    for i in word:
        v = f(v, i)
    print(f"  v_{j+1} =", v)
print()

print("The cut construction produces the same endpoint without walking:")
print("  cut:", cut_construction(g))
print("  walk:", res.final)
print()

print("Ground states are exactly the targets of the affine grading search,")
print("and the minimal number of e_0 steps equals the D^R difference:")
for el in list(iter_tensor_elements(C3, (1, 2)))[:5]:
    u_b, m = demazure_grading_oracle(el)
    print(f"  {el}  ->  {u_b}  with {m} zero-arrows "
          f"(D^R: {energy_DR(el)} -> {energy_DR(u_b)})")

print()
b = parse_filling("C3; 2 | 2,-2 | -3,-2 | 1,2,3")
u_b, m = demazure_grading_oracle(b)
print(f"A ground state is its own target: {u_b} with {m} zero-arrows")
