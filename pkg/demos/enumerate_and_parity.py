"""Enumerate Lagrangians of a split even form and split them by parity."""

from ortholag import GF, component_of, enumerate_lagrangians, standard_form

F3 = GF(3)

# dimension 4 over F_3: the even orthogonal Grassmannian has 2(q+1) = 8
# points, falling into two classes of 4
space = standard_form(F3, 2, "even")
ls = enumerate_lagrangians(space)
print("Lagrangians of the split form of dimension 4 over F_3:", len(ls))

ref = ls[0]
same, other = [], []
for f in ls:
    (same if component_of(space, f, ref).same else other).append(f)

print("\nsame component as the first one:")
for f in same:
    print("  ", [[x.value for x in row] for row in f.basis.entries])
print("opposite component:")
for f in other:
    print("  ", [[x.value for x in row] for row in f.basis.entries])

# two Lagrangians lie in the same class exactly when their intersection
# dimension has the parity of n = dim/2
print("\nintersection dims against the reference:")
for f in ls:
    d = f.intersection(ref).dim
    lab = component_of(space, f, ref).label
    print(f"   dim(F & ref) = {d}   class: {lab}")

# counts follow the product formula 2 * prod(q^i + 1, i < n)
for n in (1, 2, 3):
    count = len(enumerate_lagrangians(standard_form(F3, n, "even")))
    print(f"\ndimension {2 * n}: {count} Lagrangians")
