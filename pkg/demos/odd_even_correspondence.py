"""Lagrangians of an odd space against the two-component even picture.

Extending an odd split space by a suitable scalar gives an even split space;
every odd Lagrangian has exactly two lifts, one in each component, and the
flip of the added vector swaps them.
"""

from ortholag import (GF, Subspace, component_of, enumerate_lagrangians,
                      extend_by_scalar, flip_automorphism, lift_odd_to_even,
                      restrict_even_to_odd, standard_form)

F5 = GF(5)

odd = standard_form(F5, 1, "odd")      # dimension 3
even = extend_by_scalar(odd, 1)        # dimension 4, still split
print("odd space dim:", odd.dim, " even extension dim:", even.dim)

rows = lambda s: [[x.value for x in row] for row in s.basis.entries]

e = Subspace.span(F5, 3, [[1, 0, 0]])
pair = lift_odd_to_even(odd, e, 1)
print("\nlift of", rows(e))
print("  plus: ", rows(pair.plus_lift))
print("  minus:", rows(pair.minus_lift))
print("  opposite components:",
      not component_of(even, pair.plus_lift, pair.minus_lift).same)

flip = flip_automorphism(even)
print("  flip swaps them:", pair.plus_lift.apply(flip) == pair.minus_lift)

# restriction along the odd hyperplane undoes the lift, two to one
embed = Subspace.span(F5, 4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
back = restrict_even_to_odd(even, embed, pair.plus_lift)
print("  restricting the plus lift returns e:", back == e)

odd_ls = enumerate_lagrangians(odd)
even_ls = enumerate_lagrangians(even)
print(f"\ncounts: {len(odd_ls)} odd Lagrangians, {len(even_ls)} even ones")

fibers = {}
for f in even_ls:
    fibers.setdefault(restrict_even_to_odd(even, embed, f), []).append(f)
print("every fiber has two elements:",
      all(len(fs) == 2 for fs in fibers.values()))
