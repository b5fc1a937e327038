"""Dimension bookkeeping for the stratifications, all in closed form."""

from ortholag.strata import (CurveParams, closure_chain, dim_max_lagrangians,
                             general_t_values, hirschowitz_bound,
                             hirschowitz_exceptions, hn_bound, mod4_table,
                             moduli_dim, sharp_bound, stratum_dim,
                             stratum_row)

p = CurveParams(g=3, n=2)
print(f"g = {p.g}, n = {p.n}:  N = {p.N},  moduli dim = {moduli_dim(p)}")
print("general t values:", general_t_values(p))

print("\nfull stratum ladder:")
for t in range(2, p.N + 4, 2):
    row = stratum_row(p, t)
    print(f"  t = {t:2d}  dim = {row.stratum_dim:3d}  "
          f"max-Lagrangian family dim = {row.dim_max_lagrangians}  "
          f"[{', '.join(row.flags)}]")

print("\nclosure chains by component:")
for sign in ("+", "-"):
    print(f"  {sign}: {closure_chain(p, sign)}")

print("\ngeneral tables for small (g, n):")
for g, n in ((3, 1), (4, 2), (3, 2), (2, 2)):
    rows = mod4_table(CurveParams(g=g, n=n))
    cells = ", ".join(f"({r.t}, {r.component}, {r.dim_max_lagrangians})"
                      for r in rows)
    print(f"  g={g} n={n}:  {cells}")

print("\nbounds at (g, n) = (3, 2):")
print("  sharp bound:      ", sharp_bound(p))
print("  rank bound:       ", hn_bound(p))
print("  subbundle bound:  ", hirschowitz_bound(p))

# the finitely many places where the subbundle bound is not strict
print("\nexceptional (g, n, t) with g <= 5, n <= 6:")
for g, n, t in hirschowitz_exceptions(5, 6):
    print(f"  ({g}, {n}, {t})   family dim at t: "
          f"{dim_max_lagrangians(CurveParams(g, n), t)}")
