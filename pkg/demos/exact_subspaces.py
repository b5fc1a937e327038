"""Exact scalars and canonical subspace bases, over Q and over F_p."""

from ortholag import GF, QQ, Matrix, Subspace

F5 = GF(5)

# scalars always live in a declared field and stay exact
a = QQ.scalar("2/6")
b = QQ.scalar(5)
print("over Q:       2/6 =", a, " 2/6 + 5 =", a + b, " (2/6)^-1 =", QQ.one / a)

c = F5.scalar(7)
d = F5.scalar("1/3")   # 3^-1 = 2, so this is 2
print("over F_5:     7 =", c, " 1/3 =", d, " 7 * 1/3 =", c * d)

# subspaces canonicalize to reduced row echelon bases, so two spans of the
# same space compare equal no matter how they were written down
s1 = Subspace.span(F5, 3, [[2, 4, 0], [0, 0, 3]])
s2 = Subspace.span(F5, 3, [[1, 2, 1], [0, 0, 1]])
print("\nspan{(2,4,0),(0,0,3)} basis:", [[x.value for x in r] for r in s1.basis.entries])
print("equal to span{(1,2,1),(0,0,1)}:", s1 == s2)

# sums and intersections follow the dimension law
t = Subspace.span(F5, 3, [[0, 1, 0]])
print("\ndim s1 =", s1.dim, " dim t =", t.dim)
print("dim(s1 + t) =", (s1 + t).dim, " dim(s1 & t) =", (s1 & t).dim)

# matrices expose rref, rank, kernel and inverse in the same exact style
m = Matrix(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
red, pivots = m.rref()
print("\nrank over Q:", m.rank(), " pivots:", pivots)
print("kernel rows:", [[str(x.value) for x in r] for r in m.kernel().entries])
