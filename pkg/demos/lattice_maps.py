# Affine maps of Z^n that permute the finite set S
from autmap.lattice import GElement, build_S, g_to_affine, maps_S_to_S, stabilizer_bruteforce

S = build_S(3)
print(S.points)        # origin plus 2*e1 and 3*e2

# a group element (a, eps) acts as an upper unipotent matrix with last column (a, eps)
g = GElement((1, -2), -1)
A = g_to_affine(g)
print(A.A, A.b, maps_S_to_S(A, S))

h = GElement((0, 1), 1)
print(g.compose(h), g.compose(g.inverse()) == GElement.identity(3))

# brute force over all integer matrices with small entries
for B in (1, 2):
    maps = stabilizer_bruteforce(3, B)
    print(B, len(maps), all(m.is_g_form() for m in maps))
