# From a Diophantine equation to an automorphism question, and back
from autmap import parse_auto
from autmap.oracle import check_equivalence
from autmap.polyring import render_poly
from autmap.reducer import compile_instance, four_squares_transform, point_in_Z, sigma_image

desc = compile_instance(parse_auto("t1 - 5"))
print("n =", desc.n, " c =", desc.smoothing.c)
print("Z:", render_poly(desc.Z_equation), "= 0")
print("S =", desc.S.points)
for row in desc.S_prime:
    print("  ", row)

# the witness g = (5, 0; +1) moves the base point to (5 : 0 : 1), which lies on Z
print(point_in_Z(desc, (5, 0, 1)), point_in_Z(desc, (0, 0, 1)))

# bounded search on both sides of the equivalence
for text in ["t1 - 5", "t1^2 + 1", "t1^2 - 4", "t1 + t2 - 3"]:
    r = check_equivalence(parse_auto(text), 4)
    print(f"{text:12s} zeros={len(r.f_zeros):2d} witnesses={len(r.sigma_witnesses):2d}  {r.verdict}")

# natural-number questions go through four squares first
g = four_squares_transform(parse_auto("u - 3"))
print(render_poly(g))
r = check_equivalence(parse_auto("u - 3"), 1, mode="N")
print(r.f_zeros[:3], "...")
print(sigma_image(r.sigma_witnesses[0]))
