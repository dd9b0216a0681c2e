# Groebner bases and the smoothness test
from autmap.groebner import buchberger
from autmap.polyring import VarRegistry, parse_poly, render_poly
from autmap.smoothing import build_candidate, jacobian_generators, is_smooth_affine_hypersurface, smooth_lift
from autmap.oracle import univariate_smoothness_oracle

XY = VarRegistry(["x", "y"])
G = buchberger([parse_poly("x^2 - 1", XY), parse_poly("x - 1", XY)])
print([render_poly(g) for g in G])       # ['x - 1']

# F = c(y^2 - y) + f^2 is smooth iff its Jacobian ideal contains 1
f = parse_poly("2*x^3 - 3*x^2", VarRegistry(["x"]))
for c in range(1, 7):
    F = build_candidate(f, c)
    smooth, basis = is_smooth_affine_hypersurface(F)
    print(c, smooth, [render_poly(b) for b in basis])

# c = 4 is the only bad value here: the point (1, 1/2) is singular.
# The resultant route agrees without any Groebner basis:
print([c for c in range(1, 11) if not univariate_smoothness_oracle(f, c)])

r = smooth_lift(f)
print("least c:", r.c, "F =", render_poly(r.F))
print(len(jacobian_generators(r.F)), "generators reduce to", [render_poly(b) for b in r.certificate])

# sometimes c = 1 fails and the search moves on
r = smooth_lift(parse_poly("2*x^2 - 2*x", VarRegistry(["x"])))
print("rejected:", [c for c, _ in r.rejected], "chosen:", r.c)
