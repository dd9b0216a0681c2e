# Exact polynomial arithmetic over the rationals
import autmap as am
from autmap.polyring import VarRegistry, parse_poly, render_poly, homogenize, partial_derivative

R = VarRegistry(["x", "y"])
f = parse_poly("y^2 + y - (x^3 - x)", R)
print(render_poly(f))          # printed in grevlex order, largest term first

# arithmetic never rounds
g = parse_poly("1/2*x - y", R)
print(render_poly(f * g))
print(render_poly(g ** 3))

# the registry fixes the variable order; parse_auto picks it from the text
p = am.parse_auto("t10*t2 + t1")
print(p.registry.names)

# derivatives and homogenization
print(render_poly(partial_derivative(f, "x")))
h = homogenize(f, "z")
print(h.registry.names, render_poly(h))
print(am.evaluate(h, (2, 3, 1)) == am.evaluate(f, (2, 3)))
