# Resultants of univariate polynomials
from autmap.polyring import VarRegistry, parse_poly, resultant_univariate

X = VarRegistry(["x"])
p = lambda s: parse_poly(s, X)

# zero exactly when the two polynomials share a root
print(resultant_univariate(p("x - 2"), p("x^2 - 4"), "x"))   # 0
print(resultant_univariate(p("x"), p("x + 1"), "x"))         # 1

# swapping arguments flips the sign when both degrees are odd
a, b = p("x^3 + 2*x + 1"), p("x^5 - x + 3")
print(resultant_univariate(a, b, "x"), resultant_univariate(b, a, "x"))

# rational coefficients are fine too
print(resultant_univariate(p("1/2*x^2 - 3"), p("2/3*x + 1"), "x"))
