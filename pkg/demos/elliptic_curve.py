# Rational points on y^2 + y = x^3 - x
from autmap.elliptic import CURVE_37A1, P_37A1, add, infinite_order_sanity, multiples_table, neg, on_curve

E, P = CURVE_37A1, P_37A1
print(E.discriminant())

for k, Q in sorted(multiples_table(P, 6, E).items()):
    print(k, Q, on_curve(Q, E))

# the inverse of (x, y) is (x, -y - 1) on this curve
print(add(P, neg(P, E), E))

# no multiple up to the torsion bound returns to infinity
print(infinite_order_sanity(P, E))
