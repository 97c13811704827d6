"""Tour of the multivector type: products, involutions and scalar forms.

Run:  python demos/01_multivector_basics.py
"""

from cl12 import Multivector, e0, e1, e2, e3, e4, e5, e7

print("== the eight-dimensional algebra ==")
print("generators: e1 (squares to +1), e2 and e4 (square to -1)")
print(f"e1*e1 = {e1 * e1},  e2*e2 = {e2 * e2},  e4*e4 = {e4 * e4}")
print(f"e1*e2 = {e1 * e2}   but   e2*e1 = {e2 * e1}  (anticommuting)")
print(f"the top blade: e1*e2*e4 = {e1 * e2 * e4}")
print()

a = e0 + 2 * e1 - e3 + e7
b = 3 * e2 + e4
print(f"a = {a}")
print(f"b = {b}")
print(f"a + b     = {a + b}")
print(f"a * b     = {a * b}")
print(f"b * a     = {b * a}")
print(f"2.5 * a   = {2.5 * a}")
print()

print("== involutions ==")
print(f"conjugate(a) = {a.conjugate()}     (negates e1..e6)")
print(f"prime(a)     = {a.prime()}     (negates e2, e4, e6, e7)")
print(f"a * conjugate(a) = {a * a.conjugate()}   (always lands in the center)")
print()

print("== central / imaginary split ==")
print(f"cre(a) = {a.cre()}   cim(a) = {a.cim()}")
print(f"cre(a) + cim(a) == a: {a.cre() + a.cim() == a}")
print(f"is 3 - 2 e7 central?  {(3 * e0 - 2 * e7).is_central()}")
print(f"is e1 central?        {e1.is_central()}")
print()

print("== the split-quaternion halves ==")
c = e0 + e1 + e4 + e5
lo, hi = c.split_h()
print(f"c = {c}")
print(f"c = ({lo}) + ({hi}) * e4:  {lo + hi * e4 == c}")
print()

print("== scalar forms ==")
for m in (a, e1 + e2, e0 + e2 + e4):
    f = m.functionals()
    print(f"{str(m):24s} N = {f.N:5g}  T = {f.T:5g}  P = {f.P:5g}"
          f"  singular: {m.is_singular()}")
print()
print("P = N^2 + 4 T^2 decides invertibility: P = 0 means no inverse exists.")
