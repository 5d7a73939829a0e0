"""Reducibility index and irreducible strata.

Run: python3 demos/03_reducibility.py
"""

from polestrata import gcd_obstruction, is_irreducible, kappa, parse_stratum

spacer = "_" * 60

print("kappa is the largest level of a graph representation")
for text in ["H^1(1^4,-1^4)", "H^1(4,2,-3^2)", "H^1(1,7,-5^2)", "H^1(1^2,-1^4)", "H^2(2,1^3,-1^3,-2^3)"]:
    s = parse_stratum(text)
    report = is_irreducible(s)
    print(f"  {text:<24} g={s.genus} kappa={report.kappa} irreducible={report.irreducible}")

print(spacer)
print("\nWith simple poles only, kappa = n - 1")
for text in ["H^1(2,1,-1^5)", "H^1(3,1^2,-1^5)", "H^1(1^5,-1^7)"]:
    s = parse_stratum(text)
    print(f"  {text:<20} n-1={s.n - 1} kappa={kappa(s)}")

print(spacer)
print("\nA common divisor of all orders forbids any split in genus zero")
for text in ["H^1(2^2,-2^3)", "H^1(4,2,-3,-5)", "H^1(1,7,-5^2)"]:
    s = parse_stratum(text)
    print(f"  {text:<20} gcd obstruction={gcd_obstruction(s)} kappa={kappa(s)}")

print(spacer)
print("\nThe literal two-family split may use a side with no cone point")
report = is_irreducible(parse_stratum("H^1(1,-1,-2)"))
print("  literal split:", report.split_literal)
print("  split with a cone point on each side:", report.split_with_conical)

print(spacer)
print("\nAdding 2g poles of order k gives a genus-zero partner; for k=1 its")
print("index can be larger because bridges need a pole on each side")
for text in ["H^1(1^2,-2)", "H^1(4,2,-3^2)", "H^2(4,-2^2)"]:
    s = parse_stratum(text)
    print(f"  {text:<16} direct={kappa(s, 'direct')} reduce={kappa(s, 'reduce')}")
