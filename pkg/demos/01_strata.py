"""Strata, genus and nonemptiness.

Run: python3 demos/01_strata.py
"""

from polestrata import is_nonempty, parse_stratum

spacer = "_" * 60

print("A stratum is written H^k(orders); negative orders <= -k are poles.")
s = parse_stratum("H^2(2,1^3,-1^3,-2^3)")
print("parsed:", s)
print("conical singularities:", s.zeros)
print("poles of higher order:", s.poles)
print("genus:", s.genus)

print(spacer)
print("\nThe degree sum fixes the genus: sum(a) - sum(b) = k(2g - 2)")
for text in ["H^1(3,-1^3)", "H^1(1,-1^3)", "H^1(2^2,1,-1^3)", "H^3(4,-2^2,-3^2)"]:
    t = parse_stratum(text)
    print(f"  {text:<20} g = {t.genus}")

print(spacer)
print("\nSome patterns are not realized by any differential")
for text in ["H^1(1,-1)", "H^1(2,-1^2,-2)", "H^2(2,-2)", "H^2(1,-1)", "H^2(1,3)", "H^3(6,2,-4^2)"]:
    print(f"  {text:<20} {is_nonempty(parse_stratum(text)).value}")

print(spacer)
print("\nMalformed patterns are rejected")
for text in ["H^1(1,-2)", "H^1()", "H^1(0,-2)"]:
    try:
        parse_stratum(text)
    except ValueError as exc:
        print(f"  {text:<12} {type(exc).__name__}: {exc}")
