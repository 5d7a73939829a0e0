"""Arc and saddle connection bounds.

Run: python3 demos/05_bounds.py
"""

from polestrata import bounds_report, parse_stratum, sc_chamber_bound

spacer = "_" * 60

header = f"{'stratum':<18}{'|A| >=':>7}{'|A| <=':>7}  rule{'':<18}{'generic':<12}{'|SC| <=':>8}"
print(header)
for text in ["H^1(1^2,-1^4)", "H^1(3,-1^3)", "H^1(1^2,-2^2)", "H^1(1,7,-5^2)", "H^1(2,1^2,-6)", "H^2(1,-1^3,-2)"]:
    r = bounds_report(parse_stratum(text))
    upper = r.mgas_upper
    sc = "-" if r.sc_stratum_bound is None else r.sc_stratum_bound
    print(f"{text:<18}{r.mgas_lower:>7}{upper.value:>7}  {upper.rule:<22}{str(r.generic_mgas):<12}{sc:>8}")

print(spacer)
print("\nChamber bound with a single core component of p-2 triangles is p(p-1)/2")
for p in range(3, 9):
    print(f"  p={p}: {sc_chamber_bound(0, 1, p, [p - 2])}")
