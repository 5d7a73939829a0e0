"""Graph representations: families of singularities glued along cylinders.

Run: python3 demos/02_graph_representations.py
"""

from polestrata import enumerate_reps, parse_stratum, purify, validate

spacer = "_" * 60


def show(rep):
    fams = [rep.family_orders(v) for v in range(rep.graph.vertex_count)]
    print(f"  level {rep.level}  families {fams}  weights {list(rep.weights)}  edges {list(rep.graph.edges)}")


s = parse_stratum("H^1(4,2,-3^2)")
print(f"Pure representations of {s} (loops instead of weights):")
for rep in enumerate_reps(s, pure_only=True):
    show(rep)

print(spacer)
print("\nAll representations, including weighted vertices:")
for rep in enumerate_reps(s):
    show(rep)

print(spacer)
print("\nPurifying trades weight for loops and keeps validity:")
rep = enumerate_reps(s)[0]
show(rep)
show(purify(rep))
print("  violations after purify:", validate(purify(rep)))

print(spacer)
s = parse_stratum("H^1(1^4,-1^4)")
reps = enumerate_reps(s)
print(f"\n{s} has {len(reps)} representations; the ones of level 3:")
for rep in reps:
    if rep.level == 3:
        show(rep)
