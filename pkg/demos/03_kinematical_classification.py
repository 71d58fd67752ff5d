"""All possible kinematics of a two-dimensional universe.

Brackets [K,H] = pP, [K,P] = hH, [H,P] = kK with normalized constants give
27 Lie algebras; demanding a non-compact boost leaves 21, paired into 11
kinds of kinematics.  Contractions (slow velocities, small times, small
everything) walk the family down to the static universe.
"""

from kinematica.kinclass import (
    KINEMATICAL_NAMES,
    apply_symmetry,
    classification_counts,
    contract_triple,
    contraction_graph,
    enumerate_all,
    is_kinematical,
    name_of,
    reachable_by_contractions,
    triple_of_name,
)

print("=== the census ===")
print(classification_counts())

print()
print("=== the eleven kinematical classes (k, h, p) ===")
for name, triple in KINEMATICAL_NAMES.items():
    print(f"  {name:4s} {tuple(triple)}")

print()
print("=== the six excluded algebras are plane motion groups ===")
for t in enumerate_all():
    if not is_kinematical(t):
        print(f"  {tuple(t)} -> {name_of(t)}")

print()
print("=== contraction chains ===")
chain = "dS"
print(f"start at {chain}")
for kind in ("speed-space", "speed-time", "space-time"):
    target = name_of(contract_triple(triple_of_name(chain), kind))
    print(f"  {chain} --{kind}--> {target}")
path = ["dS"]
for kind in ("speed-space", "speed-time", "space-time"):
    path.append(name_of(contract_triple(triple_of_name(path[-1]), kind)))
print(f"composing all three: {' -> '.join(path)}")
print(f"every class reaches St: "
      f"{all('St' in reachable_by_contractions(n) for n in KINEMATICAL_NAMES)}")

print()
print("=== the full contraction web ===")
for src, dst, kind in contraction_graph():
    print(f"  {src:4s} --{kind:11s}--> {dst}")

print()
print("=== swapping space and time (the boost-fixing symmetry) ===")
for name in ("N+", "N-", "G", "dS", "M"):
    image = name_of(apply_symmetry("S_K", triple_of_name(name)))
    print(f"  S_K: {name:3s} -> {image}")
