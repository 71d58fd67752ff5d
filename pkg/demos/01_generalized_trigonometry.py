"""One cosine to rule three geometries.

The label kappa turns the familiar circular functions into parabolic or
hyperbolic ones, and the identity suite survives the change untouched.
"""

import math

from kinematica import atank, cosk, sink, tank

print("=== the three branches at phi = 1 ===")
for kappa, flavour in ((1.0, "circular"), (0.0, "parabolic"), (-1.0, "hyperbolic")):
    print(
        f"kappa = {kappa:+.0f} ({flavour:10s})  "
        f"cosk = {cosk(kappa, 1.0):+.6f}  sink = {sink(kappa, 1.0):+.6f}"
    )
print(f"compare: cos(1) = {math.cos(1.0):+.6f}, cosh(1) = {math.cosh(1.0):+.6f}")

print()
print("=== the fundamental identity cosk^2 + kappa sink^2 = 1 ===")
for kappa in (-2.0, -0.5, 0.0, 0.5, 2.0):
    value = cosk(kappa, 1.7) ** 2 + kappa * sink(kappa, 1.7) ** 2
    print(f"kappa = {kappa:+.1f}: {value:.15f}")

print()
print("=== the unit 'circle' is an ellipse, two lines, or a hyperbola ===")
for kappa in (1.0, 0.0, -1.0):
    points = [(cosk(kappa, p), sink(kappa, p)) for p in (0.0, 0.5, 1.0)]
    rendered = "  ".join(f"({a:+.3f}, {b:+.3f})" for a, b in points)
    print(f"kappa = {kappa:+.0f}: {rendered}")

print()
print("=== smooth contraction: kappa -> 0 recovers the flat branch ===")
for kappa in (1e-2, 1e-6, 1e-12, 0.0):
    print(f"kappa = {kappa:8.0e}:  sink(kappa, 2.5) = {sink(kappa, 2.5):.12f}")

print()
print("=== rapidity addition is the kappa = -1 tangent law ===")
u, v = 0.3, 0.5  # velocities as fractions of c
t = (tank(-1.0, u) + tank(-1.0, v)) / (1 + tank(-1.0, u) * tank(-1.0, v))
print(f"tanh-style composition of 0.3 and 0.5: {t:.6f}")
print(f"closed form tank(-1, 0.8):             {tank(-1.0, 0.8):.6f}")
print(f"inverse recovers the sum: atank(-1, t) = {atank(-1.0, t):.6f}")
