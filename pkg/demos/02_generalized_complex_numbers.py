"""Complex, dual, and double numbers under one roof.

i^2 = -kappa: ordinary complex numbers for kappa > 0, dual numbers for
kappa = 0, double numbers for kappa < 0.  Zero divisors appear exactly when
kappa <= 0, and they are the light cones of the spacetime interpretations.
"""

from kinematica import MoebiusMap, gc, gc_exp_unit
from kinematica.errors import AtInfinity, ZeroDivisorError
from kinematica.gencomplex import GammaPoint, gamma_apply, gamma_lift

print("=== i^2 across the three flavours ===")
for kappa in (1.0, 0.0, -1.0):
    i = gc(0, 1, kappa)
    print(f"kappa = {kappa:+.0f}:  i*i = {i * i}")

print()
print("=== zero divisors and the null cone ===")
null = gc(1, 1, -1.0)  # on the double-number light cone
print(f"double number {null}: squared modulus = {null.sqmod()}")
try:
    null.inv()
except ZeroDivisorError as exc:
    print(f"inverting it fails: {type(exc).__name__}: {exc}")
dual_i = gc(0, 1, 0.0)
print(f"dual number  {dual_i}: squared modulus = {dual_i.sqmod()}")

print()
print("=== unit exponentials: rotations, shears, boosts ===")
for kappa in (1.0, 0.0, -1.0):
    e = gc_exp_unit(kappa, 0.6)
    w = gc(1, 0, kappa)
    print(f"kappa = {kappa:+.0f}:  e^(0.6 i) * 1 = {e * w}   |e|^2 = {e.sqmod():.12f}")

print()
print("=== Moebius maps act on the plane... ===")
kappa = 0.0
shift = MoebiusMap(gc(1, 0, kappa), gc(2, 0, kappa), gc(0, 0, kappa), gc(1, 0, kappa))
print(f"[[1,2],[0,1]] moves 0 to {shift.apply(gc(0, 0, kappa))}")

special = MoebiusMap(gc(1, 0, kappa), gc(0, 0, kappa), gc(0, 1, kappa), gc(1, 0, kappa))
target = gc(1, 0, kappa)
print("[[1,0],[i,1]] at w = 1 lands on 1/(i + 1): fine, that is invertible:")
print(f"  image = {special.apply(target)}")

print()
print("=== ...but only the completion carries every image ===")
north = gamma_apply(special, GammaPoint(gc(1, 0, kappa), gc(0, 0, kappa)))
print(f"[1 : 0] maps to [{north.u} : {north.v}]")
try:
    north.to_affine()
except AtInfinity as exc:
    print(f"no affine image: {type(exc).__name__} ({exc})")
print("its second coordinate is a zero divisor: a genuinely new point,")
print("invisible inside the dual-number plane itself.")
