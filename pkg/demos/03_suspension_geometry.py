"""The suspension tiling: exact lengths, patches, control points.

Run with: python3 demos/03_suspension_geometry.py
"""

from fractions import Fraction

from subtiling import cli, suspension

spec = cli.corpus_lookup("rauzy2-gamma")
system = suspension.SuspensionSystem(spec.substitution())

print("expansion minimal polynomial:", list(system.field.minpoly))
print("prototile lengths (coordinates in 1, beta, beta^2):")
for tok, length in zip(spec.letters, system.lengths):
    print(f"  {tok}: {[str(c) for c in length.coords]}")

refs = suspension.control_points(system, spec.tilemap)
print("control points of the subtile map:")
for tok, c in zip(spec.letters, refs):
    print(f"  {tok}: {[str(x) for x in c.coords]}")
print("admissible:", suspension.is_admissible(system, refs))

patch = system.prototile_patch(1, 2)
print("twice-inflated 'a' prototile:")
for pos, color in patch.tiles:
    print(f"  {spec.token(color)} at {[str(c) for c in pos.coords]}")

window = (Fraction(-6), Fraction(6))
covering = system.patch_covering(*window)
points = suspension.reference_point_sets(covering, refs, window)
print(f"reference points in [{window[0]}, {window[1]}]:",
      points.count())
per_color, cross = suspension.return_vectors(points)
print("distinct same-color return vectors:",
      sum(len(d) for d in per_color))
print("distinct cross differences:", len(cross))
