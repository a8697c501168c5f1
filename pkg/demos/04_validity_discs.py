#!/usr/bin/env python3
"""Validity, separability and entanglement as disc geometry in the plane.

For tau=0 Group-2 states the whole classification reduces to whether the
point E = (beta1, -beta2) lies in intersections of discs around
C = (beta4, beta3) and -C.  This demo renders the three regions as ASCII art
and cross-checks a sample of cells against the PPT route.
"""

import numpy as np

import xdoily as xd
from xdoily.regions import region_emptiness, sample_region
from xdoily.spectra import detect_type
from xdoily.states import group2_state

BETA0, BETA3, BETA4 = 0.45, -0.3, 0.4
RES = 39

print(f"beta0 = {BETA0}, C = ({BETA4}, {BETA3})")
v_ok, s_ok = region_emptiness(BETA0, BETA3, BETA4)
print(f"validity region nonempty: {v_ok}; separability region nonempty: {s_ok}")

rows = sample_region(BETA0, BETA3, BETA4, t=1, resolution=RES)
glyph = {"invalid": ".", "separable": "s", "entangled": "E"}
grid = {}
for b1, b2, cls in rows:
    grid[(b1, b2)] = glyph[cls]
b1s = sorted({b1 for b1, _, _ in rows})
b2s = sorted({b2 for _, b2, _ in rows})

print("\n(beta1 to the right, beta2 upward; s = separable, E = entangled)")
for b2 in reversed(b2s):
    print("  " + "".join(grid[(b1, b2)] for b1 in b1s))

tally = {"invalid": 0, "separable": 0, "entangled": 0}
for _, _, cls in rows:
    tally[cls] += 1
print(f"\ncell tally: {tally}")

print("\n== spot check twenty cells against the PPT route ==")
center = next(p for p in xd.POINTS if xd.group_of(p) == 2 and detect_type(p) == 1)
rng = np.random.default_rng(6)
agree = 0
for idx in rng.choice(len(rows), size=20, replace=False):
    b1, b2, cls = rows[idx]
    state = group2_state(center, 0.0, 0.0, BETA0, np.array([[b1, b2], [BETA3, BETA4]]))
    agree += cls == xd.classify(state).verdict
print(f"  agreement: {agree}/20")

print("\n== with beta0 = 0 the entangled ring collapses ==")
tally0 = {"invalid": 0, "separable": 0, "entangled": 0}
for _, _, cls in sample_region(0.0, BETA3, BETA4, t=1, resolution=RES):
    tally0[cls] += 1
print(f"  cell tally: {tally0}")
