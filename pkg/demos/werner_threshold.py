"""
Where the PPT test starts firing on Werner states
=================================================

A two-qubit Werner state mixes the singlet with white noise. The smallest
eigenvalue of its partial transpose is ``(1 - 3x) / 4``, so the test flags
entanglement once the singlet weight ``x`` passes one third.
"""

# %%
# Sweep the mixing parameter and print the smallest partial-transpose
# eigenvalue next to the closed form.
import numpy as np

from partsep import ppt_min_eigenvalue, werner

for x in np.linspace(0, 1, 11):
    got = ppt_min_eigenvalue(werner(x))
    flag = "entangled" if got < -1e-9 else ""
    print(f"x = {x:.1f}   min eig = {got:+.4f}   (1-3x)/4 = {(1 - 3 * x) / 4:+.4f}   {flag}")

# %%
# Bisect for the crossing. It lands on 1/3.
lo, hi = 0.0, 1.0
for _ in range(50):
    mid = (lo + hi) / 2
    lo, hi = (mid, hi) if ppt_min_eigenvalue(werner(mid)) >= 0 else (lo, mid)
print(f"threshold ~ {lo:.12f}")
