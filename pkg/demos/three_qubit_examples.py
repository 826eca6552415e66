"""
Reducing three-qubit states to two qubits
=========================================

Two three-qubit families reduce to the Werner state along one cut each.
``rho'`` does so along A|BC and ``rho''`` along B|AC. The PPT verdict on the
reduced 4x4 matrix then carries back to the original state.
"""

# %%
import numpy as np

from partsep import analyze_all, paper_example, parse_partition, reduce, werner

x = 0.5
prime = paper_example("prime", x)
reduced = reduce(prime, parse_partition("A|BC", 3))
print(np.round(reduced.mat.real, 4))
print("equals werner(0.5):", np.allclose(reduced.mat, werner(x).mat, atol=1e-12))

# %%
# ``rho''`` is the same story along B|AC. Orientation matters: the written
# left side becomes the first qubit of the reduction.
dprime = paper_example("doubleprime", x)
print(np.allclose(reduce(dprime, parse_partition("B|AC", 3)).mat, werner(x).mat, atol=1e-12))

# %%
# Analysing every cut at once. Cuts the test cannot decide come back as
# "undetermined", which is not a claim of separability.
for state, name in [(prime, "rho'"), (dprime, "rho''")]:
    print(name)
    for v in analyze_all(state).verdicts:
        print(f"  {v.partition.label():5s} {v.kind.value:12s} {v.min_pt_eigenvalue:+.4f}")
