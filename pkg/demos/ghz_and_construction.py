"""
GHZ states and building inseparable states by hand
==================================================

Every bipartition of a GHZ state reduces to a Bell projector, so every cut is
flagged. Going the other way, any pair of two-qubit states can be spread over
three qubits so that the B|AC reduction gives back their mixture.
"""

# %%
from partsep import (
    DensityMatrix,
    analyze_all,
    construct_inseparable,
    ghz,
    maximally_mixed,
    parse_partition,
    pure_to_density,
    reduce,
    singlet_projector,
)

for n in range(2, 7):
    report = analyze_all(pure_to_density(ghz(n)))
    flagged = sum(v.inseparable for v in report.verdicts)
    print(f"GHZ_{n}: {flagged}/{len(report.verdicts)} cuts inseparable")

# %%
# Mix a singlet with white noise and lift it to three qubits.
layout = parse_partition("B|AC", 3)
singlet = DensityMatrix(2, singlet_projector())
rho = construct_inseparable([singlet, maximally_mixed(2)], [0.6, 0.4], layout)
tau = reduce(rho, layout)
print("reduction is the mixture:",
      abs(tau.mat - (0.6 * singlet.mat + 0.4 * maximally_mixed(2).mat)).max() < 1e-12)
for v in analyze_all(rho).verdicts:
    print(f"  {v.partition.label():5s} {v.kind.value}")
