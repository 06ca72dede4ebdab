"""
Optimal circuits for single functions
=====================================

synthesize_one runs the bucket-queue search from the identity state and
stops as soon as the requested function settles, so small functions come
back in well under a second.
"""

import ncvsynth as nv
from ncvsynth import io as nio

TOFFOLI = (0, 1, 2, 3, 4, 5, 7, 6)
PERES = (0, 1, 2, 3, 6, 7, 5, 4)        # (a,b,c) -> (a, b^a, c^ab)


def show(name, func, metric=nv.NCV_111, topology=nv.FULL_TOPOLOGY):
    cost, circuit = nv.synthesize_one(func, metric, topology)
    print(f"{name}  {nio.format_function(func)}")
    print(f"  optimal {metric.slug} cost on {topology.slug}: {cost}")
    for gate in circuit:
        print(f"    {gate}")
    assert nv.check_realizes(circuit, func)


# The Toffoli gate needs 5 quantum gates; the Peres gate, the cheapest
# non-linear reversible gate, needs only 4.
show("Toffoli", TOFFOLI)
show("Peres", PERES)

# Toffoli variants with negative controls cost no more than the plain one
# (one negative control), or one extra gate (both controls negative).
show("Toffoli, negative control on a", (0, 1, 3, 2, 4, 5, 6, 7))
show("Toffoli, both controls negative", (1, 0, 2, 3, 4, 5, 6, 7))

# Costs depend on the metric: under NCV-012 the NOT gates are free and the
# controlled gates dominate.
show("Toffoli under NCV-012", TOFFOLI, metric=nv.NCV_012)

# A custom metric: weights x,y,z for NOT, CNOT, and both controlled-V forms.
custom = nv.CostMetric.parse("custom:2,3,2")
show("Toffoli under custom 2,3,2", TOFFOLI, metric=custom)

# Every witness is certified against the exact unitary oracle, and the text
# format round-trips through the parser.
cost, circuit = nv.synthesize_one(PERES, nv.NCV_111)
text = nio.format_circuit(circuit)
print("circuit text:")
print(text)
print("parses back identically:", nio.parse_circuit(text) == circuit)
