"""
The quaternary gate model, step by step
=======================================

Three lines a, b, c; truth-table rows indexed by i = 4a + 2b + c.  As long as
every controlled gate fires only while its control line is Boolean, each
table entry stays one of four values 0, V|0>, 1, V+|0>, i.e. a Z4 level.
"""

import ncvsynth as nv

# The identity table: row i simply spells out the bits of i (levels 0/2 are
# the Boolean values 0/1).
state = nv.CircuitState.identity()
print("identity table (levels):")
for i, row in enumerate(state.rows):
    print(f"  row {i}: {row}")

# A NOT on line c adds 2 mod 4 on every row: the realized permutation swaps
# neighbouring rows.
after_not = nv.apply_gate(state, nv.NOT(2))
print("\nNOT c realizes:", after_not.permutation())

# A controlled-V adds 1 mod 4 to the target wherever the control is 1;
# rows 2, 3, 6, 7 (b = 1) now hold quantum values on line c.
after_v = nv.apply_gate(state, nv.V(1, 2))
print("\nafter V(b;c) rows 2,3,6,7:", [after_v.rows[i] for i in (2, 3, 6, 7)])
print("state is Boolean?", after_v.is_boolean)

# Using line c as a control now would leave the model: the gate is rejected.
try:
    nv.apply_gate(after_v, nv.V(2, 1))
except nv.QuantumControl as exc:
    print("V(c;b) rejected:", exc)

# A second V on the same placement completes a NOT: V squared equals CNOT.
after_vv = nv.apply_gate(after_v, nv.V(1, 2))
print("\nV(b;c) twice realizes:", after_vv.permutation(), "(= CNOT(b;c))")

# Every state packs into 48 bits; the packed key is the search's identity.
print("\npacked identity key:", hex(state.pack()))
print("round trip ok:", nv.CircuitState.unpack(state.pack()) == state)

# The unitary oracle is a separate semantics: exact 8x8 complex matrices.
# The quaternary model and the unitary model agree on every legal circuit.
circuit = nv.Circuit((nv.V(1, 2), nv.CNOT(0, 1), nv.VPLUS(1, 2)))
print("\nmodel consistency on a 3-gate circuit:", nv.check_model_consistency(circuit))

# The five-gate NCV realization of the Toffoli gate, certified both ways.
toffoli = nv.Circuit(nv.toffoli_decomposition(0, 1, 2))
print("\nToffoli decomposition:")
print("\n".join(f"  {g}" for g in toffoli))
print("realizes TOF(a,b;c):", nv.check_realizes(toffoli, (0, 1, 2, 3, 4, 5, 7, 6)))
