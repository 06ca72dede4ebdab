"""Exact 8x8 unitary oracle, independent of the quaternary model.

Every circuit the synthesis emits can be certified here: gates are expanded
to full 8x8 complex matrices, multiplied out in order, and compared entrywise
against the 0/1 permutation matrix of the claimed function.  No global-phase
quotient is needed; the NOT/CNOT/V/V+/TOF gate set realizes Boolean functions
exactly, so the tolerance only absorbs floating-point rounding.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import IllegalCircuit, QuantumControl
from .model import (
    Circuit,
    CircuitState,
    FULL_TOPOLOGY,
    Gate,
    N_LINES,
    N_ROWS,
    Topology,
    apply_gate,
    enumerate_gates,
    validate_permutation,
)

DEFAULT_TOL = 1e-9

#: The controlled-V target transformation: a square root of NOT.
V_MATRIX = (1 + 1j) / 2 * np.array([[1, -1j], [-1j, 1]])

_KIND_2X2 = {
    "NOT": np.array([[0, 1], [1, 0]], dtype=complex),
    "CNOT": np.array([[0, 1], [1, 0]], dtype=complex),
    "TOF": np.array([[0, 1], [1, 0]], dtype=complex),
    "V": V_MATRIX,
    "V+": V_MATRIX.conj().T,
}


def _line_bit(line: int) -> int:
    # Row index convention: i = 4a + 2b + c, so line 0 (a) is bit 2.
    return 2 - line


def gate_unitary(gate: Gate) -> np.ndarray:
    """Embed a gate into the 8-dimensional space of the three lines.

    The 2x2 block acts on the target wherever all control bits of the basis
    index are 1; all other basis states pass through unchanged.
    """
    block = _KIND_2X2[gate.kind]
    u = np.zeros((N_ROWS, N_ROWS), dtype=complex)
    tbit = 1 << _line_bit(gate.target)
    for j in range(N_ROWS):
        if all((j >> _line_bit(c)) & 1 for c in gate.controls):
            t = (j >> _line_bit(gate.target)) & 1
            u[j & ~tbit, j] = block[0, t]
            u[j | tbit, j] = block[1, t]
        else:
            u[j, j] = 1.0
    return u


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Ordered product of gate unitaries (first gate applied first)."""
    u = np.eye(N_ROWS, dtype=complex)
    for gate in circuit:
        u = gate_unitary(gate) @ u
    return u


def permutation_matrix(func: Sequence[int]) -> np.ndarray:
    func = validate_permutation(func)
    p = np.zeros((N_ROWS, N_ROWS), dtype=complex)
    for i, out in enumerate(func):
        p[out, i] = 1.0
    return p


def check_realizes(
    circuit: Circuit, func: Sequence[int], tol: float = DEFAULT_TOL
) -> bool:
    """True iff the circuit's unitary equals the function's permutation matrix
    entrywise within ``tol``."""
    diff = circuit_unitary(circuit) - permutation_matrix(func)
    return float(np.max(np.abs(diff))) <= tol


def first_mismatch(
    circuit: Circuit, func: Sequence[int], tol: float = DEFAULT_TOL
) -> tuple[int, int, complex, complex] | None:
    """First offending matrix entry (row, col, got, expected), or None."""
    u = circuit_unitary(circuit)
    p = permutation_matrix(func)
    bad = np.argwhere(np.abs(u - p) > tol)
    if len(bad) == 0:
        return None
    r, c = (int(x) for x in bad[0])
    return r, c, complex(u[r, c]), complex(p[r, c])


# --------------------------------------------------------------------------
# Cross-model consistency

#: Single-qubit state V^level |0>, one per Z4 level.
_LEVEL_VECTORS = [np.linalg.matrix_power(V_MATRIX, k) @ np.array([1, 0], dtype=complex) for k in range(4)]


def check_model_consistency(circuit: Circuit, tol: float = DEFAULT_TOL) -> bool:
    """Compare the unitary simulation with the quaternary simulation.

    For every Boolean input x the unitary image of |x> must equal the tensor
    product (over lines a, b, c) of V^level |0> with levels taken from row x
    of the folded quaternary state.  Raises IllegalCircuit if the circuit
    violates the Boolean-control restriction.
    """
    state = CircuitState.identity()
    try:
        for gate in circuit:
            state = apply_gate(state, gate)
    except QuantumControl as exc:
        raise IllegalCircuit(str(exc)) from exc
    u = circuit_unitary(circuit)
    for x in range(N_ROWS):
        levels = state.rows[x]
        expect = _LEVEL_VECTORS[levels[0]]
        for line in range(1, N_LINES):
            expect = np.kron(expect, _LEVEL_VECTORS[levels[line]])
        if float(np.max(np.abs(u[:, x] - expect))) > tol:
            return False
    return True


# --------------------------------------------------------------------------
# Batch verification and random regression circuits

def verify_witnesses(
    witnesses: Iterable[tuple[Sequence[int], Circuit]],
    tol: float = DEFAULT_TOL,
    topology: Topology = FULL_TOPOLOGY,
) -> tuple[int, tuple[int, ...] | None]:
    """Check many (function, circuit) pairs; all unitary math is batched.

    Returns (number checked, first failing function or None).  Circuits are
    grouped by length and folded as stacked 8x8 matrix products, which keeps
    the full 40,320-witness check to a few seconds.
    """
    ncv = enumerate_gates(topology, "NCV")
    nct = enumerate_gates(topology, "NCT")
    index = {g: i for i, g in enumerate(ncv)}
    for g in nct:
        index.setdefault(g, len(index))
    mats = np.stack([gate_unitary(g) for g, _ in sorted(index.items(), key=lambda kv: kv[1])])

    by_len: dict[int, list[tuple[tuple[int, ...], list[int]]]] = {}
    checked = 0
    for func, circuit in witnesses:
        func = validate_permutation(func)
        by_len.setdefault(len(circuit), []).append(
            (func, [index[g] for g in circuit])
        )
        checked += 1
    for length, group in sorted(by_len.items()):
        funcs = np.array([f for f, _ in group])
        acc = np.broadcast_to(np.eye(N_ROWS, dtype=complex), (len(group), N_ROWS, N_ROWS)).copy()
        if length:
            ids = np.array([ids for _, ids in group])
            for step in range(length):
                acc = np.matmul(mats[ids[:, step]], acc)
        targets = np.zeros_like(acc)
        rows = np.repeat(np.arange(len(group)), N_ROWS)
        targets[rows, funcs.ravel(), np.tile(np.arange(N_ROWS), len(group))] = 1.0
        errs = np.abs(acc - targets).reshape(len(group), -1).max(axis=1)
        bad = np.nonzero(errs > tol)[0]
        if len(bad):
            return checked, tuple(int(v) for v in funcs[bad[0]])
    return checked, None


def random_legal_circuit(
    rng: np.random.Generator,
    n_gates: int,
    topology: Topology = FULL_TOPOLOGY,
) -> Circuit:
    """Uniform random walk over gates that are applicable at each step.

    Used by the seeded consistency regression; every prefix respects the
    Boolean-control restriction by construction.
    """
    pool = enumerate_gates(topology, "NCV")
    state = CircuitState.identity()
    gates = []
    while len(gates) < n_gates:
        candidates = []
        for g in pool:
            if all(state.rows[r][c] & 1 == 0 for c in g.controls for r in range(N_ROWS)):
                candidates.append(g)
        gate = candidates[int(rng.integers(len(candidates)))]
        state = apply_gate(state, gate)
        gates.append(gate)
    return Circuit(tuple(gates))
