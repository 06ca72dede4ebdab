"""Quaternary truth-table model of 3-line reversible/quantum circuits.

Circuits act on three lines named a, b, c.  Truth-table rows are indexed by
the input pattern i = 4a + 2b + c (line a is the most significant bit).  Under
the Boolean-control restriction every line, on every row, carries one of four
values forming the cyclic group Z4:

    level 0 -> |0>        level 1 -> V|0>
    level 2 -> |1>        level 3 -> V+|0>

A controlled-V gate adds 1 (mod 4) to the target level wherever its control is
Boolean 1, controlled-V+ adds 3, and NOT/CNOT/TOF add 2.  The low bit of a
level is its "quantum flag", the high bit its Boolean projection; a state is
Boolean when all 24 flags are zero, in which case its rows spell out a
permutation of 0..7.

Controlled gates may only be applied while the control line is Boolean on
every row (:class:`~ncvsynth.errors.QuantumControl` otherwise), which is what
keeps the model closed over these four values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Iterator, Sequence

from .errors import QuantumControl, TopologyViolation

N_LINES = 3
N_ROWS = 8
LINE_NAMES = "abc"

NCV_KINDS = ("NOT", "CNOT", "V", "V+")
NCT_KINDS = ("NOT", "CNOT", "TOF")
GATE_KINDS = ("NOT", "CNOT", "V", "V+", "TOF")

#: Additive action of each gate kind on the target level, mod 4.
KIND_SHIFT = {"NOT": 2, "CNOT": 2, "V": 1, "V+": 3, "TOF": 2}


class QuaternaryValue(IntEnum):
    """The four line values of the restricted model, encoded as Z4 levels."""

    ZERO = 0
    V = 1
    ONE = 2
    V_PLUS = 3

    @property
    def boolean(self) -> int:
        """Boolean projection (high bit of the level)."""
        return self.value >> 1

    @property
    def quantum_flag(self) -> int:
        """1 when the value is non-Boolean (low bit of the level)."""
        return self.value & 1


@dataclass(frozen=True)
class Gate:
    """A placed library gate: kind, control line(s) and target line.

    Lines are integers 0, 1, 2 standing for a, b, c.  NOT has no controls,
    CNOT/V/V+ one, TOF two.
    """

    kind: str
    target: int
    controls: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        arity = {"NOT": 0, "CNOT": 1, "V": 1, "V+": 1, "TOF": 2}[self.kind]
        if len(self.controls) != arity:
            raise ValueError(f"{self.kind} takes {arity} control(s), got {self.controls}")
        lines = (self.target, *self.controls)
        if any(l not in (0, 1, 2) for l in lines):
            raise ValueError(f"line ids must be 0..2, got {lines}")
        if self.target in self.controls or len(set(self.controls)) != len(self.controls):
            raise ValueError("control and target lines must be distinct")
        object.__setattr__(self, "controls", tuple(sorted(self.controls)))

    @property
    def placement(self) -> tuple[tuple[int, ...], int]:
        """(control set, target) pair, ignoring the gate kind."""
        return (self.controls, self.target)

    def lines(self) -> tuple[int, ...]:
        return (*self.controls, self.target)

    def inverse(self) -> "Gate":
        """NOT/CNOT/TOF are self-inverse; V and V+ invert to each other."""
        swap = {"V": "V+", "V+": "V"}
        return Gate(swap.get(self.kind, self.kind), self.target, self.controls)

    def __str__(self) -> str:
        names = " ".join(LINE_NAMES[l] for l in (*self.controls, self.target))
        return f"{self.kind} {names}"


def NOT(target: int) -> Gate:
    return Gate("NOT", target)


def CNOT(control: int, target: int) -> Gate:
    return Gate("CNOT", target, (control,))


def V(control: int, target: int) -> Gate:
    return Gate("V", target, (control,))


def VPLUS(control: int, target: int) -> Gate:
    return Gate("V+", target, (control,))


def TOF(control1: int, control2: int, target: int) -> Gate:
    return Gate("TOF", target, (control1, control2))


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list with a library tag ("NCV" or "NCT")."""

    gates: tuple[Gate, ...]
    library: str = "NCV"

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.library not in ("NCV", "NCT"):
            raise ValueError(f"unknown library {self.library!r}")
        allowed = NCV_KINDS if self.library == "NCV" else NCT_KINDS
        for g in self.gates:
            if g.kind not in allowed:
                raise ValueError(f"{g.kind} gate is not in the {self.library} library")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def kind_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for g in self.gates:
            counts[g.kind] = counts.get(g.kind, 0) + 1
        return counts

    def __str__(self) -> str:
        return "; ".join(str(g) for g in self.gates) if self.gates else "(empty)"


@dataclass(frozen=True)
class CostMetric:
    """Linear gate-cost metric: weights for NOT, CNOT, V and V+.

    The built-in metrics all use w_v == w_vplus, which makes circuit cost
    invariant under inversion and under the global V <-> V+ interchange.
    """

    w_not: int
    w_cnot: int
    w_v: int
    w_vplus: int
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for w in (self.w_not, self.w_cnot, self.w_v, self.w_vplus):
            if not isinstance(w, int) or w < 0:
                raise ValueError("metric weights must be nonnegative integers")

    def weight(self, gate: Gate) -> int:
        try:
            return {
                "NOT": self.w_not,
                "CNOT": self.w_cnot,
                "V": self.w_v,
                "V+": self.w_vplus,
            }[gate.kind]
        except KeyError:
            raise ValueError(f"{gate.kind} has no weight under an NCV metric") from None

    @property
    def slug(self) -> str:
        """Filesystem-friendly identifier used for cache file names."""
        if self.name:
            return self.name
        return f"custom-{self.w_not}-{self.w_cnot}-{self.w_v}"

    @classmethod
    def parse(cls, text: str) -> "CostMetric":
        """Parse a preset name ("ncv-111") or "custom:x,y,z" weights.

        Custom weights assign z to both V and V+.
        """
        key = text.strip().lower()
        if key in METRICS:
            return METRICS[key]
        if key.startswith("custom:"):
            parts = key[len("custom:"):].split(",")
            if len(parts) != 3:
                raise ValueError(f"custom metric needs 3 weights, got {text!r}")
            try:
                x, y, z = (int(p) for p in parts)
            except ValueError:
                raise ValueError(f"bad custom metric weights in {text!r}") from None
            return cls(x, y, z, z)
        raise ValueError(f"unknown metric {text!r}")


NCV_111 = CostMetric(1, 1, 1, 1, name="ncv-111")
NCV_012 = CostMetric(0, 1, 2, 2, name="ncv-012")
NCV_155 = CostMetric(1, 5, 5, 5, name="ncv-155")
METRICS = {"ncv-111": NCV_111, "ncv-012": NCV_012, "ncv-155": NCV_155}


def _normalize_pair(pair: Iterable[int]) -> tuple[int, int]:
    a, b = sorted(pair)
    if a == b or a not in (0, 1, 2) or b not in (0, 1, 2):
        raise ValueError(f"bad line pair {pair!r}")
    return (a, b)


@dataclass(frozen=True)
class Topology:
    """Set of unordered line pairs on which 2-qubit gates may be placed."""

    pairs: frozenset[tuple[int, int]]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset(_normalize_pair(p) for p in self.pairs))

    def allows(self, line_x: int, line_y: int) -> bool:
        return _normalize_pair((line_x, line_y)) in self.pairs

    def allows_gate(self, gate: Gate) -> bool:
        lines = gate.lines()
        return all(self.allows(x, y) for x, y in itertools.combinations(lines, 2))

    def is_connected(self) -> bool:
        seen = {0}
        grew = True
        while grew:
            grew = False
            for x, y in self.pairs:
                if (x in seen) != (y in seen):
                    seen.update((x, y))
                    grew = True
        return len(seen) == N_LINES

    def line_symmetries(self) -> tuple[tuple[int, int, int], ...]:
        """Line permutations mapping every allowed pair to an allowed pair."""
        sym = []
        for perm in itertools.permutations(range(N_LINES)):
            mapped = {_normalize_pair((perm[x], perm[y])) for x, y in self.pairs}
            if mapped == self.pairs:
                sym.append(perm)
        return tuple(sym)

    @property
    def slug(self) -> str:
        return self.name or "-".join(
            "".join(LINE_NAMES[l] for l in p) for p in sorted(self.pairs)
        )


FULL_TOPOLOGY = Topology(frozenset({(0, 1), (0, 2), (1, 2)}), name="full")
PATH_TOPOLOGY = Topology(frozenset({(0, 1), (1, 2)}), name="path")
TOPOLOGIES = {"full": FULL_TOPOLOGY, "path": PATH_TOPOLOGY}


# --------------------------------------------------------------------------
# Truth-table states

Row = tuple[int, int, int]


def bit_offset(row: int, line: int) -> int:
    """Bit position of a truth-table entry in the packed 48-bit state key.

    Each entry takes two bits starting at 2*(3*row + line): the low bit is the
    quantum flag, the high bit the Boolean projection.
    """
    return 2 * (N_LINES * row + line)


@dataclass(frozen=True)
class CircuitState:
    """Quaternary truth table: 8 rows of 3 Z4 levels, one per line."""

    rows: tuple[Row, ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if len(rows) != N_ROWS or any(len(r) != N_LINES for r in rows):
            raise ValueError("a state needs 8 rows of 3 levels")
        if any(v not in (0, 1, 2, 3) for r in rows for v in r):
            raise ValueError("levels must be in 0..3")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls) -> "CircuitState":
        rows = []
        for i in range(N_ROWS):
            rows.append((2 * ((i >> 2) & 1), 2 * ((i >> 1) & 1), 2 * (i & 1)))
        return cls(tuple(rows))

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> "CircuitState":
        perm = validate_permutation(perm)
        rows = []
        for out in perm:
            rows.append((2 * ((out >> 2) & 1), 2 * ((out >> 1) & 1), 2 * (out & 1)))
        return cls(tuple(rows))

    @property
    def is_boolean(self) -> bool:
        return all(v & 1 == 0 for row in self.rows for v in row)

    def boolean_projection(self) -> tuple[int, ...]:
        """Row outputs read from the high bits, whatever the flags say."""
        return tuple(
            4 * (r[0] >> 1) + 2 * (r[1] >> 1) + (r[2] >> 1) for r in self.rows
        )

    def permutation(self) -> tuple[int, ...]:
        """The realized reversible function; only defined for Boolean states."""
        if not self.is_boolean:
            raise ValueError("state carries quantum values; no Boolean function")
        return self.boolean_projection()

    def pack(self) -> int:
        """Canonical 48-bit key: the packed levels of all 24 entries."""
        key = 0
        for row in range(N_ROWS):
            for line in range(N_LINES):
                key |= self.rows[row][line] << bit_offset(row, line)
        return key

    @classmethod
    def unpack(cls, key: int) -> "CircuitState":
        rows = []
        for row in range(N_ROWS):
            rows.append(tuple((key >> bit_offset(row, line)) & 3 for line in range(N_LINES)))
        return cls(tuple(rows))


def validate_permutation(values: Sequence[int]) -> tuple[int, ...]:
    """Return ``values`` as a tuple, or raise InvalidFunction."""
    from .errors import InvalidFunction

    perm = tuple(int(v) for v in values)
    if len(perm) != N_ROWS or sorted(perm) != list(range(N_ROWS)):
        raise InvalidFunction(f"not a permutation of 0..7: {values!r}")
    return perm


def invert_function(perm: Sequence[int]) -> tuple[int, ...]:
    perm = validate_permutation(perm)
    inv = [0] * N_ROWS
    for i, out in enumerate(perm):
        inv[out] = i
    return tuple(inv)


IDENTITY_FUNCTION = tuple(range(N_ROWS))


# --------------------------------------------------------------------------
# Gate application

def apply_gate(state: CircuitState, gate: Gate) -> CircuitState:
    """Apply one gate to every truth-table row.

    The target level gains KIND_SHIFT[kind] mod 4 in the rows where all
    controls are Boolean 1.  Controls must be Boolean-valued on every row;
    otherwise QuantumControl is raised and the state is left untouched.  The
    result's Boolean projection is asserted to remain a permutation.
    """
    for c in gate.controls:
        for row in state.rows:
            if row[c] & 1:
                raise QuantumControl(
                    f"{gate} has a non-Boolean control value in some row"
                )
    shift = KIND_SHIFT[gate.kind]
    rows = []
    for row in state.rows:
        if all(row[c] == 2 for c in gate.controls):
            new = list(row)
            new[gate.target] = (new[gate.target] + shift) & 3
            rows.append(tuple(new))
        else:
            rows.append(row)
    result = CircuitState(tuple(rows))
    if sorted(result.boolean_projection()) != list(range(N_ROWS)):
        raise AssertionError(
            "internal error: Boolean projection stopped being a permutation"
        )
    return result


def apply_circuit(state: CircuitState, circuit: Circuit) -> CircuitState:
    for gate in circuit:
        state = apply_gate(state, gate)
    return state


def realized_function(circuit: Circuit) -> tuple[int, ...]:
    """Fold the circuit from the identity state and read off the permutation."""
    return apply_circuit(CircuitState.identity(), circuit).permutation()


def circuit_cost(circuit: Circuit, metric: CostMetric) -> int:
    """Sum of per-gate weights (NCV circuits only)."""
    return sum(metric.weight(g) for g in circuit)


def invert_circuit(circuit: Circuit) -> Circuit:
    """Reverse the gate order and invert each gate; realizes the inverse map."""
    return Circuit(tuple(g.inverse() for g in reversed(circuit.gates)), circuit.library)


def vswap(circuit: Circuit) -> Circuit:
    """Interchange every V with V+ and vice versa.

    For a circuit realizing a Boolean function the realized function is
    unchanged, and the cost is unchanged whenever w_v == w_vplus.
    """
    swap = {"V": "V+", "V+": "V"}
    gates = tuple(
        Gate(swap.get(g.kind, g.kind), g.target, g.controls) for g in circuit.gates
    )
    return Circuit(gates, circuit.library)


# --------------------------------------------------------------------------
# Line relabeling

LinePerm = tuple[int, int, int]

LINE_PERMUTATIONS: tuple[LinePerm, ...] = tuple(itertools.permutations(range(N_LINES)))


def row_permutation(perm: LinePerm) -> tuple[int, ...]:
    """Row-index permutation induced by renaming line l to perm[l]."""
    out = []
    for i in range(N_ROWS):
        bits = ((i >> 2) & 1, (i >> 1) & 1, i & 1)
        j = 0
        for line in range(N_LINES):
            j |= bits[line] << (2 - perm[line])
        out.append(j)
    return tuple(out)


def relabel_function(func: Sequence[int], perm: LinePerm) -> tuple[int, ...]:
    """Conjugate a reversible function by a line renaming."""
    func = validate_permutation(func)
    rp = row_permutation(perm)
    out = [0] * N_ROWS
    for i in range(N_ROWS):
        out[rp[i]] = rp[func[i]]
    return tuple(out)


def relabel_circuit(
    circuit: Circuit, perm: LinePerm, topology: Topology = FULL_TOPOLOGY
) -> Circuit:
    """Rename every gate's lines; reject placements the topology forbids."""
    gates = []
    for g in circuit.gates:
        new = Gate(g.kind, perm[g.target], tuple(perm[c] for c in g.controls))
        if not topology.allows_gate(new):
            raise TopologyViolation(f"{new} uses a pair outside {topology.slug}")
        gates.append(new)
    return Circuit(tuple(gates), circuit.library)


def relabel(obj, perm: LinePerm, topology: Topology = FULL_TOPOLOGY):
    """Relabel a Circuit or a function (sequence of 8 outputs) alike."""
    if isinstance(obj, Circuit):
        return relabel_circuit(obj, perm, topology)
    return relabel_function(obj, perm)


# --------------------------------------------------------------------------
# Gate enumeration

def enumerate_gates(topology: Topology, library: str = "NCV") -> tuple[Gate, ...]:
    """All placeable gates of a library, in canonical order.

    Canonical order is NOT by target, then CNOT, V, V+ (or TOF for NCT) each
    by (control(s), target) lexicographic; it fixes tie-breaking everywhere.
    Under the full topology the NCV library has 21 gates, under the a-b/b-c
    path 15.  TOF placements require all three pairwise interactions.
    """
    if library not in ("NCV", "NCT"):
        raise ValueError(f"unknown library {library!r}")
    gates = [NOT(t) for t in range(N_LINES)]
    kinds = ("CNOT", "V", "V+") if library == "NCV" else ("CNOT",)
    for kind in kinds:
        for control in range(N_LINES):
            for target in range(N_LINES):
                if control != target and topology.allows(control, target):
                    gates.append(Gate(kind, target, (control,)))
    if library == "NCT":
        for c1, c2, target in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            gate = TOF(c1, c2, target)
            if topology.allows_gate(gate):
                gates.append(gate)
    return tuple(gates)
