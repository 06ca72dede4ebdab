"""Cost-bucketed uniform-cost search over packed quaternary states.

The search runs Dijkstra with a bucket queue (Dial's structure) from the
identity truth table.  States are 48-bit packed keys (8 rows x 3 lines x 2
bits); a state is settled the first time its bucket is drained at its
recorded cost, so the first recorded cost of a reversible function is its
true minimum.  Zero-weight gates re-insert into the current bucket, which is
processed to exhaustion.

Expansion is vectorized with numpy: each bucket's candidates are produced
per-gate as uint64 batches, deduplicated, and filtered against the settled
set with sorted-array searches.  Ties between equal-cost paths to the same
state break by (parent settle index, gate enumeration index) - the order a
scalar queue-based search would consider them - and within a bucket states
settle in packed-key order, which makes every witness reproducible.

Optional search reductions (all individually toggleable):

1. never extend a path with a gate whose (controls, target) placement equals
   the placement of the gate that produced the node;
2. never apply a controlled-V+ to a fully Boolean state (a V+ opening a
   quantum excursion can always be traded for a V by interchanging V and V+
   inside the excursion, at equal cost when w_v == w_vplus);
3. on settling a Boolean state, record all of its line relabelings at the
   same cost with relabeled witnesses;
4. (off by default) on recording a function, record its inverse too, with
   the reversed/inverted witness.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, replace
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import BudgetExceeded, QuantumControl, UnknownState
from .model import (
    Circuit,
    CircuitState,
    CostMetric,
    FULL_TOPOLOGY,
    Gate,
    IDENTITY_FUNCTION,
    LinePerm,
    N_LINES,
    N_ROWS,
    Topology,
    apply_gate,
    bit_offset,
    enumerate_gates,
    invert_circuit,
    invert_function,
    relabel_circuit,
    relabel_function,
    validate_permutation,
    vswap,
)

N_FUNCTIONS = 40320

#: Scalarization base for lexicographic (primary, secondary) costs.  Any
#: secondary total stays below this (at most ~16 gates of weight <= 25 for
#: the costliest secondary in use), so primary*BASE + secondary orders pairs
#: lexicographically.
LEX_BASE = 4096


def lexicographic_metric(primary: CostMetric, secondary: CostMetric) -> CostMetric:
    """Metric whose optimum minimizes (primary cost, secondary cost)."""
    return CostMetric(
        LEX_BASE * primary.w_not + secondary.w_not,
        LEX_BASE * primary.w_cnot + secondary.w_cnot,
        LEX_BASE * primary.w_v + secondary.w_v,
        LEX_BASE * primary.w_vplus + secondary.w_vplus,
        name=f"lex-{primary.slug}-{secondary.slug}",
    )


def split_lex_cost(cost: int) -> tuple[int, int]:
    """Decompose a scalarized lexicographic cost into (primary, secondary)."""
    return divmod(cost, LEX_BASE)


@dataclass(frozen=True)
class SearchOptions:
    """Pruning toggles and resource ceilings for one search run."""

    no_repeat_placement: bool = True   # reduction (1)
    skip_leading_vplus: bool = True    # reduction (2)
    settle_relabelings: bool = True    # reduction (3)
    settle_inverses: bool = False      # reduction (4)
    max_cost: int | None = None
    max_states: int | None = None
    capacity_hint: int | None = None   # advisory preallocation size


@dataclass(frozen=True)
class FunctionRecord:
    """How one function's witness is rebuilt: a settled path of gate ids,
    then an optional inversion and an optional line relabeling."""

    cost: int
    gate_ids: tuple[int, ...]
    line_perm: LinePerm | None = None
    inverted: bool = False


class SynthesisTable:
    """Optimal cost and one witness circuit per settled reversible function."""

    def __init__(
        self,
        metric: CostMetric | None,
        topology: Topology,
        library: str,
        gate_list: tuple[Gate, ...],
        records: dict[tuple[int, ...], FunctionRecord],
        options: SearchOptions,
        mode: str = "metric",
        states_visited: int = 0,
    ) -> None:
        self.metric = metric
        self.topology = topology
        self.library = library
        self.options = options
        self.mode = mode
        self.states_visited = states_visited
        self._gate_list = gate_list
        self._records = records
        self._costs: dict[tuple[int, ...], int] | None = None

    @property
    def settled_count(self) -> int:
        return len(self._records)

    @property
    def complete(self) -> bool:
        return self.settled_count == N_FUNCTIONS

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, func) -> bool:
        return tuple(func) in self._records

    def functions(self) -> Iterator[tuple[int, ...]]:
        """Settled functions in lexicographic order (the serialization order)."""
        return iter(sorted(self._records))

    @property
    def costs(self) -> Mapping[tuple[int, ...], int]:
        if self._costs is None:
            self._costs = {f: r.cost for f, r in self._records.items()}
        return self._costs

    def cost_of(self, func: Sequence[int]) -> int:
        return self.record(func).cost

    def record(self, func: Sequence[int]) -> FunctionRecord:
        func = validate_permutation(func)
        try:
            return self._records[func]
        except KeyError:
            raise UnknownState(f"function {func} was never settled") from None

    def witness(self, func: Sequence[int]) -> Circuit:
        """Materialize the stored optimal circuit for one function."""
        rec = self.record(func)
        circuit = Circuit(tuple(self._gate_list[i] for i in rec.gate_ids), self.library)
        if rec.inverted:
            # vswap keeps the inverse witness at the source's exact cost even
            # for metrics weighing V and V+ differently.
            circuit = vswap(invert_circuit(circuit))
        if rec.line_perm is not None:
            circuit = relabel_circuit(circuit, rec.line_perm, self.topology)
        return circuit

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for f in self.functions():
            yield f, self._records[f].cost


# --------------------------------------------------------------------------
# Packed-state helpers

_U64 = np.uint64


def _bool_mask(line: int) -> int:
    return sum(1 << (bit_offset(r, line) + 1) for r in range(N_ROWS))

def _flag_mask(line: int) -> int:
    return sum(1 << bit_offset(r, line) for r in range(N_ROWS))


_BOOL = tuple(_bool_mask(l) for l in range(N_LINES))
_FLAG = tuple(_flag_mask(l) for l in range(N_LINES))
_ALL_FLAGS = _U64(_FLAG[0] | _FLAG[1] | _FLAG[2])


def _shifted(x: np.ndarray, delta: int) -> np.ndarray:
    return x << _U64(delta) if delta >= 0 else x >> _U64(-delta)


class _VGate:
    """One library gate compiled to vectorized packed-key arithmetic."""

    __slots__ = ("gid", "gate", "weight", "placement_id", "control_flags", "is_vplus")

    def __init__(self, gid: int, gate: Gate, weight: int, placement_id: int) -> None:
        self.gid = gid
        self.gate = gate
        self.weight = weight
        self.placement_id = placement_id
        mask = 0
        for c in gate.controls:
            mask |= _FLAG[c]
        self.control_flags = _U64(mask)
        self.is_vplus = gate.kind == "V+"

    def apply(self, keys: np.ndarray) -> np.ndarray:
        g = self.gate
        t = g.target
        if g.kind == "NOT":
            return keys ^ _U64(_BOOL[t])
        if g.kind == "CNOT":
            c = g.controls[0]
            return keys ^ _shifted(keys & _U64(_BOOL[c]), 2 * (t - c))
        if g.kind == "TOF":
            c1, c2 = g.controls
            s1 = _shifted(keys & _U64(_BOOL[c1]), 2 * (t - c1))
            s2 = _shifted(keys & _U64(_BOOL[c2]), 2 * (t - c2))
            return keys ^ (s1 & s2)
        # V / V+: move the control's Boolean bits onto the target's flag
        # positions, then add +1 / +3 (mod 4) on the selected 2-bit fields.
        c = g.controls[0]
        sel = _shifted(keys & _U64(_BOOL[c]), 2 * (t - c) - 1)
        if g.kind == "V":
            return keys ^ sel ^ ((keys & sel) << _U64(1))
        return keys ^ sel ^ (((keys & sel) ^ sel) << _U64(1))


def _vector_gates(gates: Sequence[Gate], weights: Sequence[int]) -> list[_VGate]:
    placements: dict[tuple, int] = {}
    out = []
    for gid, (gate, w) in enumerate(zip(gates, weights)):
        pid = placements.setdefault(gate.placement, len(placements))
        out.append(_VGate(gid, gate, w, pid))
    return out


def _identity_key() -> int:
    return CircuitState.identity().pack()


_OUT_SHIFTS = [
    tuple(bit_offset(r, l) + 1 for l in range(N_LINES)) for r in range(N_ROWS)
]


def _functions_of(keys: np.ndarray) -> list[tuple[int, ...]]:
    """Decode the realized permutation of each (Boolean) packed key."""
    out = []
    for key in keys:
        k = int(key)
        out.append(
            tuple(
                4 * ((k >> sa) & 1) + 2 * ((k >> sb) & 1) + ((k >> sc) & 1)
                for sa, sb, sc in _OUT_SHIFTS
            )
        )
    return out


def _assert_projection_permutation(keys: np.ndarray) -> None:
    """Vectorized check that Boolean projections are permutations of 0..7."""
    occupancy = np.zeros(len(keys), dtype=np.uint64)
    one = _U64(1)
    for sa, sb, sc in _OUT_SHIFTS:
        out = (
            ((keys >> _U64(sa)) & one) * _U64(4)
            + ((keys >> _U64(sb)) & one) * _U64(2)
            + ((keys >> _U64(sc)) & one)
        )
        occupancy |= one << out
    if not bool((occupancy == _U64(0xFF)).all()):
        raise AssertionError(
            "internal error: reached a state whose Boolean projection is not "
            "a permutation"
        )


# --------------------------------------------------------------------------
# The engine

class _Chunks:
    """Append-only array storage with optional preallocation."""

    def __init__(self, dtype, hint: int | None) -> None:
        self.dtype = dtype
        self.parts: list[np.ndarray] = []
        self._buf = np.empty(hint, dtype=dtype) if hint else None
        self._used = 0

    def append(self, arr: np.ndarray) -> None:
        if self._buf is not None and self._used + len(arr) <= len(self._buf):
            self._buf[self._used:self._used + len(arr)] = arr
            self._used += len(arr)
            return
        if self._buf is not None:
            self.parts.append(self._buf[:self._used])
            self._buf = None
        self.parts.append(np.asarray(arr, dtype=self.dtype))

    def concatenate(self) -> np.ndarray:
        parts = list(self.parts)
        if self._buf is not None:
            parts.append(self._buf[:self._used])
        if not parts:
            return np.empty(0, dtype=self.dtype)
        return np.concatenate(parts)


def _run_search(
    gates: Sequence[Gate],
    weights: Sequence[int],
    symmetries: Sequence[LinePerm],
    options: SearchOptions,
    targets: frozenset[tuple[int, ...]] | None = None,
) -> tuple[dict, np.ndarray, np.ndarray, int]:
    """Core settle loop.

    Returns (records, predecessor array, gate-id array, states visited) where
    records maps each recorded function to (cost, state index, line perm,
    inverted).
    """
    vgates = _vector_gates(gates, weights)
    n_gates = len(vgates)
    hint = options.capacity_hint

    pred_store = _Chunks(np.int32, hint)
    gate_store = _Chunks(np.uint8, hint)

    root = np.array([_identity_key()], dtype=np.uint64)
    pred_store.append(np.array([-1], dtype=np.int32))
    gate_store.append(np.array([255], dtype=np.uint8))
    total = 1
    sorted_keys = root.copy()

    records: dict[tuple[int, ...], tuple] = {}
    remaining = N_FUNCTIONS

    def record(func, cost, gidx, perm, inverted) -> None:
        nonlocal remaining
        if func not in records:
            records[func] = (cost, gidx, perm, inverted)
            remaining -= 1

    def record_with_symmetries(func, cost, gidx) -> None:
        record(func, cost, gidx, None, False)
        variants = [(func, False)]
        if options.settle_inverses:
            variants.append((invert_function(func), True))
        for base, inverted in variants:
            if options.settle_relabelings:
                for perm in symmetries:
                    if perm == (0, 1, 2):
                        if inverted:
                            record(base, cost, gidx, None, True)
                        continue
                    record(relabel_function(base, perm), cost, gidx, perm, inverted)
            elif inverted:
                record(base, cost, gidx, None, True)

    def done() -> bool:
        if targets is not None:
            return all(t in records for t in targets)
        return remaining == 0

    record_with_symmetries(IDENTITY_FUNCTION, 0, 0)
    if done():
        return records, pred_store.concatenate(), gate_store.concatenate(), total

    buckets: dict[int, list] = {}
    heap: list[int] = []

    def enqueue(cost: int, keys, preds, gids) -> None:
        if len(keys) == 0:
            return
        if cost not in buckets:
            buckets[cost] = []
            heapq.heappush(heap, cost)
        buckets[cost].append((keys, preds, gids))

    def expand(keys: np.ndarray, gidx: np.ndarray, plc: np.ndarray, cost: int) -> None:
        is_boolean = (keys & _ALL_FLAGS) == _U64(0)
        for vg in vgates:
            mask = None
            if vg.control_flags:
                mask = (keys & vg.control_flags) == _U64(0)
            if options.no_repeat_placement:
                m = plc != np.uint8(vg.placement_id)
                mask = m if mask is None else mask & m
            if options.skip_leading_vplus and vg.is_vplus:
                mask = ~is_boolean if mask is None else mask & ~is_boolean
            if mask is None:
                src_keys, src_gidx = keys, gidx
            else:
                src_keys, src_gidx = keys[mask], gidx[mask]
            if len(src_keys) == 0:
                continue
            new_keys = vg.apply(src_keys)
            pos = np.searchsorted(sorted_keys, new_keys)
            pos[pos >= len(sorted_keys)] = len(sorted_keys) - 1
            fresh = sorted_keys[pos] != new_keys
            enqueue(
                cost + vg.weight,
                new_keys[fresh],
                src_gidx[fresh],
                np.full(int(fresh.sum()), vg.gid, dtype=np.uint8),
            )

    placement_of_gate = np.array([vg.placement_id for vg in vgates], dtype=np.uint8)
    expand(root, np.array([0], dtype=np.int32), np.array([255], dtype=np.uint8), 0)

    stop = False
    while heap and not stop:
        cost = heapq.heappop(heap)
        if options.max_cost is not None and cost > options.max_cost:
            raise BudgetExceeded(
                f"cost ceiling {options.max_cost} reached with "
                f"{remaining} function(s) unsettled"
            )
        while not stop and buckets.get(cost):
            entries = buckets[cost]
            buckets[cost] = []
            keys = np.concatenate([e[0] for e in entries])
            preds = np.concatenate([e[1] for e in entries])
            gids = np.concatenate([e[2] for e in entries])
            # Tie-break equal-cost paths by (parent settle index, gate index).
            tie = preds.astype(np.int64) * n_gates + gids
            order = np.lexsort((tie, keys))
            keys_sorted = keys[order]
            lead = np.empty(len(keys_sorted), dtype=bool)
            if len(lead):
                lead[0] = True
                lead[1:] = keys_sorted[1:] != keys_sorted[:-1]
            winners = order[lead]
            unique_keys = keys_sorted[lead]
            pos = np.searchsorted(sorted_keys, unique_keys)
            pos[pos >= len(sorted_keys)] = len(sorted_keys) - 1
            fresh = sorted_keys[pos] != unique_keys
            new_keys = unique_keys[fresh]
            if len(new_keys) == 0:
                continue
            winners = winners[fresh]
            new_pred = preds[winners]
            new_gate = gids[winners]
            new_plc = placement_of_gate[new_gate]

            _assert_projection_permutation(new_keys)
            gidx = np.arange(total, total + len(new_keys), dtype=np.int32)
            pred_store.append(new_pred)
            gate_store.append(new_gate)
            total += len(new_keys)
            if options.max_states is not None and total > options.max_states:
                raise BudgetExceeded(
                    f"state ceiling {options.max_states} reached with "
                    f"{remaining} function(s) unsettled"
                )
            sorted_keys = np.insert(
                sorted_keys, np.searchsorted(sorted_keys, new_keys), new_keys
            )

            boolean = (new_keys & _ALL_FLAGS) == _U64(0)
            if bool(boolean.any()):
                idx = np.nonzero(boolean)[0]
                for func, i in zip(_functions_of(new_keys[idx]), idx):
                    record_with_symmetries(func, cost, int(gidx[i]))
                    if done():
                        stop = True
                        break
            if not stop:
                expand(new_keys, gidx, new_plc, cost)
        buckets.pop(cost, None)

    return records, pred_store.concatenate(), gate_store.concatenate(), total


def _extract_records(
    raw: dict, pred: np.ndarray, gate_ids: np.ndarray
) -> dict[tuple[int, ...], FunctionRecord]:
    out = {}
    for func, (cost, gidx, perm, inverted) in raw.items():
        ids = []
        while gidx > 0:
            ids.append(int(gate_ids[gidx]))
            gidx = int(pred[gidx])
        out[func] = FunctionRecord(cost, tuple(reversed(ids)), perm, inverted)
    return out


def _effective_options(options: SearchOptions, weights_equal: bool) -> SearchOptions:
    # Reductions (2) and (4)'s witness construction lean on the V <-> V+
    # interchange; (2) needs w_v == w_vplus to preserve optimality.
    if weights_equal or not options.skip_leading_vplus:
        return options
    return replace(options, skip_leading_vplus=False)


def settle_all(
    metric: CostMetric,
    topology: Topology = FULL_TOPOLOGY,
    options: SearchOptions | None = None,
    library: str = "NCV",
    weights: Sequence[int] | None = None,
    mode: str = "metric",
) -> SynthesisTable:
    """Settle optimal circuits for all 40,320 reversible functions.

    ``weights`` overrides the per-gate weights (used by the NCT cost modes);
    by default they come from ``metric`` applied to the library's gates.
    """
    options = options or SearchOptions()
    if not topology.is_connected():
        raise ValueError("topology must be connected for a complete search")
    gates = enumerate_gates(topology, library)
    if weights is None:
        weights = [metric.weight(g) for g in gates]
        options = _effective_options(options, metric.w_v == metric.w_vplus)
    raw, pred, gids, total = _run_search(
        gates, weights, topology.line_symmetries(), options
    )
    table = SynthesisTable(
        metric, topology, library, gates, _extract_records(raw, pred, gids),
        options, mode=mode, states_visited=total,
    )
    if not table.complete:
        raise AssertionError("search ended with unsettled functions")
    return table


def synthesize_one(
    func: Sequence[int],
    metric: CostMetric,
    topology: Topology = FULL_TOPOLOGY,
    options: SearchOptions | None = None,
) -> tuple[int, Circuit]:
    """Optimal cost and witness for one function; stops as soon as it settles."""
    func = validate_permutation(func)
    options = options or SearchOptions()
    if not topology.is_connected():
        raise ValueError("topology must be connected")
    gates = enumerate_gates(topology, "NCV")
    weights = [metric.weight(g) for g in gates]
    options = _effective_options(options, metric.w_v == metric.w_vplus)
    raw, pred, gids, total = _run_search(
        gates, weights, topology.line_symmetries(), options,
        targets=frozenset({func}),
    )
    table = SynthesisTable(
        metric, topology, "NCV", gates, _extract_records(raw, pred, gids),
        options, states_visited=total,
    )
    return table.cost_of(func), table.witness(func)


def reconstruct_circuit(table: SynthesisTable, state_key: int) -> Circuit:
    """Witness circuit for a settled Boolean state given as a packed key.

    Witnesses are retained per realized function; intermediate non-Boolean
    search states are released once the table is built, so only Boolean keys
    can be reconstructed.
    """
    state = CircuitState.unpack(state_key)
    if not state.is_boolean:
        raise UnknownState("key does not denote a settled Boolean state")
    func = state.permutation()
    if func not in table:
        raise UnknownState(f"function {func} was never settled")
    return table.witness(func)


def exhaustive_oracle(
    metric: CostMetric,
    topology: Topology = FULL_TOPOLOGY,
    max_cost: int = 3,
) -> dict[tuple[int, ...], int]:
    """Reference cost table by plain enumeration, for validating the engine.

    Walks every legal gate sequence of cost <= max_cost with no search
    reductions at all (only state deduplication), using the object-level
    gate semantics rather than the packed-key engine.  Feasible for small
    ceilings only (roughly max_cost <= 5 under unit weights).
    """
    gates = enumerate_gates(topology, "NCV")
    weights = [metric.weight(g) for g in gates]
    start = CircuitState.identity()
    dist: dict[int, int] = {start.pack(): 0}
    settled: set[int] = set()
    buckets: dict[int, list] = {0: [(start.pack(), start)]}
    results: dict[tuple[int, ...], int] = {}
    for cost in range(max_cost + 1):
        queue = buckets.pop(cost, [])
        i = 0
        while i < len(queue):
            key, state = queue[i]
            i += 1
            if key in settled or dist.get(key) != cost:
                continue
            settled.add(key)
            if state.is_boolean:
                results[state.permutation()] = cost
            for gate, w in zip(gates, weights):
                new_cost = cost + w
                if new_cost > max_cost:
                    continue
                try:
                    new_state = apply_gate(state, gate)
                except QuantumControl:
                    continue
                new_key = new_state.pack()
                if new_key in settled:
                    continue
                best = dist.get(new_key)
                if best is None or new_cost < best:
                    dist[new_key] = new_cost
                    entry = (new_key, new_state)
                    if new_cost == cost:
                        queue.append(entry)
                    else:
                        buckets.setdefault(new_cost, []).append(entry)
    return results
