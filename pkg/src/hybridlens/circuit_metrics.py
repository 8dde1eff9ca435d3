"""Per-circuit structural measurements.

Depth uses greedy wire-clock layering: every executable operation lands on
layer 1 + max(clock of each wire it touches); barriers only synchronize
their qubit wires. A classically-conditioned operation reads every bit of
its condition register, so those wires participate too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qasm import Instruction, InstructionKind, QuantumCircuit

Wire = tuple[str, str, int]  # ("q"|"c", register, index)

DEFAULT_AUX_PREFIXES = ("anc", "aux")


@dataclass(frozen=True)
class QuantumMetricSet:
    circuit_name: str
    path: str
    width: int
    depth: int
    gate_count_total: int
    gate_count_single: int
    gate_count_multi: int
    gate_complexity_score: int
    conditional_count: int
    quantum_cyclomatic: int
    measure_count: int
    nonterminal_measure_count: int
    reset_count: int
    midcircuit_reset_count: int
    auxiliary_qubit_count: int


def circuit_width(circuit: QuantumCircuit) -> int:
    """Declared qubit count, whether or not every qubit is acted upon."""
    return circuit.num_qubits


def instruction_wires(instr: Instruction, clbit_sizes: dict[str, int]) -> list[Wire]:
    """Wires an executable instruction touches (excludes barrier handling)."""
    wires: list[Wire] = [("q", reg, idx) for reg, idx in instr.qubit_operands]
    if instr.kind is InstructionKind.MEASURE:
        wires.extend(("c", reg, idx) for reg, idx in instr.clbit_operands)
    if instr.condition is not None:
        creg = instr.condition[0]
        wires.extend(("c", creg, i) for i in range(clbit_sizes.get(creg, 0)))
    return wires


def circuit_depth(circuit: QuantumCircuit) -> int:
    clbit_sizes = dict(circuit.clbit_registers)
    clock: dict[Wire, int] = {}
    depth = 0
    for instr in circuit.instructions:
        if instr.kind is InstructionKind.BARRIER:
            wires = [("q", reg, idx) for reg, idx in instr.qubit_operands]
            level = max((clock.get(w, 0) for w in wires), default=0)
            for w in wires:
                clock[w] = level
            continue
        wires = instruction_wires(instr, clbit_sizes)
        level = 1 + max((clock.get(w, 0) for w in wires), default=0)
        for w in wires:
            clock[w] = level
        depth = max(depth, level)
    return depth


def gate_complexity(circuit: QuantumCircuit) -> tuple[int, int, int, int]:
    """(total, single-qubit, multi-qubit, arity-weighted score) over Gate
    instructions; measures, resets, and barriers are excluded."""
    total = single = multi = score = 0
    for instr in circuit.instructions:
        if instr.kind is not InstructionKind.GATE:
            continue
        arity = len(instr.qubit_operands)
        total += 1
        score += arity
        if arity >= 2:
            multi += 1
        else:
            single += 1
    return total, single, multi, score


def conditional_metrics(circuit: QuantumCircuit) -> tuple[int, int]:
    """(conditioned instruction count, that count plus one)."""
    conditional = sum(1 for instr in circuit.instructions if instr.condition is not None)
    return conditional, conditional + 1


def measurement_metrics(circuit: QuantumCircuit) -> tuple[int, int]:
    """(measure count, measures whose qubit wire sees later operations)."""
    executable = (InstructionKind.GATE, InstructionKind.MEASURE, InstructionKind.RESET)
    measures = 0
    nonterminal = 0
    instructions = circuit.instructions
    for i, instr in enumerate(instructions):
        if instr.kind is not InstructionKind.MEASURE:
            continue
        measures += 1
        qubit = instr.qubit_operands[0]
        for later in instructions[i + 1:]:
            if later.kind in executable and qubit in later.qubit_operands:
                nonterminal += 1
                break
    return measures, nonterminal


def reset_metrics(circuit: QuantumCircuit) -> tuple[int, int]:
    """(reset count, resets preceded by a gate or measure on their wire)."""
    seen: set[tuple[str, int]] = set()
    resets = 0
    midcircuit = 0
    for instr in circuit.instructions:
        if instr.kind is InstructionKind.RESET:
            resets += 1
            if instr.qubit_operands[0] in seen:
                midcircuit += 1
        elif instr.kind in (InstructionKind.GATE, InstructionKind.MEASURE):
            seen.update(instr.qubit_operands)
    return resets, midcircuit


def midcircuit_reset_targets(circuit: QuantumCircuit) -> set[tuple[str, int]]:
    seen: set[tuple[str, int]] = set()
    targets: set[tuple[str, int]] = set()
    for instr in circuit.instructions:
        if instr.kind is InstructionKind.RESET:
            if instr.qubit_operands[0] in seen:
                targets.add(instr.qubit_operands[0])
        elif instr.kind in (InstructionKind.GATE, InstructionKind.MEASURE):
            seen.update(instr.qubit_operands)
    return targets


def auxiliary_qubits(
    circuit: QuantumCircuit, name_prefixes: tuple[str, ...] = DEFAULT_AUX_PREFIXES
) -> int:
    """Count qubits that look like scratch space.

    A qubit is auxiliary when it joins a multi-qubit gate without ever
    being measured (while the circuit measures something), when it takes a
    mid-circuit reset, or when its register name carries one of the
    configured prefixes.
    """
    measured: set[tuple[str, int]] = set()
    multi_participants: set[tuple[str, int]] = set()
    for instr in circuit.instructions:
        if instr.kind is InstructionKind.MEASURE:
            measured.add(instr.qubit_operands[0])
        elif instr.kind is InstructionKind.GATE and len(instr.qubit_operands) >= 2:
            multi_participants.update(instr.qubit_operands)

    aux = midcircuit_reset_targets(circuit)
    if measured:
        aux |= multi_participants - measured
    prefixes = tuple(p.lower() for p in name_prefixes)
    for reg, size in circuit.qubit_registers:
        if reg.lower().startswith(prefixes):
            aux.update((reg, i) for i in range(size))
    return len(aux)


def compute_metrics(
    circuit: QuantumCircuit, aux_prefixes: tuple[str, ...] = DEFAULT_AUX_PREFIXES
) -> QuantumMetricSet:
    """Assemble the full measurement set for one circuit."""
    total, single, multi, score = gate_complexity(circuit)
    conditional, cyclomatic = conditional_metrics(circuit)
    measures, nonterminal = measurement_metrics(circuit)
    resets, midcircuit = reset_metrics(circuit)
    return QuantumMetricSet(
        circuit_name=circuit.name,
        path=circuit.source_path,
        width=circuit_width(circuit),
        depth=circuit_depth(circuit),
        gate_count_total=total,
        gate_count_single=single,
        gate_count_multi=multi,
        gate_complexity_score=score,
        conditional_count=conditional,
        quantum_cyclomatic=cyclomatic,
        measure_count=measures,
        nonterminal_measure_count=nonterminal,
        reset_count=resets,
        midcircuit_reset_count=midcircuit,
        auxiliary_qubit_count=auxiliary_qubits(circuit, aux_prefixes),
    )
