"""Minimal circuit builder with an SDK-style interface.

Build scripts normally construct circuits with the mainstream SDK; this
builder mirrors the method surface the exporter relies on (`num_qubits`,
`name`, `data`, gate calls by name) so scripts stay runnable in
environments without the SDK installed. Circuits serialize themselves to
OpenQASM 2.0 via `to_qasm2()`.
"""

from __future__ import annotations

from dataclasses import dataclass, field


# gate name -> (parameter count, qubit arity); the qelib1 subset the
# builder exposes as methods.
GATES: dict[str, tuple[int, int]] = {
    "h": (0, 1), "x": (0, 1), "y": (0, 1), "z": (0, 1),
    "s": (0, 1), "sdg": (0, 1), "t": (0, 1), "tdg": (0, 1), "sx": (0, 1),
    "rx": (1, 1), "ry": (1, 1), "rz": (1, 1), "p": (1, 1), "u": (3, 1),
    "cx": (0, 2), "cy": (0, 2), "cz": (0, 2), "ch": (0, 2), "swap": (0, 2),
    "cp": (1, 2), "crz": (1, 2), "cu1": (1, 2),
    "ccx": (0, 3), "cswap": (0, 3),
}


@dataclass(frozen=True)
class Operation:
    name: str  # gate name, or "measure" / "reset" / "barrier"
    qubits: tuple[int, ...]
    clbits: tuple[int, ...] = ()
    params: tuple[float, ...] = ()


@dataclass
class SimpleCircuit:
    """Qubit/clbit register pair plus an ordered operation list."""

    num_qubits: int
    num_clbits: int = 0
    name: str = "circuit"
    data: list[Operation] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError("a circuit needs at least one qubit")

    # -- gate application

    def append(self, name: str, qubits: tuple[int, ...], params: tuple[float, ...] = ()) -> None:
        signature = GATES.get(name)
        if signature is None:
            raise ValueError(f"unknown gate {name!r}")
        n_params, n_qubits = signature
        if len(params) != n_params:
            raise ValueError(f"{name} takes {n_params} parameter(s), got {len(params)}")
        if len(qubits) != n_qubits:
            raise ValueError(f"{name} acts on {n_qubits} qubit(s), got {len(qubits)}")
        for q in qubits:
            self._check_qubit(q)
        self.data.append(Operation(name, qubits, (), params))

    def __getattr__(self, attr: str):
        signature = GATES.get(attr)
        if signature is None:
            raise AttributeError(attr)
        n_params, n_qubits = signature

        def apply(*args: float | int) -> "SimpleCircuit":
            params = tuple(float(a) for a in args[:n_params])
            qubits = tuple(int(a) for a in args[n_params:])
            self.append(attr, qubits, params)
            return self

        return apply

    # -- non-gate operations

    def measure(self, qubit: int, clbit: int) -> "SimpleCircuit":
        self._check_qubit(qubit)
        self._check_clbit(clbit)
        self.data.append(Operation("measure", (qubit,), (clbit,)))
        return self

    def measure_all(self) -> "SimpleCircuit":
        if self.num_clbits < self.num_qubits:
            raise ValueError("measure_all needs one classical bit per qubit")
        for q in range(self.num_qubits):
            self.measure(q, q)
        return self

    def reset(self, qubit: int) -> "SimpleCircuit":
        self._check_qubit(qubit)
        self.data.append(Operation("reset", (qubit,)))
        return self

    def barrier(self, *qubits: int) -> "SimpleCircuit":
        targets = tuple(qubits) if qubits else tuple(range(self.num_qubits))
        for q in targets:
            self._check_qubit(q)
        self.data.append(Operation("barrier", targets))
        return self

    # -- serialization

    def to_qasm2(self) -> str:
        lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{self.num_qubits}];"]
        if self.num_clbits:
            lines.append(f"creg c[{self.num_clbits}];")
        for op in self.data:
            qubits = ",".join(f"q[{q}]" for q in op.qubits)
            if op.name == "measure":
                lines.append(f"measure {qubits} -> c[{op.clbits[0]}];")
            elif op.name == "reset":
                lines.append(f"reset {qubits};")
            elif op.name == "barrier":
                lines.append(f"barrier {qubits};")
            else:
                call = op.name
                if op.params:
                    call += "(" + ",".join(repr(p) for p in op.params) + ")"
                lines.append(f"{call} {qubits};")
        return "\n".join(lines) + "\n"

    # -- bounds

    def _check_qubit(self, q: int) -> None:
        if not 0 <= q < self.num_qubits:
            raise ValueError(f"qubit index {q} out of range for {self.num_qubits} qubits")

    def _check_clbit(self, c: int) -> None:
        if not 0 <= c < self.num_clbits:
            raise ValueError(f"clbit index {c} out of range for {self.num_clbits} bits")
