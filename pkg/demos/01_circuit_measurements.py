"""
    Walk through the quantum side of the analyzer: parse an OpenQASM 2.0
    program into the circuit IR and print every structural measurement
    the model evaluates.

    The teleportation circuit below exercises most of the interesting
    machinery: a barrier (synchronizes wires without occupying a depth
    layer), two classically conditioned corrections (which serialize
    through their condition registers and drive the quantum cyclomatic
    count), and terminal measurements.

    Run:  python3 demos/01_circuit_measurements.py
"""

from hybridlens import compute_metrics, expand_user_gates, parse_qasm

TELEPORT = """\
OPENQASM 2.0;
include "qelib1.inc";
qreg q[3];
creg c0[1];
creg c1[1];
creg c2[1];
u3(0.3,0.2,0.1) q[0];
h q[1];
cx q[1],q[2];
barrier q[0],q[1],q[2];
cx q[0],q[1];
h q[0];
measure q[0] -> c0[0];
measure q[1] -> c1[0];
if(c0==1) z q[2];
if(c1==1) x q[2];
measure q[2] -> c2[0];
"""

circuit = parse_qasm(TELEPORT, "teleport.qasm")
print(f"parsed {circuit.name!r}: {circuit.num_qubits} qubits, "
      f"{circuit.num_clbits} classical bits, {len(circuit.instructions)} instructions")

metrics = compute_metrics(circuit)
print()
print(f"circuit width            {metrics.width}")
print(f"circuit depth            {metrics.depth}")
print(f"gates (total/1q/multi)   {metrics.gate_count_total} / "
      f"{metrics.gate_count_single} / {metrics.gate_count_multi}")
print(f"gate complexity score    {metrics.gate_complexity_score}  (arity-weighted)")
print(f"conditional instructions {metrics.conditional_count}")
print(f"quantum cyclomatic       {metrics.quantum_cyclomatic}")
print(f"measures (nonterminal)   {metrics.measure_count} ({metrics.nonterminal_measure_count})")
print(f"resets (mid-circuit)     {metrics.reset_count} ({metrics.midcircuit_reset_count})")
print(f"auxiliary qubits         {metrics.auxiliary_qubit_count}")

# User-defined gates count as single instructions unless you opt into
# expansion; expansion substitutes bodies recursively.
WRAPPED = """\
OPENQASM 2.0;
include "qelib1.inc";
gate entangle a,b { h a; cx a,b; }
qreg q[2];
creg c[2];
entangle q[0],q[1];
measure q[0] -> c[0];
measure q[1] -> c[1];
"""

wrapped = parse_qasm(WRAPPED, "wrapped.qasm")
expanded = expand_user_gates(wrapped)
print()
print(f"authored gate count  {compute_metrics(wrapped).gate_count_total}")
print(f"expanded gate count  {compute_metrics(expanded).gate_count_total}")
