"""OpenQASM 2.0 frontend: lexer, recursive-descent parser, and the circuit IR.

The parser accepts the 2.0 dialect emitted by mainstream SDK exporters.
`include "qelib1.inc"` is recognized by name and brings the standard gate
set into scope without touching the filesystem. Gate parameter expressions
are validated and then discarded; no downstream measurement depends on
angle values. Register-wide operands (`h q;`, `measure q -> c;`) are
expanded into per-bit instructions so every instruction carries concrete
(register, index) operands.
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import PurePath
from typing import NamedTuple, Optional


# ---------------------------------------------------------------------------
# Errors


@dataclass(frozen=True)
class SourceSpan:
    """1-based position of a statement in its source file."""

    line: int
    column: int


class QasmError(Exception):
    """Base class for circuit-frontend failures."""

    def __init__(self, message: str, span: SourceSpan | None = None, path: str = "") -> None:
        self.message = message
        self.span = span
        self.path = path
        where = path or "<qasm>"
        if span is not None:
            where = f"{where}:{span.line}:{span.column}"
        super().__init__(f"{where}: {message}")


class QasmSyntaxError(QasmError):
    pass


class UnsupportedVersionError(QasmError):
    pass


class UndefinedSymbolError(QasmError):
    pass


class IndexOutOfRangeError(QasmError):
    pass


class GateRecursionError(QasmError):
    pass


# ---------------------------------------------------------------------------
# IR types


class InstructionKind(Enum):
    GATE = "gate"
    MEASURE = "measure"
    RESET = "reset"
    BARRIER = "barrier"


@dataclass(frozen=True)
class Instruction:
    """One executable operation with fully resolved (register, index) operands."""

    kind: InstructionKind
    gate_name: Optional[str]
    qubit_operands: tuple[tuple[str, int], ...]
    clbit_operands: tuple[tuple[str, int], ...] = ()
    condition: Optional[tuple[str, int]] = None
    span: SourceSpan = SourceSpan(1, 1)
    param_count: int = 0


@dataclass(frozen=True)
class GateBodyOp:
    """Operation inside a gate definition; qubit args are formal names."""

    kind: InstructionKind
    name: Optional[str]
    qubit_args: tuple[str, ...]
    param_count: int
    span: SourceSpan


@dataclass(frozen=True)
class GateDef:
    """User gate definition. body is None for opaque declarations."""

    name: str
    params: tuple[str, ...]
    qargs: tuple[str, ...]
    body: Optional[tuple[GateBodyOp, ...]]


@dataclass
class QuantumCircuit:
    """Parsed circuit: registers plus instructions in source order."""

    name: str
    num_qubits: int
    num_clbits: int
    qubit_registers: list[tuple[str, int]]
    clbit_registers: list[tuple[str, int]]
    instructions: list[Instruction]
    source_path: str = ""
    gate_defs: dict[str, GateDef] = field(default_factory=dict, repr=False, compare=False)


# ---------------------------------------------------------------------------
# Gate tables

# Gates defined by the language itself, available without any include.
CORE_GATES: dict[str, tuple[int, int]] = {"U": (3, 1), "CX": (0, 2)}

# name -> (parameter count, qubit arity); brought into scope by qelib1.inc.
QELIB1_GATES: dict[str, tuple[int, int]] = {
    "u3": (3, 1), "u2": (2, 1), "u1": (1, 1), "cx": (0, 2), "id": (0, 1),
    "u0": (1, 1), "u": (3, 1), "p": (1, 1), "x": (0, 1), "y": (0, 1),
    "z": (0, 1), "h": (0, 1), "s": (0, 1), "sdg": (0, 1), "t": (0, 1),
    "tdg": (0, 1), "rx": (1, 1), "ry": (1, 1), "rz": (1, 1), "sx": (0, 1),
    "sxdg": (0, 1), "cz": (0, 2), "cy": (0, 2), "swap": (0, 2), "ch": (0, 2),
    "ccx": (0, 3), "cswap": (0, 3), "crx": (1, 2), "cry": (1, 2),
    "crz": (1, 2), "cu1": (1, 2), "cp": (1, 2), "cu3": (3, 2), "csx": (0, 2),
    "cu": (4, 2), "rxx": (1, 2), "rzz": (1, 2), "rccx": (0, 3),
    "rc3x": (0, 4), "c3x": (0, 4), "c3sx": (0, 4), "c4x": (0, 5),
}

_UNARY_FUNCS = frozenset({"sin", "cos", "tan", "exp", "ln", "sqrt"})


# ---------------------------------------------------------------------------
# Lexer


class Token(NamedTuple):
    kind: str  # id | int | real | string | arrow | eq | sym | eof
    text: str
    line: int
    column: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.line, self.column)


_TOKEN_RE = re.compile(
    r"""(?P<ws>[ \t\r]+)
      | (?P<comment>//[^\n]*)
      | (?P<newline>\n)
      | (?P<real>(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)
      | (?P<int>\d+)
      | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<string>"[^"\n]*")
      | (?P<arrow>->)
      | (?P<eq>==)
      | (?P<sym>[;,()\[\]{}+\-*/^])
    """,
    re.VERBOSE,
)


def _lex(text: str, path: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            col = pos - line_start + 1
            raise QasmSyntaxError(f"unexpected character {text[pos]!r}", SourceSpan(line, col), path)
        kind = m.lastgroup
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            assert kind is not None
            tokens.append(Token(kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, tokens: list[Token], path: str) -> None:
        self.tokens = tokens
        self.pos = 0
        self.path = path
        self.qregs: dict[str, int] = {}
        self.cregs: dict[str, int] = {}
        self.gates: dict[str, tuple[int, int]] = dict(CORE_GATES)
        self.gate_defs: dict[str, GateDef] = {}
        self.instructions: list[Instruction] = []

    # -- token helpers

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        tok = self.peek()
        if tok.kind == kind and (text is None or tok.text == text):
            return self.advance()
        return None

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> Token:
        tok = self.accept(kind, text)
        if tok is None:
            expected = what or (text if text is not None else kind)
            found = self.peek().text or "end of input"
            raise QasmSyntaxError(f"expected {expected}, found {found!r}", self.peek().span, self.path)
        return tok

    # -- entry point

    def parse_program(self, source_path: str) -> QuantumCircuit:
        self._parse_header()
        while self.peek().kind != "eof":
            self._parse_statement()
        name = PurePath(source_path).stem if source_path not in ("", "<qasm>") else "circuit"
        return QuantumCircuit(
            name=name or "circuit",
            num_qubits=sum(size for _, size in self.qregs.items()),
            num_clbits=sum(size for _, size in self.cregs.items()),
            qubit_registers=list(self.qregs.items()),
            clbit_registers=list(self.cregs.items()),
            instructions=self.instructions,
            source_path=source_path,
            gate_defs=self.gate_defs,
        )

    def _parse_header(self) -> None:
        tok = self.peek()
        if not (tok.kind == "id" and tok.text == "OPENQASM"):
            raise UnsupportedVersionError("missing 'OPENQASM 2.0' header", tok.span, self.path)
        self.advance()
        version = self.peek()
        if version.kind not in ("real", "int"):
            raise UnsupportedVersionError("malformed version in OPENQASM header", version.span, self.path)
        self.advance()
        if version.text != "2.0":
            raise UnsupportedVersionError(f"unsupported OpenQASM version {version.text}", version.span, self.path)
        self.expect("sym", ";")

    # -- statements

    def _parse_statement(self) -> None:
        tok = self.peek()
        if tok.kind != "id":
            raise QasmSyntaxError(f"expected statement, found {tok.text!r}", tok.span, self.path)
        if tok.text == "include":
            self._parse_include()
        elif tok.text in ("qreg", "creg"):
            self._parse_reg_decl()
        elif tok.text == "gate":
            self._parse_gate_def()
        elif tok.text == "opaque":
            self._parse_opaque()
        elif tok.text == "barrier":
            self._parse_barrier()
        elif tok.text == "if":
            self._parse_if()
        elif tok.text == "measure":
            self.advance()
            self._parse_measure(tok.span, None)
        elif tok.text == "reset":
            self.advance()
            self._parse_reset(tok.span, None)
        else:
            self.advance()
            self._parse_gate_call(tok, None)

    def _parse_include(self) -> None:
        self.advance()
        target = self.expect("string", what="include file name")
        if target.text.strip('"') == "qelib1.inc":
            self.gates.update(QELIB1_GATES)
        # Other includes are accepted but not resolved; symbols they would
        # define surface as UndefinedSymbolError at the point of use.
        self.expect("sym", ";")

    def _parse_reg_decl(self) -> None:
        kw = self.advance()
        name = self.expect("id", what="register name")
        if name.text in self.qregs or name.text in self.cregs:
            raise QasmSyntaxError(f"register {name.text!r} already defined", name.span, self.path)
        self.expect("sym", "[")
        size_tok = self.expect("int", what="register size")
        size = int(size_tok.text)
        if size < 1:
            raise QasmSyntaxError("register size must be positive", size_tok.span, self.path)
        self.expect("sym", "]")
        self.expect("sym", ";")
        if kw.text == "qreg":
            self.qregs[name.text] = size
        else:
            self.cregs[name.text] = size

    def _parse_if(self) -> None:
        if_tok = self.advance()
        self.expect("sym", "(")
        creg = self.expect("id", what="classical register name")
        if creg.text not in self.cregs:
            raise UndefinedSymbolError(f"undefined classical register {creg.text!r}", creg.span, self.path)
        self.expect("eq")
        value = self.expect("int", what="comparison value")
        self.expect("sym", ")")
        condition = (creg.text, int(value.text))
        inner = self.peek()
        if inner.kind != "id":
            raise QasmSyntaxError(f"expected conditioned operation, found {inner.text!r}", inner.span, self.path)
        if inner.text == "measure":
            self.advance()
            self._parse_measure(if_tok.span, condition)
        elif inner.text == "reset":
            self.advance()
            self._parse_reset(if_tok.span, condition)
        elif inner.text in ("barrier", "if", "gate", "opaque", "qreg", "creg", "include"):
            raise QasmSyntaxError(f"{inner.text!r} cannot be conditioned", inner.span, self.path)
        else:
            self.advance()
            self._parse_gate_call(inner, condition, span=if_tok.span)

    def _parse_barrier(self) -> None:
        tok = self.advance()
        args = self._parse_argument_list()
        self.expect("sym", ";")
        qubits: list[tuple[str, int]] = []
        for reg, idx, span in args:
            qubits.extend(self._resolve_qubits(reg, idx, span))
        self.instructions.append(
            Instruction(InstructionKind.BARRIER, None, tuple(qubits), (), None, tok.span)
        )

    def _parse_measure(self, span: SourceSpan, condition: Optional[tuple[str, int]]) -> None:
        qreg, qidx, qspan = self._parse_argument()
        self.expect("arrow")
        creg, cidx, cspan = self._parse_argument()
        self.expect("sym", ";")
        qubits = self._resolve_qubits(qreg, qidx, qspan)
        clbits = self._resolve_clbits(creg, cidx, cspan)
        if len(qubits) != len(clbits):
            raise QasmSyntaxError(
                f"measure operand sizes differ ({len(qubits)} qubits vs {len(clbits)} bits)",
                qspan,
                self.path,
            )
        for qubit, clbit in zip(qubits, clbits):
            self.instructions.append(
                Instruction(InstructionKind.MEASURE, None, (qubit,), (clbit,), condition, span)
            )

    def _parse_reset(self, span: SourceSpan, condition: Optional[tuple[str, int]]) -> None:
        reg, idx, rspan = self._parse_argument()
        self.expect("sym", ";")
        for qubit in self._resolve_qubits(reg, idx, rspan):
            self.instructions.append(
                Instruction(InstructionKind.RESET, None, (qubit,), (), condition, span)
            )

    def _parse_gate_call(
        self,
        name_tok: Token,
        condition: Optional[tuple[str, int]],
        span: SourceSpan | None = None,
    ) -> None:
        name = name_tok.text
        arity = self.gates.get(name)
        if arity is None:
            raise UndefinedSymbolError(f"undefined gate {name!r}", name_tok.span, self.path)
        n_params, n_qubits = arity
        param_count = self._parse_call_params(frozenset())
        if param_count != n_params:
            raise QasmSyntaxError(
                f"gate {name!r} expects {n_params} parameter(s), got {param_count}",
                name_tok.span,
                self.path,
            )
        args = self._parse_argument_list()
        self.expect("sym", ";")
        if len(args) != n_qubits:
            raise QasmSyntaxError(
                f"gate {name!r} expects {n_qubits} qubit argument(s), got {len(args)}",
                name_tok.span,
                self.path,
            )
        resolved = [self._resolve_qubits(reg, idx, aspan) for reg, idx, aspan in args]
        width = 1
        for (reg, idx, aspan), operand_group in zip(args, resolved):
            if idx is None:
                if width == 1:
                    width = len(operand_group)
                elif len(operand_group) != width:
                    raise QasmSyntaxError(
                        f"mismatched register sizes in broadcast call of {name!r}",
                        aspan,
                        self.path,
                    )
        for k in range(width):
            operands = tuple(group[0] if len(group) == 1 else group[k] for group in resolved)
            self.instructions.append(
                Instruction(
                    InstructionKind.GATE,
                    name,
                    operands,
                    (),
                    condition,
                    span or name_tok.span,
                    param_count,
                )
            )

    def _parse_call_params(self, allowed_ids: frozenset[str]) -> int:
        if not self.accept("sym", "("):
            return 0
        if self.accept("sym", ")"):
            return 0
        count = 0
        while True:
            self._parse_expr(allowed_ids)
            count += 1
            if self.accept("sym", ")"):
                return count
            self.expect("sym", ",")

    # -- gate definitions

    def _parse_gate_def(self) -> None:
        self.advance()
        name = self.expect("id", what="gate name")
        if name.text in self.gates:
            raise QasmSyntaxError(f"gate {name.text!r} already defined", name.span, self.path)
        params = self._parse_formal_params()
        qargs = self._parse_formal_qargs(terminator="{")
        self.expect("sym", "{")
        # A gate may reference itself; expansion guards against the cycle.
        local_gates = dict(self.gates)
        local_gates[name.text] = (len(params), len(qargs))
        body: list[GateBodyOp] = []
        qarg_set = frozenset(qargs)
        param_set = frozenset(params)
        while not self.accept("sym", "}"):
            tok = self.peek()
            if tok.kind != "id":
                raise QasmSyntaxError(f"expected gate body operation, found {tok.text!r}", tok.span, self.path)
            if tok.text == "barrier":
                self.advance()
                names = self._parse_formal_qargs(terminator=";")
                self.expect("sym", ";")
                self._check_formals(names, qarg_set)
                body.append(GateBodyOp(InstructionKind.BARRIER, None, names, 0, tok.span))
                continue
            self.advance()
            op_arity = local_gates.get(tok.text)
            if op_arity is None:
                raise UndefinedSymbolError(f"undefined gate {tok.text!r}", tok.span, self.path)
            op_params, op_qubits = op_arity
            got_params = self._parse_call_params(param_set)
            if got_params != op_params:
                raise QasmSyntaxError(
                    f"gate {tok.text!r} expects {op_params} parameter(s), got {got_params}",
                    tok.span,
                    self.path,
                )
            names = self._parse_formal_qargs(terminator=";")
            self.expect("sym", ";")
            self._check_formals(names, qarg_set)
            if len(names) != op_qubits:
                raise QasmSyntaxError(
                    f"gate {tok.text!r} expects {op_qubits} qubit argument(s), got {len(names)}",
                    tok.span,
                    self.path,
                )
            body.append(GateBodyOp(InstructionKind.GATE, tok.text, names, got_params, tok.span))
        self.gates[name.text] = (len(params), len(qargs))
        self.gate_defs[name.text] = GateDef(name.text, params, qargs, tuple(body))

    def _parse_opaque(self) -> None:
        self.advance()
        name = self.expect("id", what="gate name")
        if name.text in self.gates:
            raise QasmSyntaxError(f"gate {name.text!r} already defined", name.span, self.path)
        params = self._parse_formal_params()
        qargs = self._parse_formal_qargs(terminator=";")
        self.expect("sym", ";")
        self.gates[name.text] = (len(params), len(qargs))
        self.gate_defs[name.text] = GateDef(name.text, params, qargs, None)

    def _parse_formal_params(self) -> tuple[str, ...]:
        if not self.accept("sym", "("):
            return ()
        if self.accept("sym", ")"):
            return ()
        names = [self.expect("id", what="parameter name").text]
        while self.accept("sym", ","):
            names.append(self.expect("id", what="parameter name").text)
        self.expect("sym", ")")
        return tuple(names)

    def _parse_formal_qargs(self, terminator: str) -> tuple[str, ...]:
        names = [self.expect("id", what="qubit argument name")]
        while self.accept("sym", ","):
            names.append(self.expect("id", what="qubit argument name"))
        nxt = self.peek()
        if nxt.kind == "sym" and nxt.text == "[":
            raise QasmSyntaxError("indexing is not allowed inside gate bodies", nxt.span, self.path)
        if not (nxt.kind == "sym" and nxt.text == terminator):
            raise QasmSyntaxError(f"expected {terminator!r}, found {nxt.text!r}", nxt.span, self.path)
        return tuple(tok.text for tok in names)

    def _check_formals(self, names: tuple[str, ...], declared: frozenset[str]) -> None:
        for n in names:
            if n not in declared:
                raise UndefinedSymbolError(f"undefined gate argument {n!r}", self.peek().span, self.path)

    # -- operands

    def _parse_argument(self) -> tuple[str, Optional[int], SourceSpan]:
        name = self.expect("id", what="register reference")
        if self.accept("sym", "["):
            idx = self.expect("int", what="operand index")
            self.expect("sym", "]")
            return name.text, int(idx.text), name.span
        return name.text, None, name.span

    def _parse_argument_list(self) -> list[tuple[str, Optional[int], SourceSpan]]:
        args = [self._parse_argument()]
        while self.accept("sym", ","):
            args.append(self._parse_argument())
        return args

    def _resolve_qubits(self, reg: str, idx: Optional[int], span: SourceSpan) -> list[tuple[str, int]]:
        size = self.qregs.get(reg)
        if size is None:
            raise UndefinedSymbolError(f"undefined quantum register {reg!r}", span, self.path)
        return self._resolve_indices(reg, size, idx, span)

    def _resolve_clbits(self, reg: str, idx: Optional[int], span: SourceSpan) -> list[tuple[str, int]]:
        size = self.cregs.get(reg)
        if size is None:
            raise UndefinedSymbolError(f"undefined classical register {reg!r}", span, self.path)
        return self._resolve_indices(reg, size, idx, span)

    def _resolve_indices(
        self, reg: str, size: int, idx: Optional[int], span: SourceSpan
    ) -> list[tuple[str, int]]:
        if idx is None:
            return [(reg, i) for i in range(size)]
        if idx >= size:
            raise IndexOutOfRangeError(
                f"index {idx} out of range for register {reg!r} of size {size}", span, self.path
            )
        return [(reg, idx)]

    # -- parameter expressions (validated, then discarded)

    def _parse_expr(self, allowed_ids: frozenset[str]) -> None:
        self._parse_term(allowed_ids)
        while self.peek().kind == "sym" and self.peek().text in "+-":
            self.advance()
            self._parse_term(allowed_ids)

    def _parse_term(self, allowed_ids: frozenset[str]) -> None:
        self._parse_factor(allowed_ids)
        while self.peek().kind == "sym" and self.peek().text in "*/":
            self.advance()
            self._parse_factor(allowed_ids)

    def _parse_factor(self, allowed_ids: frozenset[str]) -> None:
        if self.accept("sym", "-"):
            self._parse_factor(allowed_ids)
            return
        self._parse_atom(allowed_ids)
        if self.accept("sym", "^"):
            self._parse_factor(allowed_ids)

    def _parse_atom(self, allowed_ids: frozenset[str]) -> None:
        tok = self.peek()
        if tok.kind in ("int", "real"):
            self.advance()
            return
        if tok.kind == "sym" and tok.text == "(":
            self.advance()
            self._parse_expr(allowed_ids)
            self.expect("sym", ")")
            return
        if tok.kind == "id":
            if tok.text == "pi" or tok.text in allowed_ids:
                self.advance()
                return
            if tok.text in _UNARY_FUNCS:
                self.advance()
                self.expect("sym", "(")
                self._parse_expr(allowed_ids)
                self.expect("sym", ")")
                return
            raise UndefinedSymbolError(f"undefined parameter {tok.text!r}", tok.span, self.path)
        raise QasmSyntaxError(f"expected parameter expression, found {tok.text!r}", tok.span, self.path)


# ---------------------------------------------------------------------------
# Public operations


def parse_qasm(text: str, path: str = "<qasm>") -> QuantumCircuit:
    """Parse OpenQASM 2.0 source into a QuantumCircuit.

    Raises UnsupportedVersionError for anything but a 2.0 header,
    QasmSyntaxError / UndefinedSymbolError / IndexOutOfRangeError with the
    offending source span otherwise. `path` is used for labeling only.
    """
    tokens = _lex(text, path)
    return _Parser(tokens, path).parse_program(path)


def expand_user_gates(
    circuit: QuantumCircuit,
    definitions: dict[str, GateDef] | None = None,
    max_depth: int = 32,
) -> QuantumCircuit:
    """Replace user-defined gate calls by their bodies, recursively.

    Opaque gates and builtins pass through unchanged. Conditions on a call
    propagate to every expanded instruction. Raises GateRecursionError for
    self-referential definitions or nesting beyond `max_depth` levels.
    """
    defs = circuit.gate_defs if definitions is None else definitions
    out: list[Instruction] = []
    for instr in circuit.instructions:
        _expand_into(instr, defs, out, 0, max_depth)
    return dataclasses.replace(circuit, instructions=out)


def _expand_into(
    instr: Instruction,
    defs: dict[str, GateDef],
    out: list[Instruction],
    depth: int,
    max_depth: int,
) -> None:
    gdef = defs.get(instr.gate_name) if instr.kind is InstructionKind.GATE and instr.gate_name else None
    if gdef is None or gdef.body is None:
        out.append(instr)
        return
    if depth >= max_depth:
        raise GateRecursionError(
            f"gate expansion exceeded {max_depth} levels at {instr.gate_name!r}", instr.span
        )
    binding = dict(zip(gdef.qargs, instr.qubit_operands))
    for op in gdef.body:
        operands = tuple(binding[a] for a in op.qubit_args)
        if op.kind is InstructionKind.BARRIER:
            out.append(Instruction(InstructionKind.BARRIER, None, operands, (), None, instr.span))
        else:
            call = Instruction(
                InstructionKind.GATE, op.name, operands, (), instr.condition, instr.span, op.param_count
            )
            _expand_into(call, defs, out, depth + 1, max_depth)


def to_qasm(circuit: QuantumCircuit) -> str:
    """Serialize a circuit back to OpenQASM 2.0 text.

    Parameter values were discarded at parse time, so parameterized calls
    are printed with zero placeholders; every metric is insensitive to the
    substitution and a reparse yields structurally equivalent instructions.
    """
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";']
    for gdef in circuit.gate_defs.values():
        header = gdef.name
        if gdef.params:
            header += "(" + ",".join(gdef.params) + ")"
        header += " " + ",".join(gdef.qargs)
        if gdef.body is None:
            lines.append(f"opaque {header};")
            continue
        lines.append(f"gate {header} {{")
        for op in gdef.body:
            if op.kind is InstructionKind.BARRIER:
                lines.append(f"  barrier {','.join(op.qubit_args)};")
            else:
                lines.append(f"  {_call_text(op.name, op.param_count, op.qubit_args)};")
        lines.append("}")
    for name, size in circuit.qubit_registers:
        lines.append(f"qreg {name}[{size}];")
    for name, size in circuit.clbit_registers:
        lines.append(f"creg {name}[{size}];")
    for instr in circuit.instructions:
        prefix = ""
        if instr.condition is not None:
            creg, value = instr.condition
            prefix = f"if({creg}=={value}) "
        operands = ",".join(f"{reg}[{idx}]" for reg, idx in instr.qubit_operands)
        if instr.kind is InstructionKind.GATE:
            assert instr.gate_name is not None
            ops = [f"{reg}[{idx}]" for reg, idx in instr.qubit_operands]
            lines.append(prefix + _call_text(instr.gate_name, instr.param_count, ops) + ";")
        elif instr.kind is InstructionKind.MEASURE:
            creg, cidx = instr.clbit_operands[0]
            lines.append(f"{prefix}measure {operands} -> {creg}[{cidx}];")
        elif instr.kind is InstructionKind.RESET:
            lines.append(f"{prefix}reset {operands};")
        else:
            lines.append(f"barrier {operands};")
    return "\n".join(lines) + "\n"


def _call_text(name: str | None, param_count: int, args: tuple[str, ...] | list[str]) -> str:
    text = name or ""
    if param_count:
        text += "(" + ",".join(["0"] * param_count) + ")"
    return text + " " + ",".join(args)
