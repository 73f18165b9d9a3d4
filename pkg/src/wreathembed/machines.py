"""Two-counter register machines and behaviour enumerations.

Program text format: one instruction per line, blank lines ignored.

    INC r          increment counter r (r is 0 or 1), fall through
    JZDEC r l      if counter r is zero jump to line l, else decrement
                   and fall through (l is a 1-based line number)
    HALT           stop

Execution starts at line 1 with both counters zero and stops on HALT or when
control moves past the last line (a jump target beyond the program also
stops, one step later, when it is dispatched).

Programs are numbered by a bijection with the naturals (including 0): a
program is a list of instruction codes, lists are coded by
``nil = 0``, ``cons(a, rest) = cantor_pair(a, rest) + 1``, and instruction
codes are ``HALT = 0``, ``INC r = 1 + r``, ``JZDEC r l = 3 + 2*(l-1) + r``.

:class:`DovetailEnumeration` interleaves the runs of all programs and emits
two disjoint, duplicate-free streams: programs observed to halt, in order of
first observation, and programs whose configuration sequence is detected to
cycle (a sufficient, machine-checkable divergence certificate; diverging
programs with unboundedly growing counters are never emitted).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

HALT = 0
INC = 1
JZDEC = 2

# An instruction is (op, register, jump_target); unused slots are 0.
Instruction = tuple[int, int, int]
Program = tuple[Instruction, ...]


def parse_program(text: str) -> Program:
    """Parse program text; raises ValueError naming the offending line."""
    out: list[Instruction] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "HALT" and len(parts) == 1:
                out.append((HALT, 0, 0))
            elif parts[0] == "INC" and len(parts) == 2:
                reg = int(parts[1])
                if reg not in (0, 1):
                    raise ValueError
                out.append((INC, reg, 0))
            elif parts[0] == "JZDEC" and len(parts) == 3:
                reg, target = int(parts[1]), int(parts[2])
                if reg not in (0, 1) or target < 1:
                    raise ValueError
                out.append((JZDEC, reg, target))
            else:
                raise ValueError
        except ValueError:
            raise ValueError(f"line {lineno}: bad instruction {line!r}") from None
    return tuple(out)


def program_to_text(program: Program) -> str:
    lines = []
    for op, reg, target in program:
        if op == HALT:
            lines.append("HALT")
        elif op == INC:
            lines.append(f"INC {reg}")
        else:
            lines.append(f"JZDEC {reg} {target}")
    return "\n".join(lines)


def cantor_pair(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


def cantor_unpair(n: int) -> tuple[int, int]:
    w = (math.isqrt(8 * n + 1) - 1) // 2
    b = n - w * (w + 1) // 2
    return w - b, b


def instruction_to_code(ins: Instruction) -> int:
    op, reg, target = ins
    if op == HALT:
        return 0
    if op == INC:
        return 1 + reg
    return 3 + 2 * (target - 1) + reg


def code_to_instruction(code: int) -> Instruction:
    if code == 0:
        return (HALT, 0, 0)
    if code <= 2:
        return (INC, code - 1, 0)
    q = code - 3
    return (JZDEC, q % 2, q // 2 + 1)


def program_to_index(program: Program) -> int:
    n = 0
    for ins in reversed(program):
        n = cantor_pair(instruction_to_code(ins), n) + 1
    return n


def index_to_program(n: int) -> Program:
    out: list[Instruction] = []
    while n > 0:
        code, n = cantor_unpair(n - 1)
        out.append(code_to_instruction(code))
    return tuple(out)


Config = tuple[int, int, int]  # (pc, counter0, counter1); pc is 1-based


def step(program: Program, config: Config) -> Config | None:
    """One dispatch; None means the machine has stopped."""
    pc, c0, c1 = config
    if pc > len(program):
        return None
    op, reg, target = program[pc - 1]
    if op == HALT:
        return None
    if op == INC:
        return (pc + 1, c0 + 1, c1) if reg == 0 else (pc + 1, c0, c1 + 1)
    value = c0 if reg == 0 else c1
    if value == 0:
        return (target, c0, c1)
    if reg == 0:
        return (pc + 1, c0 - 1, c1)
    return (pc + 1, c0, c1 - 1)


def run_status(program: Program, max_steps: int) -> tuple[str, int]:
    """("halt", steps) | ("cycle", steps) | ("running", max_steps).

    Cycles in the configuration sequence are found with Brent's algorithm,
    which needs only one saved configuration.
    """
    config: Config = (1, 0, 0)
    tortoise = config
    power = 1
    lam = 0
    for steps in range(1, max_steps + 1):
        nxt = step(program, config)
        if nxt is None:
            return ("halt", steps)
        config = nxt
        lam += 1
        if config == tortoise:
            return ("cycle", steps)
        if lam == power:
            tortoise = config
            power <<= 1
            lam = 0
    return ("running", max_steps)


@dataclass
class _RunState:
    config: Config
    steps: int = 0
    tortoise: Config = (1, 0, 0)
    power: int = 1
    lam: int = 0


_BASE_BUDGET = 8


@dataclass
class DovetailEnumeration:
    """Fair interleaving of all program runs with geometric budgets.

    Global tick j = (2g+1) * 2**k advances program g until it has executed
    ``8 * 2**k`` total steps or its fate is decided.  Every program is
    visited with unbounded budgets, so every halting program eventually
    lands in ``halted`` and every configuration-cycling program in
    ``cycling``.  Both streams are injective and mutually disjoint; their
    order is a deterministic function of nothing but this schedule.
    """

    halted: list[int] = field(default_factory=list)
    cycling: list[int] = field(default_factory=list)
    _tick: int = 0
    _states: dict[int, _RunState] = field(default_factory=dict)
    _programs: dict[int, Program] = field(default_factory=dict)
    _decided: set[int] = field(default_factory=set)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def _advance_one_tick(self) -> None:
        self._tick += 1
        j = self._tick
        k = (j & -j).bit_length() - 1
        g = ((j >> k) - 1) // 2
        if g in self._decided:
            return
        program = self._programs.get(g)
        if program is None:
            program = index_to_program(g)
            self._programs[g] = program
        st = self._states.get(g)
        if st is None:
            st = _RunState(config=(1, 0, 0))
            self._states[g] = st
        budget = _BASE_BUDGET << k
        while st.steps < budget:
            nxt = step(program, st.config)
            st.steps += 1
            if nxt is None:
                self._decided.add(g)
                del self._states[g]
                self.halted.append(g)
                return
            st.config = nxt
            st.lam += 1
            if st.config == st.tortoise:
                self._decided.add(g)
                del self._states[g]
                self.cycling.append(g)
                return
            if st.lam == st.power:
                st.tortoise = st.config
                st.power <<= 1
                st.lam = 0

    def halting(self, i: int) -> int:
        """The i-th (1-based) program observed to halt."""
        if i < 1:
            raise ValueError("enumeration index must be >= 1")
        with self._lock:
            while len(self.halted) < i:
                self._advance_one_tick()
            return self.halted[i - 1]

    def cycling_at(self, i: int) -> int:
        """The i-th (1-based) program observed to cycle."""
        if i < 1:
            raise ValueError("enumeration index must be >= 1")
        with self._lock:
            while len(self.cycling) < i:
                self._advance_one_tick()
            return self.cycling[i - 1]


_shared: DovetailEnumeration | None = None
_shared_lock = threading.Lock()


def shared_enumeration() -> DovetailEnumeration:
    """Process-wide memoized enumeration; probes share discovered prefixes."""
    global _shared
    with _shared_lock:
        if _shared is None:
            _shared = DovetailEnumeration()
        return _shared
