#!/usr/bin/env python3
"""Semi-deciding membership in a halting set through group triviality."""

# A two-counter register machine program either halts, provably cycles, or
# grows forever.  Numbering all programs gives a genuinely undecidable set
# (the halting indices), and the merge construction turns the question
# "does program g halt?" into "is this two-letter group word trivial?" —
# semi-decidable by feeding relators to the word problem as fuel.

from wreathembed import machines, reductions
from wreathembed.base_groups import halting_pair

# First, the machines themselves.
countdown = machines.parse_program("INC 0\nINC 0\nINC 0\nJZDEC 0 6\nJZDEC 1 4")
print("countdown program:", machines.run_status(countdown, 1000))

selfloop = machines.parse_program("JZDEC 0 1")
print("self-loop program:", machines.run_status(selfloop, 1000))
print("self-loop number :", machines.program_to_index(selfloop))
print()

# The dovetailed enumeration discovers halting programs in a fixed order.
enum = machines.shared_enumeration()
print("first halting program numbers:", [enum.halting(i) for i in range(1, 9)])
print("first cycling program numbers:", [enum.cycling_at(i) for i in range(1, 9)])
print()

# Probe a few program numbers.  "trivial" certifies halting; "unknown"
# means the fuel ran out — for a cycling program it always will.
pair = halting_pair()
for g in (1, 2, 7, 11):
    status = machines.run_status(machines.index_to_program(g), 100_000)[0]
    verdict = reductions.merge_probe(g, pair.enum_n, fuel=5_000)
    answer = "trivial" if verdict.trivial else "unknown"
    print(f"program {g}: simulated={status:5}  probe={answer}")
print()

# Fuel is monotone: once certified, more fuel never retracts an answer.
v1 = reductions.merge_probe(1, pair.enum_n, fuel=1_000)
v2 = reductions.merge_probe(1, pair.enum_n, fuel=2_000)
print("program 1 at fuel 1000:", "trivial" if v1.trivial else "unknown")
print("program 1 at fuel 2000:", "trivial" if v2.trivial else "unknown")
