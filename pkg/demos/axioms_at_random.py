"""Randomized spot checks of the operad laws.

Each row draws fresh random terms and multilinear maps and verifies one
law by exact equality. The same table is available from the command
line: ``operads axioms --preset lie --cases 200 --seed 7``.
"""

from operads.laws import run_suite
from operads.presets import get_preset

for name in ("lie", "com", "as"):
    print(f"preset {name}:")
    for row in run_suite(get_preset(name), cases=150, seed=7):
        state = "PASS" if row.ok else f"FAIL ({row.failures}/{row.cases})"
        print(f"  {row.law:14} {state}")
