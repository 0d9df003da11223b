"""Regenerate src/ramsey_abbott/_irreducible.py.

Usage: python tools/gen_irreducible.py [max_degree]
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
from ramsey_abbott.gf2 import smallest_irreducible  # noqa: E402

MAX_R = int(sys.argv[1]) if len(sys.argv) > 1 else 1024

lines = [
    '"""Frozen table: degree r -> smallest irreducible polynomial over GF(2).',
    "",
    "Generated by tools/gen_irreducible.py. Do not edit; seeds depend on it.",
    '"""',
    "",
    f"MAX_R = {MAX_R}",
    "",
    "IRREDUCIBLE = {",
]
for r in range(1, MAX_R + 1):
    f = smallest_irreducible(r)
    low = f ^ (1 << r)
    lines.append(f"    {r}: (1 << {r}) | {low:#x},")
lines.append("}")
out = Path(__file__).resolve().parents[1] / "src" / "ramsey_abbott" / "_irreducible.py"
out.write_text("\n".join(lines) + "\n")
print(f"wrote {out} (r <= {MAX_R})")
