"""Regenerate src/tracecodes/data/conway.txt by exhaustive Conway search.

Usage: python scripts/gen_conway.py [out_path]
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

from tracecodes.gf import conway_search, divisors

# (p, max degree); covers every field used by the presets and tests
RANGES = {2: 16, 3: 10, 5: 6, 7: 6, 11: 4, 13: 4}


def main(out: Path) -> None:
    known: dict[tuple[int, int], tuple[int, ...]] = {}
    lines = [
        "# Conway polynomials: p m c_0 c_1 ... c_m (low to high, monic)",
        "# generated by scripts/gen_conway.py",
    ]
    for p, top in RANGES.items():
        for m in range(1, top + 1):
            t0 = time.time()
            assert all((p, d) in known for d in divisors(m) if d < m)
            known[(p, m)] = conway_search(p, m, known)
            lines.append(" ".join(map(str, (p, m) + known[(p, m)])))
            print(f"({p}, {m}) {known[(p, m)]}  {time.time() - t0:.2f}s", file=sys.stderr)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parents[1] / "src/tracecodes/data/conway.txt")
