"""Regenerate src/irrlat/data/irreducibles.json from the sum-formula oracle.

Usage: PYTHONPATH=src:tests python3 tools/gen_irreducibles.py

Only restricted weights outside the closure of the lowest alcove and not
minuscule are stored; everything else is a Weyl character and needs no
table. Weights the oracle cannot settle are taken from LITERATURE below and
must fall inside the oracle's bounds (tests/test_irreducible_table.py).
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from irrlat.charalg.rootsys import root_system
from oracles.jantzen import irreducible

OUT = Path(__file__).resolve().parents[1] / "src" / "irrlat" / "data" / "irreducibles.json"

# (type, primes, max Weyl dimension stored)
PLAN = [
    ("A2", (2, 3, 5, 7), 10**6),
    ("A3", (2, 3, 5), 300),
    ("A4", (2, 3), 300),
    ("A5", (2, 3), 300),
    ("B2", (2, 3, 5, 7), 300),
    ("B3", (2, 3, 5), 300),
    ("B4", (2, 3), 300),
    ("C3", (2, 3, 5), 300),
    ("C4", (2, 3), 300),
    ("D4", (2, 3), 300),
    ("G2", (2, 3, 5, 7, 11, 13), 300),
]

# Dominant weight multiplicities for weights where a coefficient of the
# sum formula exceeds one at p = 2. Values from F. Luebeck, "Small degree
# representations of finite Chevalley groups in defining characteristic",
# LMS J. Comput. Math. 4 (2001); each is the Weyl module minus the trivial
# weight multiplicities it loses.
LITERATURE = {
    # so7 adjoint: 21 - 1 (centre) - 6 (the natural module L(100))
    ("B3", 2, (0, 1, 0)): {(0, 1, 0): 1, (1, 0, 0): 0, (0, 0, 0): 2},
    # sp8 wedge-square: 27 - 1
    ("C4", 2, (0, 1, 0, 0)): {(0, 1, 0, 0): 1, (0, 0, 0, 0): 2},
    # half of the 42: the spin module of the isogenous B4
    ("C4", 2, (0, 0, 0, 1)): {(0, 0, 0, 1): 1},
    # so8 adjoint modulo its 2-dimensional centre
    ("D4", 2, (0, 1, 0, 0)): {(0, 1, 0, 0): 1, (0, 0, 0, 0): 2},
    # sl4 adjoint modulo scalars
    ("A3", 2, (1, 0, 1)): {(1, 0, 1): 1, (0, 0, 0): 2},
}


def main() -> None:
    rows = []
    for name, primes, cap in PLAN:
        R = root_system(name)
        for p in primes:
            for lam in itertools.product(range(p), repeat=R.rank):
                if not any(lam) or R.is_minuscule(lam):
                    continue
                if R.max_coroot_pairing(lam) <= p:
                    continue
                if R.weyl_dim(lam) > cap:
                    continue
                key = (name, p, lam)
                if key in LITERATURE:
                    dom = {w: m for w, m in LITERATURE[key].items() if m}
                    source = "literature"
                else:
                    got = irreducible(name, lam, p)
                    if got is None:
                        print("unresolved", name, p, lam)
                        continue
                    dom = dict(got)
                    source = "sum-formula"
                rows.append(
                    {
                        "type": name,
                        "p": p,
                        "weight": list(lam),
                        "source": source,
                        "dominant": [[list(w), m] for w, m in sorted(dom.items(), reverse=True)],
                    }
                )
    OUT.write_text(json.dumps(rows, indent=None, separators=(",", ":")).replace("},{", "},\n{") + "\n")
    print(len(rows), "rows written to", OUT)


if __name__ == "__main__":
    main()
