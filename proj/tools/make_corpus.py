#!/usr/bin/env python3
"""Writes the leveled quotient files for K_n, n = 1, 2, 3, under both involutions."""
import sys
from pathlib import Path


def eta_tilde(n, inv):
    odd = n % 2 == 1
    h = (n - 1) // 2 if odd else n // 2
    if inv == "tau":
        half = {3: -h, 2: -n + 2, 1: h + 2, 0: 2} if odd else {5: -h, 3: n - 1, 2: -n + 1, 1: -h + 1}
    else:
        half = {5: h, 3: -n + 2, 2: n - 2, 1: h - 1} if odd else {3: h - 2, 2: n - 5, 1: -h, 0: -2}
    return {d: c for d, c in half.items() if c != 0}


def write(n, inv, out):
    half = eta_tilde(n, inv)
    top = max(max(half), 1)
    arcs = [f"a{k}" for k in range(2 * top)]
    level = [k if k <= top else 2 * top - k for k in range(2 * top)]
    up = {level[k]: arcs[k] for k in range(top + 1)}
    down = {level[k]: arcs[k] for k in range(top, 2 * top)}
    down[0] = arcs[0]
    lines = [f"# (K_{n}, {inv}): region strand rises through the axis half-plane to level {top} and returns"]
    for k, a in enumerate(arcs):
        lines.append(f"arc {a} level {level[k]}" if k % 2 == 0 or k == 0 else f"arc {a}")
    for k, a in enumerate(arcs):
        j = level[(k + 1) % len(arcs)] - level[k]
        lines.append(f"jump {a} {j:+d}" if j else f"jump {a} 0")
    for d in sorted(half):
        c = half[d]
        s = "+" if c > 0 else "-"
        for _ in range(abs(c)):
            if d == 0:
                lines.append(f"crossing {s} over {up[1]} under {down[1]}")
            else:
                lines.append(f"crossing {s} over {up[d]} under {arcs[0]}")
                lines.append(f"crossing {s} over {arcs[0]} under {down[d]}")
    if n == 3:
        # a cancelling pair that leaves the tally unchanged
        lines.append(f"crossing + over {up[1]} under {down[top]}")
        lines.append(f"crossing - over {down[1]} under {up[top]}")
    (out / f"K{n}_{inv}.lvq").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    out.mkdir(exist_ok=True)
    for n in (1, 2, 3):
        for inv in ("tau", "sigma"):
            write(n, inv, out)
