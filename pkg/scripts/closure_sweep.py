"""Randomized sweep: products of face elements stay in k[Q] and decompose round-trips.

Reports, per model and field, how many products were checked and how many
decompositions the membership oracle confirmed.
"""

import argparse
import random

from topfacering.errors import NotInFaceRing
from topfacering.facering import decompose, multiply, perturb, random_face_element, random_member
from topfacering.models import BUILTINS, build_builtin
from topfacering.oracle import naive_membership


def sweep(name: str, characteristic: int | None, trials: int, seed: int) -> tuple[int, int, int]:
    C = build_builtin(name, characteristic).complex
    rng = random.Random(seed)
    closed = agree = 0
    for _ in range(trials):
        _, a = random_face_element(C, rng)
        _, b = random_face_element(C, rng)
        prod = multiply(C, a, b)
        if decompose(C, prod).reconstruct() == prod:
            closed += 1
        x = random_member(C, rng)
        if rng.random() < 0.5:
            x = perturb(C, x, rng)
        try:
            decompose(C, x)
            fast = True
        except NotInFaceRing:
            fast = False
        agree += naive_membership(C, x).member == fast
    return trials, closed, agree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for name in BUILTINS:
        for p in (None, 2, 3):
            if name == "rp2-no-boundary" and p not in (None, 2):
                continue
            n, closed, agree = sweep(name, p, args.trials, args.seed)
            label = "default" if p is None else f"GF({p})"
            print(f"{name:18s} {label:8s} products closed {closed}/{n}  oracle agreement {agree}/{n}")


if __name__ == "__main__":
    main()
