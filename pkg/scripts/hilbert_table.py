"""Print closed-form and brute-force Hilbert functions for every builtin model."""

import argparse
import time

from topfacering.errors import FaceRingError
from topfacering.facering import hilbert
from topfacering.models import BUILTINS, build_builtin
from topfacering.oracle import brute_basis_hilbert, sr_hilbert


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=12)
    args = ap.parse_args()
    for name in BUILTINS:
        C = build_builtin(name).complex
        t0 = time.perf_counter()
        fast = hilbert(C, args.max_degree)
        t1 = time.perf_counter()
        brute = brute_basis_hilbert(C, args.max_degree)
        t2 = time.perf_counter()
        try:
            sr = " ".join(map(str, sr_hilbert(C, args.max_degree)))
        except FaceRingError as e:
            sr = f"n/a ({type(e).__name__})"
        print(f"{name} [{C.field.name}]")
        print(f"  closed form {' '.join(map(str, fast))}   ({t1 - t0:.3f}s)")
        print(f"  brute       {' '.join(map(str, brute))}   ({t2 - t1:.3f}s)")
        print(f"  SR count    {sr}")
        print(f"  agree       {fast == brute}")


if __name__ == "__main__":
    main()
