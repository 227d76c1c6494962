"""Time closed insertion of the full simplex and its serialization round trip."""

import argparse
import time
from math import comb

from sesnet.complex import SimplicialComplex, VertexUniverse, f_vector, from_text, to_text


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args()

    print(f"{'n':>3} {'members':>8} {'build s':>8} {'round trip s':>13} {'ok':>3}")
    for n in range(2, args.max_n + 1):
        u = VertexUniverse(f"v{i}" for i in range(n))
        t0 = time.perf_counter()
        cx = SimplicialComplex.from_simplices(u, [range(n)])
        t1 = time.perf_counter()
        text = to_text(cx)
        same = to_text(from_text(text)) == text
        t2 = time.perf_counter()
        ok = same and f_vector(cx) == tuple(comb(n, k) for k in range(1, n + 1))
        print(f"{n:>3} {len(cx):>8} {t1 - t0:>8.3f} {t2 - t1:>13.3f} {'yes' if ok else 'NO':>3}")


if __name__ == "__main__":
    main()
