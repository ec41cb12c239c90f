"""Print the size of the enumerated domain for a range of budgets.

Shows why assignment entries in the two-assignment laws are capped: the
number of cases grows with the product of per-slot entry counts.
"""

import argparse
import itertools

from scopekit.enumerate import (
    EnumBudget,
    enumerate_colored_terms,
    enumerate_contexts,
    enumerate_substs,
    enumerate_terms,
    enumerate_types,
)


def sizes(b: EnumBudget) -> dict[str, int]:
    ctxs = enumerate_contexts(b)
    types = enumerate_types(b)
    plain = colored = 0
    for ctx in ctxs:
        for ty in types:
            plain += len(enumerate_terms(ctx, ty, b))
            colored += len(enumerate_colored_terms(ctx, ty, b))
    substs = sum(len(enumerate_substs(s, d, b)) for s, d in itertools.product(ctxs, repeat=2))
    return {"types": len(types), "contexts": len(ctxs), "terms": plain, "colored": colored, "substs": substs}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-type-depth", type=int, default=2)
    ap.add_argument("--max-ctx-len", type=int, default=2)
    ap.add_argument("--max-colors", type=int, default=2)
    ap.add_argument("--sizes", type=int, nargs="+", default=[1, 2, 3, 4, 5])
    args = ap.parse_args()

    print(f"{'size':>4} {'types':>6} {'ctxs':>5} {'terms':>7} {'colored':>8} {'substs':>9}")
    for n in args.sizes:
        b = EnumBudget(args.max_type_depth, args.max_ctx_len, n, args.max_colors)
        s = sizes(b)
        print(f"{n:>4} {s['types']:>6} {s['contexts']:>5} {s['terms']:>7} {s['colored']:>8} {s['substs']:>9}")


if __name__ == "__main__":
    main()
