"""Every module in the catalog beyond the 2-dimensional ladder is rigid:
the only admissible odd product table is zero.

The run below sweeps the ladder grid, the coupled two-summand bimodules,
and the chain bimodules, timing the whole thing.  It also shows the
annihilator prefilter at work: for the coupled families, one summand's
products are forced to vanish before any linear algebra happens.
"""

import time

from sl2super import (
    annihilator_prefilter,
    bimodule_m1,
    bimodule_m2,
    bimodule_m3,
    bimodule_m4,
    classify,
    module_n1,
    sl2,
)


def main():
    even = sl2()
    start = time.perf_counter()

    print("Ladder modules n1:<n>:")
    for n in range(2, 9):
        cl = classify(even, module_n1(n))
        print(f"  n1:{n}  {cl.summary_line()}")

    print("\nCoupled two-summand bimodules (flagged = prefiltered to zero):")
    for n in range(2, 7):
        for name, build in (("m1", bimodule_m1), ("m2", bimodule_m2)):
            spec = build(n)
            flags = annihilator_prefilter(even, spec)
            labels = [spec.odd_labels[m] for m in sorted(flags)]
            cl = classify(even, spec)
            span = f"{labels[0]}..{labels[-1]}" if labels else "none"
            print(f"  {name}:{n}  {cl.summary_line():30s} flagged: {span}")

    print("\nChain bimodules:")
    for n, k in ((4, 2), (6, 2), (6, 3), (8, 3)):
        for name, build in (("m3", bimodule_m3), ("m4", bimodule_m4)):
            cl = classify(even, build(n, k))
            print(f"  {name}:{n}:{k}  {cl.summary_line()}")

    elapsed = time.perf_counter() - start
    print(f"\ntotal: {elapsed:.2f}s, all exact")


if __name__ == "__main__":
    main()
