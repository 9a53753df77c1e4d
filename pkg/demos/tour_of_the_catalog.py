"""A quick tour: build each catalog table, verify it, print a sample.

Run as ``python3 demos/tour_of_the_catalog.py`` from the repository root
(after ``pip install -e .``).
"""

from sl2super import (
    check_bimodule_axioms,
    check_leibniz,
    check_leibniz_super,
    module_n1,
    bimodule_m1,
    bimodule_m3,
    resolve,
    sl2,
    superalgebra_s2,
)


def show(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    show("The even part")
    A = sl2()
    for (i, j), _ in sorted(A.table_items()):
        x, y = A.label(i), A.label(j)
        print(f"  [{x},{y}] = {A.format_element(A.bracket(A.basis_element(x), A.basis_element(y)))}")
    print("  Leibniz identity:", "OK" if check_leibniz(A).ok else "violated")

    show("An irreducible ladder module")
    spec = module_n1(3)
    print(f"  module vectors: {', '.join(spec.odd_labels)}")
    print("  bimodule axioms:", "OK" if check_bimodule_axioms(spec).ok else "violated")

    show("A coupled two-summand bimodule")
    spec = bimodule_m1(4)
    print(f"  dimension {spec.module_dim}, labels {spec.odd_labels[0]}..{spec.odd_labels[-1]}")
    print("  bimodule axioms:", "OK" if check_bimodule_axioms(spec).ok else "violated")

    show("A chain bimodule and its as-printed variant")
    good = bimodule_m3(6, 3)
    bad = bimodule_m3(6, 3, verbatim=True)
    print(f"  repaired table: {len(check_bimodule_axioms(good))} violations")
    print(f"  printed table:  {len(check_bimodule_axioms(bad))} violations")

    show("The enriched 5-dimensional superalgebra")
    S = superalgebra_s2()
    print("  graded Leibniz identity:",
          "OK" if check_leibniz_super(S).ok else "violated")
    x0 = S.basis_element("x_0")
    print(f"  [x_0,x_0] = {S.format_element(S.bracket(x0, x0))}")

    show("Everything is reachable through string ids")
    for identifier in ("sl2", "s2", "n1:2", "m3:6:3"):
        obj = resolve(identifier)
        kind = type(obj).__name__
        print(f"  {identifier:8s} -> {kind}")


if __name__ == "__main__":
    main()
