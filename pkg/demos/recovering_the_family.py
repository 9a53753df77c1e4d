"""Recover the one-parameter family of odd products over the 2-dimensional
ladder, step by step.

The unknowns are the coefficients of [x_i, x_j] over the even basis.  The
graded Leibniz identity, expanded over every basis triple with at least two
odd members, is linear in those unknowns; its kernel is the space of
admissible product tables.
"""

from fractions import Fraction

from sl2super import (
    OddBracketTable,
    assemble,
    check_leibniz_super,
    classify,
    generate_constraints,
    module_n1,
    sl2,
    solve,
    verify_rescaling_isomorphism,
)


def main():
    even, mod = sl2(), module_n1(1)

    print("Unknowns ([x_i,x_j] = a_ij e + b_ij f + c_ij h, symmetric):")
    system = generate_constraints(even, mod)
    print(" ", ", ".join(system.unknown_names()))

    print(f"\n{len(system.rows)} independent-looking rows; the first few:")
    for row in system.rows[:4]:
        terms = " + ".join(
            f"{coeff}*{system.unknowns[p].name}"
            for p, coeff in sorted(row.as_dict().items()))
        x, y, z = row.triple
        print(f"  from ({x},{y},{z}), component {row.component}:  {terms} = 0")

    sol = solve(system)
    print(f"\nrank {sol.rank}, kernel dimension {sol.dimension}")
    vec = sol.vectors[0]
    print("kernel generator:", sol.nonzero_named(vec))

    print("\nThe classification pipeline packages this up:")
    cl = classify(even, mod)
    print(" ", cl.summary_line())
    for name, rep in zip(cl.names, cl.representatives):
        odd = [f"[{rep.label(i)},{rep.label(j)}] = "
               f"{rep.format_element(rep.bracket(rep.basis_element(i), rep.basis_element(j)))}"
               for (i, j), _ in sorted(rep.table_items())
               if rep.parity(i) and rep.parity(j)]
        print(f"  {name}: " + ("; ".join(odd) if odd else "all odd products zero"))

    print("\nEvery scalar multiple of the generator is again a superalgebra:")
    for t in (Fraction(3), Fraction(-1, 2)):
        table = OddBracketTable.build(
            {(0, 0): {0: 2 * t}, (1, 1): {1: 2 * t}, (0, 1): {2: t}})
        member = assemble(even, mod, table)
        status = "OK" if check_leibniz_super(member).ok else "violated"
        print(f"  parameter {t}: {status}")

    print("\nSquare parameters rescale back to the normalized table:")
    for c in (4, Fraction(9, 4), 25):
        print(f"  c = {c}: {verify_rescaling_isomorphism(c)}")
    print("  (non-square c needs a square root, hence a field extension)")


if __name__ == "__main__":
    main()
