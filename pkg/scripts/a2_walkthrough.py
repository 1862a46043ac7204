"""Worked A2 example: conjugate set, matrices, stable lines, quotient.

Prints every object the smallest nontrivial system produces, at a chosen
parameter value.  Useful as a sanity check after changes and as a reading
companion for the package API.

Run:  python3 scripts/a2_walkthrough.py --t 2
"""

import argparse
from fractions import Fraction

from gencactus.coxeter import CoxeterSystem
from gencactus.racg import RacgContext
from gencactus.rep import (
    Pi_rep,
    check_relations,
    quotient_rep,
    restrict_rep,
    rho_rep,
    stable_lines,
)
from gencactus.scalar import format_scalar


def show_matrix(name, mat):
    print(f"  {name}:")
    for row in mat:
        print("    [" + ", ".join(format_scalar(x) for x in row) + "]")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--t", default="2", help="rational parameter, e.g. 2 or 7/3")
    args = parser.parse_args()
    t = Fraction(args.t)

    system = CoxeterSystem.from_name("A2")
    ctx = RacgContext(system)

    print("conjugate set S, canonical order:")
    for i, pc in enumerate(ctx.conjugates):
        print(f"  {i}: {pc.label()}")
    print("M matrix (1 diagonal, 2 commuting, 0 infinite):")
    for row in ctx.M:
        print("  " + " ".join(str(x) for x in row))

    print(f"\nrho at t={t}:")
    rho = rho_rep(system, t)
    for I in ctx.family:
        show_matrix(f"rho(g{system.format_subset(I)})", rho[I])

    print(f"\nPi at t={t}:")
    Pi = Pi_rep(ctx, t)
    for I in ctx.family:
        show_matrix(f"Pi(g{system.format_subset(I)})", Pi[I])

    for rep, name in ((rho, "rho"), (Pi, "Pi")):
        report = check_relations(system, rep)
        print(f"\n{name} relations: {report.summary()}")

    n = len(ctx.conjugates)
    unit = lambda k: tuple(Fraction(i == k) for i in range(n))
    reflections = restrict_rep(Pi, [unit(0), unit(1), unit(2)])
    print("\nstable lines of Pi restricted to the reflection slots:")
    for vec, signs in stable_lines(reflections):
        pretty = {system.format_subset(I): str(s) for I, s in signs.items()}
        coords = ", ".join(format_scalar(x) for x in vec)
        print(f"  span({coords})  signs {pretty}")

    q = quotient_rep(reflections, [(1, -1, 1)], keep=[0, 2])
    shifted = restrict_rep(rho_rep(system, t + Fraction(1, 2)), [unit(0)[:3], unit(1)[:3]])
    print("\nquotient by the stable line vs rho at t+1/2:", "equal" if q == shifted else "DIFFERENT")
    for I in ctx.family:
        show_matrix(f"quotient(g{system.format_subset(I)})", q[I])


if __name__ == "__main__":
    main()
