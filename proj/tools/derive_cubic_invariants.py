#!/usr/bin/env python3
"""Regenerates include/slocc/invariants/aronhold_tables.hpp.

The degree-4 and degree-6 SL(3)-invariants of the ternary cubic are each
unique up to scale. They are found as the null space of the infinitesimal
invariance equations (x_i -> x_i + eps x_j) restricted to torus-weight-zero
monomials. S is taken primitive over Z; T is the primitive degree-6
invariant times 8, which makes 64 S^3 - T^2 proportional to 4a^3 + 27b^2 on
the Weierstrass family y^2 z = x^3 + a x z^2 + b z^3.

Usage: python3 tools/derive_cubic_invariants.py > include/slocc/invariants/aronhold_tables.hpp
"""
import itertools

import sympy as sp

X = sp.symbols("x0:3")
EXPS = [(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
        (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3)]
C = sp.symbols("c0:10")


def monomial(e):
    return X[0] ** e[0] * X[1] ** e[1] * X[2] ** e[2]


def coefficients(poly):
    p = sp.Poly(sp.expand(poly), *X)
    return [p.coeff_monomial(monomial(e)) for e in EXPS]


def invariant(degree):
    f = sum(c * monomial(e) for c, e in zip(C, EXPS))
    derivations = [coefficients(X[j] * sp.diff(f, X[i]))
                   for i in range(3) for j in range(3) if i != j]
    monos = []
    for combo in itertools.combinations_with_replacement(range(10), degree):
        weight = [sum(EXPS[k][v] for k in combo) for v in range(3)]
        if weight == [degree] * 3:
            monos.append(combo)
    unknowns = sp.symbols(f"a0:{len(monos)}")
    candidate = sum(a * sp.Mul(*[C[k] for k in m]) for a, m in zip(unknowns, monos))
    equations = []
    for dv in derivations:
        expr = sp.expand(sum(sp.diff(candidate, C[m]) * dv[m] for m in range(10)))
        equations += sp.Poly(expr, *C).coeffs()
    (solution,) = sp.linsolve(equations, unknowns)
    (free,) = set().union(*[s.free_symbols for s in solution])
    values = [s.subs(free, 1) for s in solution]
    den = sp.ilcm(*[sp.fraction(v)[1] for v in values])
    values = [v * den for v in values]
    g = sp.igcd(*[int(v) for v in values if v != 0])
    return sum(v / g * sp.Mul(*[C[k] for k in m]) for v, m in zip(values, monos))


def emit(name, poly):
    terms = sorted(sp.Poly(sp.expand(poly), *C).terms(), key=lambda t: t[0], reverse=True)
    print(f"inline constexpr std::array<InvariantTerm, {len(terms)}> {name}{{{{")
    for mon, co in terms:
        print(f"    {{{int(co)}, {{{', '.join(map(str, mon))}}}}},")
    print("}};")


def main():
    s = invariant(4)
    t = 8 * invariant(6)
    print("#pragma once\n")
    print("// Generated by tools/derive_cubic_invariants.py. Each term is")
    print("// coefficient * prod_i c_i^{exponent_i} over the ten ternary-cubic")
    print("// coefficients in TernaryCubic order.\n")
    print("#include <array>\n#include <cstdint>\n\nnamespace slocc {\n")
    print("struct InvariantTerm {\n  long long coefficient;\n  std::array<std::uint8_t, 10> exponents;\n};\n")
    emit("kAronholdS", s)
    emit("kAronholdT", t)
    print("\n}  // namespace slocc")


if __name__ == "__main__":
    main()
