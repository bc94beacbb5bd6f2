"""Relation type, reduction number, socle degree, special fiber and multiplicity."""

from reesaci.algebra import Binomial
from reesaci.report import analyze
from reesaci.instance import validate_instance
from reesaci.monomial import base_ideal, reduction_number

for b in [(1, 1, 1), (1, 1, 2), (1, 2, 2)]:
    s = sum(b)
    spec = validate_instance(3, (s,) * 3, b)
    n = analyze(spec).numbers
    print(f"b={b}: relType={n['relType']} red={n['reductionNumber']} socle={n['socleDegree']} "
          f"r={n['secondaryEliminationDegree']} e={n['multiplicityComputed']} "
          f"(formula {n['multiplicityFormula']}) fiber principal={n['fiberPrincipal']}")

# a reduction that is not generated by monomials
spec = validate_instance(3, (4, 4, 4), (1, 1, 1))
J = [Binomial((4, 0, 0), (0, 0, 4)), Binomial((0, 4, 0), (0, 0, 4)), Binomial((1, 1, 1))]
print("\nbinomial reduction of <T1^4, T2^4, T3^4, T1T2T3>: red =", reduction_number(base_ideal(spec), J, cap=4))
