"""The Rees ideal as a saturation of its linear part, and how fast the colons get there."""

from reesaci.groebner import colon_by_monomial, defining_ideal_oracle, saturate
from reesaci.instance import gamma0, rees_grading, validate_instance
from reesaci.report import saturation_exponent_bound

for a, b in [((3, 3, 3), (1, 1, 1)), ((4, 4, 4), (1, 1, 2)), ((5, 5, 5), (1, 2, 2))]:
    spec = validate_instance(3, a, b)
    L = defining_ideal_oracle(spec).members
    g0 = list(gamma0(spec))
    sat = saturate(g0, spec.t_block, spec.order, grading=rees_grading(spec))
    print(f"b={b}: saturation equals L: {sat.members == L}")
    for ell in range(spec.bsum + 1):
        colon = colon_by_monomial(g0, (ell,) * 3 + (0,) * 4, spec.order)
        print(f"   l={ell}: {len(colon):2} members, equals L: {colon.members == L}")
    print("   predicted exponent:", saturation_exponent_bound(spec))
