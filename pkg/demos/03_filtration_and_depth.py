"""Adding the W-power relations one at a time keeps every colon extended and depth at least m."""

from reesaci.groebner import defining_ideal_oracle
from reesaci.homology import betti_table, depth_chain_report
from reesaci.instance import filtration, validate_instance
from reesaci.monomial import initial_ideal

spec = validate_instance(3, (3, 3, 3), (1, 1, 1))
basis = defining_ideal_oracle(spec).members
chain = filtration(spec, basis)

print(" j  c          colon extended  depth")
for step in depth_chain_report(spec, chain):
    c = "-" if step.c is None else str(step.c)
    ext = "-" if step.colon_extended is None else str(step.colon_extended)
    print(f"{step.j:2}  {c:10} {ext:15} {step.depth}")

B = betti_table(initial_ideal(basis, spec.nvars))
print("\nBetti numbers of S/ini(L):", B.totals)
print(f"depth {B.depth}, dim {B.dim}: almost Cohen-Macaulay = {B.depth >= B.dim - 1}")
