"""Two routes to the reduced Groebner basis of the Rees ideal, and why they agree."""

import time

from reesaci.groebner import defining_ideal_oracle, groebner, is_groebner
from reesaci.instance import gamma0, gamma3, pair_form, validate_instance

spec = validate_instance(3, (4, 4, 4), (1, 1, 2))
order = spec.order

t = time.perf_counter()
oracle = defining_ideal_oracle(spec)
print(f"graph-ideal elimination: {len(oracle)} members in {time.perf_counter() - t:.3f}s")

gens = list(gamma0(spec)) + list(gamma3(spec))
print("structured generators already a basis:", is_groebner(gens, order))
structured = groebner(gens, order)
print("identical reduced bases:", structured.members == oracle.members)

print("\nreduced basis (lead first):")
for f in oracle:
    c = pair_form(spec, f)
    tag = f"P(W^{sum(c)}, X^{c})" if c and sum(c) > 1 else "linear"
    print(f"  {f.format(spec.layout):32} {tag}")
