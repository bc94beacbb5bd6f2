"""An instance, its presentation map and the linear relations of its Rees ideal."""

from reesaci.instance import elimination_equation, gamma0, gamma3, in_kernel, psi, validate_instance

spec = validate_instance(3, (3, 3, 3), (1, 1, 1))
print("instance:", spec.as_dict(), "equi-generated:", spec.equi_generated)

# X_i goes to T_i^a_i and W to T^b; X1*X2*X3 and W^3 land on the same monomial
print("psi(W)        =", psi(spec, (0, 0, 0, 1)))
print("psi(X1 X2 X3) =", psi(spec, (1, 1, 1, 0)), " psi(W^3) =", psi(spec, (0, 0, 0, 3)))

print("\nlinear relations:")
for f, (i, j, kind) in zip(gamma0(spec), gamma0(spec).sources):
    left = "W" if i == spec.m + 1 else f"X{i}"
    print(f"  P({left},X{j}) [{kind:7}]  {f.format(spec.layout)}")

print("\nW-power relations up to b:")
for f in gamma3(spec):
    print("  ", f.format(spec.layout), " in kernel:", in_kernel(spec, f))

print("\nelimination equation:", elimination_equation(spec).format(spec.layout))
