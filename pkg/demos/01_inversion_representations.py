"""Walk through the four co-representation rows of the inversion-extended group.

For each sign class (eps_r, eps_t) we build the parity operator Sigma, the
antilinear time inversion R and the total inversion T = Sigma R, then verify
the group relations with exact integer arithmetic.  Rows two to four live on
a doubled carrier space; rows two and three force R and Sigma to anticommute
(the printed commutation sign is eps_r * eps_t).
"""

import numpy as np

from gamow import RepRow, SpinLabel, apply_operator, build_r, build_t, compose, verify_group_relations


def show(name, op):
    kind = "antilinear" if op.antilinear else "linear"
    print(f"  {name} ({kind}):")
    for row in np.asarray(op.matrix, dtype=int):
        print("    [" + " ".join(f"{v:2d}" for v in row) + "]")


for twice_j in (0, 1, 2):
    print(f"\n=== spin j = {twice_j / 2} ===")
    for row in RepRow:
        spin = SpinLabel(twice_j)
        rep = verify_group_relations(row, spin)
        flags = (
            rep.sigma_squared_is_identity,
            rep.r_squared_matches_eps_r,
            rep.t_squared_matches_eps_t,
            rep.t_equals_sigma_r,
        )
        print(
            f"row {row.value}: eps_r = {rep.eps_r:+d}, eps_t = {rep.eps_t:+d}, "
            f"core relations {'all exact' if all(flags) else 'BROKEN'}, "
            f"R Sigma = {rep.commutation_sign:+d} Sigma R"
        )

print("\nKramers: half-integer spin in row one gives R^2 = -I")
r = build_r(RepRow.ONE, SpinLabel(1))
show("R (j = 1/2)", r)
show("R^2", compose(r, r))

print("\nAntilinearity in action: R conjugates the vector it acts on")
v = np.array([1 + 1j, 2 + 0j])
print("  v        =", v)
print("  R v      =", apply_operator(build_r(RepRow.THREE, SpinLabel(0)), v))
print("  T v      =", apply_operator(build_t(RepRow.THREE, SpinLabel(0)), v))
