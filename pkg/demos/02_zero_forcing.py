"""
Zero forcing and the forcing-based bound
========================================

Color the leaders black, then repeatedly let any black node with exactly
one white in-neighbor force that neighbor black. The final black set (the
derived set) is unique, and its size is another lower bound on the
controllable-subspace dimension.
"""

from sscbounds import derived_set, gen_named, is_zfs, zeta

# On a path with an end leader, forcing sweeps down the whole chain.
path = gen_named("path", 5)
d = derived_set(path, [0])
print("path, leader 0")
for event in d.trace_events():
    print(f"  node {event['forcer']} forces node {event['forced']}")
print("derived set:", sorted(d.members), "| zeta =", zeta(path, [0]),
      "| zero forcing set?", is_zfs(path, [0]))

# A star with the center as leader is stuck immediately: the center sees
# three white neighbors at once and the rule never fires.
star = gen_named("star", 4)
print("\nstar, center leader")
print("derived set:", sorted(derived_set(star, [0]).members),
      "| zeta =", zeta(star, [0]))

# An interior path leader is equally stuck (two white neighbors).
print("\npath, interior leader 1")
print("derived set:", sorted(derived_set(path, [1]).members))

# Forcing is monotone in the input set: more leaders, larger derived set.
print("\nleaders {0} vs {0, 2} on the path:")
print("  dset({0})   =", sorted(derived_set(path, [0]).members))
print("  dset({0,2}) =", sorted(derived_set(path, [0, 2]).members))

# Everything black from the start is trivially a zero forcing set.
print("\nall nodes as leaders: zeta =", zeta(path, range(5)))
