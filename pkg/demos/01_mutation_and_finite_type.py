"""Mutating quivers and deciding finite type.

Run: python3 demos/01_mutation_and_finite_type.py
"""

# %% A seed is an extended exchange matrix; B[i, j] > 0 draws i -> j.
from clusterhodge import catalog, finite_type_check, louise_decompose, separating_edges

seed = catalog.three_mutable(1, 1, 1)
print("edges:", seed.graph().describe())

# %% Mutation at x reverses the arrows at x and adds the two-step paths through it.
mutated = seed.mutate("x")
print("after mu_x:", mutated.graph().describe())
print("mu_x twice is the identity:", mutated.mutate("x").matrix == seed.matrix)

# %% An acyclic triangle: every edge separates, so the variety is covered by charts.
print("separating edges:", [(seed.labels[i], seed.labels[j]) for i, j in separating_edges(seed)])
tree = louise_decompose(seed)
print("isolated charts in the cover:", sum(1 for _ in tree.leaves()))

# %% Oriented triangles: (1,1,1) mutates to a path, the Markov quiver never leaves its class.
for w in [(1, 1, 1), (1, 2, 3), (2, 2, 2), (3, 3, 3)]:
    result = finite_type_check(catalog.cyclic(*w))
    print(f"cycle {w}: {result.verdict} after {len(result.mutations)} mutation(s)")
