"""Mixed Hodge tables and the point-count check.

Run: python3 demos/02_hodge_tables_and_point_counts.py
"""

# %%
from clusterhodge import assemble, catalog, classify, count_variety, e_polynomial, table, verify_table
from clusterhodge.hodge import Variant

# %% Closed-form table of the three-vertex acyclic quiver with weights (2, 3, 4).
seed = catalog.three_mutable(2, 3, 4)
print(classify(seed).case, classify(seed).params)
print(table(seed).ascii())

# %% The same table, glued from the charts of the Louise cover with Mayer-Vietoris.
print("assembled == closed form:", assemble(seed) == table(seed))

# %% For a smooth mixed Tate variety the table predicts the number of F_q points.
print("E-polynomial:", e_polynomial(table(seed)))
for q in (5, 7, 13):
    print(f"  #A(F_{q}) = {count_variety(seed, q)}")
print(verify_table(seed))

# %% Counting is only polynomial on a residue class of q when weights share factors.
# xx' = y^2 z^2 + 1 has a different count when -1 is not a square mod q.
even = catalog.one_mutable(2, 2)
print(verify_table(even, [5, 7, 11, 13], 17))
print(verify_table(even))

# %% The singular variety xx' = yy' = z + 1 has no duality, so only its count is reported.
sing = catalog.singular_case1()
print(table(sing).ascii())
print(table(sing, Variant.INTERSECTION_COHOMOLOGY).ascii())
print(verify_table(sing))
