"""Explicit dlog forms spanning the Deligne splitting.

Run: python3 demos/03_log_forms.py
"""

# %%
from clusterhodge import LogForm, bezout_change, pullback
from clusterhodge.logforms import basis_prop_1m, basis_prop_2m, linearly_independent

# %% Forms are written with underlines as underscores: _xy_ is dlog x ^ dlog y.
gens = ("x", "y", "z")
print(LogForm.dlog(gens, "y") ^ LogForm.dlog(gens, "x"))

# %% The torus change (y, z) -> (v, w) behind xx' = y^a z^b + 1.
ch = bezout_change(2, 3)
print("s, t =", (ch.s, ch.t), " exponent matrix:", ch.matrix)
uvw = ("u", "v", "w")
for names in [("v",), ("w",), ("u", "v"), ("u", "v", "w")]:
    form = LogForm.dlog(uvw, *names)
    print(f"  {form}  ->  {pullback(ch.inverse, form)}")

# %% Bases: one form per Hodge number, linearly independent at every (k, p).
for (k, p), forms in sorted(basis_prop_1m(4, 6).items()):
    print(f"H^{{{k},({p},{p})}}:", ", ".join(map(str, forms)) or "0")
basis = basis_prop_2m(2, 4, 6)
print("2m(2,4,6) H^{2,(1,1)}:", [str(f) for f in basis[(2, 1)]])
print("independent:", linearly_independent(basis[(2, 1)]))
