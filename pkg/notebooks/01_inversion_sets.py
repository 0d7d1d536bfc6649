# %% [markdown]
# # Inversion sets
#
# A permutation in one-line notation, its inversions, and the test for which
# sets of pairs come from some permutation.

# %%
from invdec import (
    InversionSet, compose, inverse, inversion_set, is_inversion_set,
    longest_element, parse_permutation, permutation_from_inversion_set,
)

p = parse_permutation("2413")
print(p, "inversions:", inversion_set(p).sorted_edges())

# %% [markdown]
# Not every set of pairs is an inversion set: `{13}` alone on three points
# would need `12` or `23` too.

# %%
print(is_inversion_set(InversionSet(3, {(1, 3)})))
print(is_inversion_set(InversionSet(3, {(1, 2), (1, 3), (2, 3)})))

# %% [markdown]
# Going back from the set to the permutation.

# %%
print(permutation_from_inversion_set(InversionSet(4, {(1, 3), (2, 3), (2, 4)})))

# %% [markdown]
# Multiplying by the reverse identity on the left complements the inversion set.

# %%
w0 = longest_element(4)
q = compose(w0, p)
print(q, inversion_set(q).sorted_edges())
print(inversion_set(p).complement() == inversion_set(q))
print(compose(p, inverse(p)))
