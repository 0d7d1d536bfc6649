# %% [markdown]
# # Decompositions
#
# Counting, listing and constructing splits of an inversion set, and the
# polytope view of decomposability.

# %%
from invdec import (
    binomial_holds, count_decompositions, enumerate_decompositions, identity,
    is_multiplicative, is_neighbor_of_identity, merge_parts, multiplicative_witness,
    parse_permutation, validate_partition,
)

P = parse_permutation
p = P("4321")
print(count_decompositions(p))
for d in enumerate_decompositions(p):
    print(d.tau1, "|", d.tau2, "multiplicative" if is_multiplicative(p, d) else "")

# %% [markdown]
# A multiplicative split always exists when any split does.

# %%
for word in ["321", "2413", "526413", "3412"]:
    q = P(word)
    print(word, multiplicative_witness(q), "neighbour of id:", is_neighbor_of_identity(q))

# %% [markdown]
# Three-way splits merge pairwise into two-way ones.

# %%
parts = [P("2134"), P("1243"), P("3412")]
print(validate_partition(p, parts), merge_parts(p, parts, 0, 2))

# %% [markdown]
# A quadratic binomial lies in the toric ideal exactly when inversion
# multisets agree.  2413 is the classic near miss: the union matches but
# `{2,3}` is counted twice.

# %%
print(binomial_holds([identity(4), P("2143")], [P("2134"), P("1243")]))
print(binomial_holds([identity(4), P("2413")], [P("2314"), P("1423")]))
