# %% [markdown]
# # Blocks and the substitution tree

# %%
from invdec import all_blocks, inflate, is_simple, parse_permutation, strong_blocks, substitution_tree, tree_to_permutation

P = parse_permutation
p = P("3 1 2 7 5 8 6 4 9")
print(sorted(all_blocks(p)))
print(sorted(strong_blocks(p)))

# %% [markdown]
# Each node records its kind and skeleton.  Serial children of a serial node
# never occur, and likewise for parallel.

# %%
tree = substitution_tree(p)
print(tree.render())
print(tree_to_permutation(tree) == p)

# %% [markdown]
# Inflation builds permutations back up.

# %%
print(inflate(P("2413"), [P("21"), P("1"), P("12"), P("1")]))
print([str(q) for q in map(P, ["2413", "3142", "24153", "321"]) if is_simple(q)])
