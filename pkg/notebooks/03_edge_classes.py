# %% [markdown]
# # Edge classes
#
# Inversions that must travel together in any split.  Computed from the tree
# and, independently, by closing the triangle relation on the graph.

# %%
from invdec import edge_classes_closure, edge_classes_structural, inversion_graph, parse_permutation

for word in ["321", "2413", "3412", "52341"]:
    p = parse_permutation(word)
    structural = edge_classes_structural(p)
    closure = edge_classes_closure(inversion_graph(p))
    print(word, [c.sorted_edges() for c in structural], structural.as_partition() == closure.as_partition())
    for c in structural:
        print("   ", c.origin.kind, c.origin.module, c.origin.pair)
