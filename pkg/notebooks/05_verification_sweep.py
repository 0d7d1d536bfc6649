# %% [markdown]
# # Exhaustive verification
#
# Run every brute-force check over a whole symmetric group.

# %%
from invdec.oracle import default_checks, sweep_verify

report = sweep_verify(5)
print(report.permutations_checked, "permutations,", report.failures, "failures")
print(default_checks(5))

# %% [markdown]
# The length bound is only guaranteed from n = 5; at n = 4 the sweep flags 3412.

# %%
print(sweep_verify(4, ["length-bound"]).checks["length-bound"].witnesses)
