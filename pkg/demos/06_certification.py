"""Running the randomized certification suites programmatically.

Every invariant the library promises is re-checked on seeded random
instances; the same machinery backs the `nframe certify` command.
"""

from nframe import certify

results = certify.run(seed=42, trials=50, d_max=6, m_max=12)

width = max(len(r.name) for r in results)
print(f"{'suite':<{width}}  trials  failures  worst residual  tolerance")
for r in results:
    print(
        f"{r.name:<{width}}  {r.trials:6d}  {r.failures:8d}  "
        f"{r.worst_residual:14.3e}  {r.tolerance:9.0e}"
    )

print("\nall passed:", all(r.passed for r in results))

# a failing suite would carry a minimal counterexample in instance format:
bad = [r for r in results if not r.passed]
if bad:
    print("first counterexample:", bad[0].counterexample)
