"""Certified surrogate for a parametrized Krylov subspace.

The subspace spanned by the first k preconditioned Krylov vectors of a
discretized convection-diffusion operator is a point on a Grassmannian that
moves smoothly with the two PDE coefficients.  Interpolating its tangent
image gives a surrogate whose worst-case geodesic error carries a

certificate; the Grassmannian's nonnegative curvature makes that certificate
exactly the measured tangent error.
"""

from manifold_approx.experiments import (
    ScenarioConfig,
    emit_csv,
    run_manifest,
    scenario_grassmann_krylov,
)

config = ScenarioConfig(scenario="grassmann", n=120, k=5, nmin=2, nmax=10,
                        validation_count=400, seed=0)
record = scenario_grassmann_krylov(config)

print("degree   tangent err   manifold err   certificate")
for row in record.rows:
    print(f"{row[0]:6d}   {row[1]:11.3e}   {row[4]:12.3e}   {row[5]:11.3e}")

first, last = record.rows[0], record.rows[-1]
print(f"\nerror fell by a factor {first[4] / max(last[4], 1e-300):.1e} "
      f"from degree {first[0]} to {last[0]}")

emit_csv(record, "/tmp/grassmann_krylov.csv")
with open("/tmp/grassmann_krylov.csv.manifest.json", "w", encoding="utf-8") as handle:
    handle.write(run_manifest(record) + "\n")
print("wrote /tmp/grassmann_krylov.csv (+ manifest)")
