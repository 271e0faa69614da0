"""Approximation on a negatively curved target: best rank-1 matrices.

The family exp(x1) (exp(x2 W1) e1) (exp(x3 W2) e1)^T lives on the manifold of
rank-1 matrices, a metric cone whose sectional curvature is bounded below by
-1/lambda^2 at cone radius lambda.  Since x1 ranges over [-1, 1], the image
keeps lambda >= 1/e and the certificate can use the curvature constant
-e^2.  Negative curvature inflates the certificate above the raw tangent
error; the inflation factor is visible in the last column.
"""

from manifold_approx.experiments import ScenarioConfig, scenario_segre

config = ScenarioConfig(scenario="segre", n=60, nmin=2, nmax=12,
                        validation_count=400, seed=0)
record = scenario_segre(config)

print("degree   tangent err   manifold err   certificate   bound/error")
for row in record.rows:
    degree, tangent, _, curvature, manifold_error, bound, _ = row
    print(f"{degree:6d}   {tangent:11.3e}   {manifold_error:12.3e}   "
          f"{bound:11.3e}   {bound / manifold_error:11.1f}")

print(f"\ncurvature constant used: {record.rows[0][3]:.4f}  (= -e^2)")
print("note the rounding plateau once the error reaches ~1e-14")
