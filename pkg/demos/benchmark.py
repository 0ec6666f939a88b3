"""
Accuracy and cost of the ridgelet round trip
============================================

Error grows slowly with the band-limit while time grows roughly like L^3.
"""

from sridge.bench import loglog_slope, run_benchmark

records = run_benchmark([32, 64, 128, 256], trials=3, seed=0)
for r in records:
    print(f"L={r.L:4d}  error={r.max_abs_error:.2e}  time={r.wall_seconds:.3f}s")

Ls = [r.L for r in records]
print("error slope:", round(loglog_slope(Ls, [r.max_abs_error for r in records]), 2))
print("time slope:", round(loglog_slope(Ls, [r.wall_seconds for r in records]), 2))
