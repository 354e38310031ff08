"""Exact influences, two independent ways.

Walks one function through the whole exact pipeline: parse an ANF
expression, tabulate it, take the integer Walsh spectrum, and read every
variable's influence both from the definition (count the inputs where
flipping that bit flips the output) and from the squared spectrum mass
on the half-cube where that bit is set. The two must agree exactly —
no floats are involved anywhere.
"""

from bvinfluence import (
    from_anf,
    influence_by_definition,
    influence_by_spectrum,
    influence_vector,
    to_truth_table,
    walsh_spectrum,
)

EXPR, N = "x1 + x2*x3 + x4*x5*x6", 6

f = from_anf(EXPR, N)
table = to_truth_table(f)
print(f"f = {f.to_text()}   (n = {N}, degree {f.degree()})")
print(f"truth table weight: {int(table.bits.sum())} of {1 << N} inputs map to 1")

spec = walsh_spectrum(table)
nonzero = [(y, int(w)) for y, w in enumerate(spec.w) if w]
print(f"\nWalsh spectrum: {len(nonzero)} nonzero coefficients of {1 << N}")
for y, w in nonzero[:8]:
    print(f"  W({y:0{N}b}) = {w:5d}")
if len(nonzero) > 8:
    print(f"  ... {len(nonzero) - 8} more")
print(f"sum of squares = {spec.square_sum()} = 4^{N} (always, for every function)")

print("\ninfluences, computed by two unrelated routes:")
print("  variable   by definition   by spectrum")
for i in range(1, N + 1):
    by_def = influence_by_definition(table, i)
    by_spec = influence_by_spectrum(spec, i)
    marker = "ok" if by_def == by_spec else "MISMATCH"
    print(f"  x{i:<8} {str(by_def):>13}   {str(by_spec):>11}   {marker}")

vec = influence_vector(table)
print(f"\ntotal influence: {vec.total} = {float(vec.total)}")
print("(1 for the linear variable, 1/2 per quadratic one, 1/4 per cubic one)")
