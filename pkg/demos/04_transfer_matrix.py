"""Closing surfaces with a 2x2 transfer matrix over Z[q].

Cutting the genus-g surface into a disc, g holed tori and a cap reduces the
class computation to the g-th power of one matrix, normalized by the g-th
power of the group class.  The matrix is assembled from fiber classes and
passes its eigen-identities as exact polynomial equalities.
"""

from affrep import (
    CircleState,
    ONE,
    ZERO,
    apply_transfer,
    build_transfer,
    close_surface,
    eigen_verify,
    reconstruct_transfer,
)

data = build_transfer()  # every assembly identity is re-verified here
print("transfer matrix:")
for row in data.matrix:
    print("  [" + ", ".join(str(e) for e in row) + "]")

print("\nclosed surfaces:")
for genus in range(1, 6):
    print(f"  genus {genus}: {close_surface(genus, data)}")

print("\neigen-identities of the normalized matrix:")
for name, ok in eigen_verify(data).checks:
    print(f"  {name}: {'pass' if ok else 'FAIL'}")

# the whole matrix can be rebuilt from the three smallest closed surfaces
a, b, d = reconstruct_transfer(
    close_surface(1, data), close_surface(2, data), close_surface(3, data)
)
print("\nreconstructed from genus 1-3 data (lower-left normalized to 1):")
print(f"  a = {a}\n  b = {b}\n  d = {d}")

# iterating the matrix on the identity generator and projecting agrees
state = CircleState(ONE, ZERO)
for genus in range(1, 4):
    state = apply_transfer(state, data)
    projected = state.c_i.exact_div(data.group_class**genus)
    print(f"iterate-and-project, genus {genus}: {projected}")
