"""Build one interleaved sequence and look inside it.

The construction starts from a prime p = a^2 + 4 (a odd), splits Z_p* into
the four order-4 cyclotomic classes of a primitive root g, forms three
Ding-Helleseth-Lam sequences from class unions, and interleaves shifted and
complemented copies of them into a single sequence of period 4p.
"""

from twoadic import (
    construction_params,
    cyclotomic_classes,
    deinterleave,
    dhl_sequence,
    eligible_primes,
    sequence_literal,
    su_sequence,
)

print("eligible primes up to 500:", eligible_primes(500))

p, g = 13, 2
classes = cyclotomic_classes(p, g)
for j, cls in enumerate(classes.classes):
    print(f"D{j} =", sorted(cls))

for kind in (1, 2, 3, 4):
    s = dhl_sequence(p, g, kind)
    print(f"DHL kind {kind}: {s}  weight {s.weight}")

params = construction_params(p, g, w=(0, 1, 0, 1))
q = params.quartic
print(f"\nquartic data: p = ({q.a})^2 + 4*({q.b})^2, a = 1 mod 4, d = {params.d}")

s = su_sequence(params)
print("interleaved sequence:", sequence_literal(s))
print("period:", s.period, " weight:", s.weight, "(= 2p)")

print("\ncolumns recovered by deinterleaving:")
for j, col in enumerate(deinterleave(s)):
    print(f"  column {j}: {col}")
