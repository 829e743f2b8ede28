"""Rank loci in Hom(C^2, C^2): motivic classes against the q-binomial sieve."""
from mchern.algebra import rat_equal
from mchern.rankloci import segre_class, segre_sieve, tau_rank_motivic

k = n = 2
for r in range(k + 1):
    motivic = segre_class(tau_rank_motivic(k, n, r), k, n)
    sieve = segre_sieve(k, n, r)
    print(f"kernel dim {r}: {'agree' if rat_equal(motivic, sieve) else 'DISAGREE'}")
    print("   ", sieve.to_str("q"))
