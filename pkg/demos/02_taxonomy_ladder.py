"""
A ladder of zero-product conditions
===================================

Between "commutative" and "no structure at all" sits a ladder of conditions
about how zero products behave:

    reduced => symmetric => reversible => semicommutative => abelian

Each step is strict, and small finite rings witness every strict drop.
This script climbs the ladder with the smallest separating examples the
catalog knows, printing the witness the scanner found for each failure.
"""

from finring import corpus, profile

# the catalog indexes rings by name; build the ones we want
want = ["F4", "Z4", "Sym32", "F2Q8", "S16F2b", "Abel64", "U2F2"]
rings = {e.name: e.build() for e in corpus() if e.name in want}

LADDER = ("reduced", "symmetric", "reversible", "semicommutative", "abelian")

print(f"{'ring':10}" + "".join(f"{k[:10]:>12}" for k in LADDER))
profiles = {}
for name in want:
    p = profile(rings[name])
    profiles[name] = p
    row = "".join(f"{str(getattr(p, k)).lower():>12}" for k in LADDER)
    print(f"{name:10}{row}")

print()

# each consecutive pair of rows above separates one rung from the next:
#   F4      reduced (a finite field has no nilpotents)
#   Z4      symmetric but not reduced (2 is nilpotent, yet Z4 is commutative)
#   F2Q8    reversible but not symmetric, at order 256
#   S16F2b  semicommutative but not reversible, at order 16
#   Abel64  abelian but not semicommutative, at order 64
#   U2F2    not abelian, at order 8
p = profiles["F2Q8"]
print("witness that F2Q8 is not symmetric (a, b, c with abc=0, bac!=0):",
      p.witnesses["symmetric"])
p = profiles["Abel64"]
print("witness that Abel64 is not semicommutative (a, r, b with ab=0, arb!=0):",
      p.witnesses["semicommutative"])
