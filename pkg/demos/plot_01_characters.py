"""
Characters and Gauss sums
=========================

A Dirichlet character modulo a prime p is fixed by where it sends a
primitive root g. Everything downstream stores characters as exact
exponents: chi(g^j) = e(c j / (p - 1)), so chi(n) is a root of unity we
never have to round.
"""

import math

from mixedsums import build_modulus, character_of_order, enumerate_characters, gauss_sum, legendre

p = 31
mod = build_modulus(p)
print(f"p = {p}, smallest primitive root g = {mod.g}")

# %%
# The Legendre symbol is the unique character of order 2. Its values on
# 1..p-1 are +1 on squares and -1 elsewhere.
chi = legendre(mod)
print("Legendre symbol:", [int(round(complex(chi(n)).real)) for n in range(1, p)])

# %%
# Characters of other orders come from dividing p - 1. Values are kept as
# exponents mod d; ``chi.exponent(n)`` is -1 when p divides n.
cubic = character_of_order(mod, 3)
print("order-3 exponents:", [cubic.exponent(n) for n in range(p + 1)])

# %%
# Every non-principal character has a Gauss sum of modulus exactly sqrt(p).
worst = max(abs(abs(gauss_sum(c)) - math.sqrt(p)) for c in enumerate_characters(mod) if not c.is_principal)
print(f"max | |tau(chi)| - sqrt(p) | over all {p - 2} non-principal characters: {worst:.2e}")
