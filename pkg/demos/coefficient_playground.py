'''The coefficient table behind iterated pair sums.

Iterating the map on the basic tuple (0,...,0,1) writes row r of a
cyclic Pascal triangle: coordinate-wise the r-th iterate of any state
is a fixed linear combination of the original entries, with the same
coefficients read off a circular window. Below the wrap the numbers
ARE binomial coefficients, which is why congruence facts about
C(N,K) mod powers of 2 translate into facts about orbit lengths.

Run: python3 demos/coefficient_playground.py
'''

from ducci import (apply_coeff_expansion, binom_mod_pow2, coeff_at,
                   coeff_table, ducci_iter, make_system)

sys = make_system(4, 4)
table = coeff_table(sys, 8)

print(f'coefficient rows for Z_{sys.m}^{sys.n} (column s = weight of the'
      f' s-th entry behind the moving window):')
print()
print('  r   row')
for r in range(9):
  cells = ' '.join(str(table.at(r, s)) for s in range(1, 5))
  note = ''
  if r < 4:
    note = '   <- plain Pascal row mod 4'
  elif r == 4:
    note = '   <- first wrapped row: corner picks up an extra 1'
  print(f'  {r}   {cells}{note}')
print()

print('The window in action: expanding the 3rd iterate of u = (1,1,0,3)')
u = (1, 1, 0, 3)
direct = ducci_iter(sys, u, 3)
expanded = apply_coeff_expansion(sys, u, 3)
print(f'  direct iteration : {direct}')
print(f'  linear expansion : {expanded}')
assert direct == expanded
print()

print('Row symmetry: each row reads the same out to both sides of s=1,')
print('cyclically: a(r,s) = a(r, r-s+2).')
r = 3
pairs = [(s, r - s + 2) for s in range(1, 5)]
for s, mirror in pairs:
  print(f'  a({r},{s}) = {coeff_at(sys, r, s)}'
        f'   a({r},{mirror}) = {coeff_at(sys, r, mirror)}')
print()

print('Below the wrap the table is binomial. Checked against a dedicated')
print('mod-2^l engine (carry counting, no big integers):')
for r, s in [(3, 2), (3, 3), (2, 2)]:
  via_table = coeff_at(sys, r, s)
  via_binom = binom_mod_pow2(r, s - 1, 2)
  print(f'  a({r},{s}) = {via_table}   C({r},{s - 1}) mod 4 = {via_binom}')
  assert via_table == via_binom
print()

big = 1 << 20
print('The same engine handles indices far beyond exact integer reach,')
print(f'e.g. the central column at N = 2^20: C({big},{big // 2})'
      f' mod 8 = {binom_mod_pow2(big, big // 2, 3)}')
print('(2 mod 4 and 6 mod 8, as central binomials at powers of two must be).')
