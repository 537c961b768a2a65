'''Pre-period lengths over power-of-two systems, tabulated live.

For m = 2^l and n = 2^k the pre-period of the basic tuple (0,...,0,1)
is (l+1)*2^(k-1) and its period is 1: every orbit ends at the fixed
point (0,...,0). This script computes the table from scratch and
prints observed next to predicted, then shows the sharpness witness
(the state one step before vanishing) and the binary special case.

Run: python3 demos/length_formula_sweep.py
'''

from ducci import basic_len_per, basic_tuple, ducci_iter, make_system

K_MAX, L_MAX = 4, 6

print('pre-period of the basic tuple in Z_{2^l}^{2^k}')
print()
header = 'n\\m  ' + ''.join(f'{2 ** l:>6}' for l in range(1, L_MAX + 1))
print(header)
for k in range(1, K_MAX + 1):
  n = 2 ** k
  row = [f'{n:<5}']
  for l in range(1, L_MAX + 1):
    sys = make_system(2 ** l, n)
    length, per = basic_len_per(sys)
    predicted = (l + 1) * 2 ** (k - 1)
    assert (length, per) == (predicted, 1), (k, l)
    row.append(f'{length:>6}')
  print(''.join(row))
print()
print(f'every cell matches (l+1)*2^(k-1), every period is 1, for all'
      f' k <= {K_MAX}, l <= {L_MAX}.')
print()

print('Sharpness: one step short of the pre-period the state is not yet')
print('zero. The last nonzero state for Z_8^4 (l=3, k=2, pre-period 8):')
sys = make_system(8, 4)
u = basic_tuple(sys)
for r in (7, 8):
  print(f'  step {r}: {ducci_iter(sys, u, r)}')
print()

print('Mod 2 the pre-period only sees the largest power of two in n:')
for n in range(1, 17):
  length, _ = basic_len_per(make_system(2, n))
  print(f'  n={n:<3} pre-period {length:>2}   (2-part of n: {n & -n})')
