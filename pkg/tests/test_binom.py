'''Binomial coefficients modulo powers of two.'''

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ducci import ParameterError, binom_mod_pow2, binom_mod_pow2_range


def pascal_rows_mod(limit, mod):
  '''Rows 0..limit of Pascal's triangle mod `mod` (the slow oracle).'''
  row = [1]
  while True:
    yield row
    if len(row) > limit:
      return
    row = [1] + [(a + b) % mod for a, b in zip(row, row[1:])] + [1]


class TestScalar:
  def test_central_examples(self):
    assert binom_mod_pow2(4, 2, 2) == 2       # C(4,2) = 6
    assert binom_mod_pow2(4, 2, 3) == 6
    assert binom_mod_pow2(8, 4, 2) == 2       # C(8,4) = 70
    assert binom_mod_pow2(7, 4, 1) == 1       # C(7,4) = 35, odd
    assert binom_mod_pow2(7, 4, 2) == 3

  def test_edges(self):
    assert binom_mod_pow2(0, 0, 5) == 1
    assert binom_mod_pow2(9, 0, 3) == 1
    assert binom_mod_pow2(9, 9, 3) == 1

  def test_matches_comb_everywhere_small(self):
    for big in range(0, 121):
      for small in range(0, big + 1):
        want = math.comb(big, small)
        for l in (1, 2, 3, 5, 8, 12):
          assert binom_mod_pow2(big, small, l) == want % (1 << l), \
            (big, small, l)

  def test_huge_indices_stay_cheap(self):
    # Kummer carries only; no factorial is ever formed.
    assert binom_mod_pow2(1 << 20, 1 << 19, 2) == 2
    assert binom_mod_pow2((1 << 20) - 1, 1 << 19, 1) == 1

  def test_large_exponent_scalar_path(self):
    # l beyond the vectorized table limit still works scalar-wise.
    assert binom_mod_pow2(10, 5, 300) == 252

  def test_rejects_bad_arguments(self):
    with pytest.raises(ParameterError):
      binom_mod_pow2(4, 2, 0)
    with pytest.raises(ParameterError):
      binom_mod_pow2(-1, 0, 2)
    with pytest.raises(ParameterError):
      binom_mod_pow2(4, 5, 2)
    with pytest.raises(ParameterError):
      binom_mod_pow2(4, -1, 2)


class TestRange:
  @pytest.mark.parametrize('big', [0, 1, 2, 7, 64, 255, 300])
  @pytest.mark.parametrize('l', [1, 2, 4, 8, 16])
  def test_agrees_with_scalar(self, big, l):
    row = binom_mod_pow2_range(big, l)
    assert row.dtype == np.int64
    assert list(row) == [binom_mod_pow2(big, k, l) for k in range(big + 1)]

  def test_agrees_with_pascal_oracle(self):
    for l in (1, 3, 6):
      mod = 1 << l
      for big, row in enumerate(pascal_rows_mod(256, mod)):
        assert list(binom_mod_pow2_range(big, l)) == row, (big, l)

  def test_rejects_large_exponent(self):
    with pytest.raises(ParameterError):
      binom_mod_pow2_range(4, 17)


class TestClassicalIdentities:
  @given(st.integers(0, 2000), st.integers(0, 2000), st.integers(1, 10))
  @settings(max_examples=30)
  def test_vandermonde_convolution(self, a, b, l):
    # C(a+b, k) = sum_j C(a, j) * C(b, k-j), checked mod 2^l.
    mod = 1 << l
    k = (a + b) // 2
    total = sum(
      binom_mod_pow2(a, j, l) * binom_mod_pow2(b, k - j, l)
      for j in range(max(0, k - b), min(a, k) + 1)) % mod
    assert binom_mod_pow2(a + b, k, l) == total

  def test_parity_is_the_submask_rule(self):
    # Base-2 digit comparison: C(N, K) is odd iff K's bits lie in N's.
    for big in range(256):
      row = binom_mod_pow2_range(big, 1)
      for small in range(big + 1):
        assert row[small] == (1 if small & big == small else 0)

  @given(st.integers(0, 1 << 40), st.integers(0, 1 << 40))
  @settings(max_examples=200)
  def test_parity_submask_rule_large(self, big, small):
    # Parity needs only the carry count, so any index size is fine.
    if small > big:
      big, small = small, big
    want = 1 if small & big == small else 0
    assert binom_mod_pow2(big, small, 1) == want
