'''The coefficient table behind D^r and its identities.'''

import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from ducci import (CapExceededError, CoeffView, ParameterError,
                   apply_coeff_expansion, basic_tuple, coeff_at, coeff_table,
                   coeff_view, ducci_iter, make_system, view_f, view_g,
                   view_h)


class TestTable:
  def test_defining_identity(self):
    # Row r read right-to-left is exactly D^r(0, ..., 0, 1).
    for m, n in [(4, 4), (3, 5), (2, 8), (6, 3)]:
      sys = make_system(m, n)
      for r in range(3 * n):
        row = [coeff_at(sys, r, s) for s in range(1, n + 1)]
        assert tuple(reversed(row)) == ducci_iter(sys, basic_tuple(sys), r)

  def test_plain_pascal_below_the_wrap(self):
    for m, n in [(4, 4), (5, 6), (2, 7)]:
      sys = make_system(m, n)
      for r in range(n):
        for s in range(1, n + 1):
          assert coeff_at(sys, r, s) == math.comb(r, s - 1) % m

  def test_first_wrapped_row(self):
    # Row n is binomial except the doubled first column.
    for m, n in [(8, 4), (5, 4), (2, 6), (3, 3)]:
      sys = make_system(m, n)
      assert coeff_at(sys, n, 1) == 2 % m
      for s in range(2, n + 1):
        assert coeff_at(sys, n, s) == math.comb(n, s - 1) % m

  def test_known_rows_mod4(self):
    sys = make_system(4, 4)
    table = coeff_table(sys, 5)
    assert table.rows[3] == (1, 3, 3, 1)
    assert table.rows[4] == (2, 0, 2, 0)
    assert table.rows[5] == (2, 2, 2, 2)

  def test_column_index_is_cyclic(self):
    sys = make_system(5, 4)
    table = coeff_table(sys, 6)
    for r in range(7):
      for s in range(1, 5):
        assert table.at(r, s) == table.at(r, s + 4) == table.at(r, s - 4)

  def test_row_bounds(self):
    table = coeff_table(make_system(4, 4), 3)
    with pytest.raises(ParameterError):
      table.at(4, 1)
    with pytest.raises(ParameterError):
      coeff_at(make_system(4, 4), -1, 1)

  def test_cell_cap(self):
    with pytest.raises(CapExceededError):
      coeff_table(make_system(4, 4), 1 << 24)

  def test_csv_snapshot(self):
    csv = coeff_table(make_system(4, 2), 2).to_csv()
    assert csv == ('r,s,value\n'
                   '0,1,1\n0,2,0\n'
                   '1,1,1\n1,2,1\n'
                   '2,1,2\n2,2,2\n')


class TestIdentities:
  @given(st.integers(0, 20), st.integers(0, 20), st.integers(-6, 12))
  @settings(max_examples=60)
  def test_convolution(self, r, t, s):
    # a(r+t, s) = sum_i a(t, i) * a(r, s-i+1), all columns cyclic.
    sys = make_system(4, 4)
    total = sum(coeff_at(sys, t, i) * coeff_at(sys, r, s - i + 1)
                for i in range(1, 5))
    assert coeff_at(sys, r + t, s) == total % 4

  def test_convolution_odd_modulus(self):
    sys = make_system(3, 5)
    for r, t in itertools.product(range(8), repeat=2):
      for s in range(1, 6):
        total = sum(coeff_at(sys, t, i) * coeff_at(sys, r, s - i + 1)
                    for i in range(1, 6))
        assert coeff_at(sys, r + t, s) == total % 3

  def test_half_turn_shift_is_invisible(self):
    # For n = 2^k the columns s + 2^(k-1) and s - 2^(k-1) coincide.
    for m, k in [(4, 2), (2, 3), (8, 2)]:
      sys = make_system(m, 2 ** k)
      half = 2 ** (k - 1)
      for r in range(2 ** k + 5):
        for s in range(1, 2 ** k + 1):
          assert coeff_at(sys, r, s + half) == coeff_at(sys, r, s - half)

  def test_row_symmetry(self):
    # a(r, s) = a(r, r-s+2) under cyclic column indexing.
    for m, n in [(4, 4), (2, 8), (5, 3)]:
      sys = make_system(m, n)
      for r in range(1, 3 * n):
        for s in range(1, n + 1):
          assert coeff_at(sys, r, s) == coeff_at(sys, r, r - s + 2), (m, n, r, s)

  def test_expansion_equals_iteration_exhaustively(self):
    for m, n in [(3, 3), (4, 2), (2, 4)]:
      sys = make_system(m, n)
      for u in itertools.product(range(m), repeat=n):
        for r in range(2 * n + 1):
          assert apply_coeff_expansion(sys, u, r) == ducci_iter(sys, u, r)

  @given(st.integers(0, 40))
  def test_expansion_on_one_state(self, r):
    sys = make_system(6, 5)
    u = (3, 1, 4, 1, 5)
    assert apply_coeff_expansion(sys, u, r) == ducci_iter(sys, u, r)

  def test_expansion_validates(self):
    sys = make_system(4, 3)
    with pytest.raises(ParameterError):
      apply_coeff_expansion(sys, (1, 2), 1)
    with pytest.raises(ParameterError):
      apply_coeff_expansion(sys, (1, 2, 3), -1)


class TestViews:
  def test_f_is_a_plain_cell(self):
    sys = make_system(4, 4)
    assert view_f(sys, 2, 1) == coeff_at(sys, 4, 1) == 2
    assert view_f(sys, 2, 3) == coeff_at(sys, 4, 3)

  def test_g_offsets_the_column(self):
    sys = make_system(4, 4)
    # gamma=2, eps=2, delta=1 lands on a(4, 3) = 6 mod 4 = 2.
    assert view_g(sys, 2, 2, 1) == 2
    sys8 = make_system(4, 8)
    assert view_g(sys8, 2, 2, 1) == coeff_at(sys8, 8, 5)

  def test_h_is_one_row_up(self):
    sys = make_system(4, 4)
    assert view_h(sys, 3, 1) == coeff_at(sys, 5, 1) == 2
    with pytest.raises(ParameterError):
      view_h(sys, 0, 1)

  def test_needs_power_of_two_length(self):
    with pytest.raises(ParameterError):
      view_f(make_system(4, 3), 1, 1)
    with pytest.raises(ParameterError):
      view_f(make_system(4, 1), 1, 1)

  def test_g_needs_k_at_least_two(self):
    with pytest.raises(ParameterError):
      view_g(make_system(4, 2), 1, 1, 1)

  def test_g_needs_eps(self):
    with pytest.raises(ParameterError):
      coeff_view(make_system(4, 4), CoeffView('g', 2, 1))

  def test_unknown_kind(self):
    with pytest.raises(ParameterError):
      coeff_view(make_system(4, 4), CoeffView('q', 1, 1))
