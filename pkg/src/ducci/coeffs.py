'''Coefficient calculus for iterated pair-sum maps.

Write D for the pair-sum map on Z_m^n.  Row r of the coefficient table
holds the residues a(r, 1), ..., a(r, n) defined by

    D^r(0, ..., 0, 1) = (a(r, n), a(r, n-1), ..., a(r, 1)),

equivalently by the cyclic Pascal recurrence a(r, s) = a(r-1, s) +
a(r-1, s-1) with column index taken mod n in 1..n and row 0 the
indicator of column 1.  Coordinate i of D^r(x) is then
sum_s a(r, s-i+1) * x_s, so one table row evaluates D^r on any state
without stepping.  Below the wrap (r < n) the table is plain Pascal:
a(r, s) = C(r, s-1).

Also here: binomial coefficients modulo powers of two, computed by
carry counting (the power of two dividing C(N, K) is the number of
carries when adding K and N-K in base 2) together with products of odd
parts of factorials modulo 2^l.
'''

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import DucciSystem, ResidueTuple, validate_tuple
from .errors import CapExceededError, ParameterError
from .limits import COEFF_CELL_CAP

__all__ = [
  'CoeffTable', 'CoeffView', 'coeff_table', 'coeff_at',
  'apply_coeff_expansion', 'coeff_view', 'view_f', 'view_g', 'view_h',
  'binom_mod_pow2', 'binom_mod_pow2_range',
]

# Completed rows per (m, n), grown on demand and shared between calls.
_ROW_CACHE: dict[tuple[int, int], list[ResidueTuple]] = {}


def _rows(sys: DucciSystem, r_max: int) -> list[ResidueTuple]:
  if not isinstance(r_max, int) or r_max < 0:
    raise ParameterError(f'row index must be an integer >= 0, got {r_max!r}')
  cells = (r_max + 1) * sys.n
  if cells > COEFF_CELL_CAP:
    raise CapExceededError(
      f'table of {cells} cells exceeds the {COEFF_CELL_CAP}-cell cap',
      required=cells, cap=COEFF_CELL_CAP)
  m, n = sys.m, sys.n
  rows = _ROW_CACHE.setdefault((m, n), [(1 % m,) + (0,) * (n - 1)])
  while len(rows) <= r_max:
    prev = rows[-1]
    rows.append(tuple((prev[s] + prev[s - 1]) % m for s in range(n)))
  return rows


def _norm_col(n: int, s: int) -> int:
  # Column indices are cyclic: s and s + n name the same column.
  return (s - 1) % n + 1


@dataclass(frozen=True)
class CoeffTable:
  '''Immutable snapshot of coefficient rows 0..r_max for one system.'''

  sys: DucciSystem
  r_max: int
  rows: tuple[ResidueTuple, ...]

  def at(self, r: int, s: int) -> int:
    '''a(r, s) with the column index normalized cyclically into 1..n.'''
    if not 0 <= r <= self.r_max:
      raise ParameterError(f'row {r} outside 0..{self.r_max}')
    return self.rows[r][_norm_col(self.sys.n, s) - 1]

  def to_csv(self) -> str:
    lines = ['r,s,value']
    for r, row in enumerate(self.rows):
      for s0, value in enumerate(row):
        lines.append(f'{r},{s0 + 1},{value}')
    return '\n'.join(lines) + '\n'


def coeff_table(sys: DucciSystem, r_max: int) -> CoeffTable:
  '''Rows 0..r_max of the coefficient table, residues mod m.'''
  rows = _rows(sys, r_max)
  return CoeffTable(sys, r_max, tuple(rows[:r_max + 1]))


def coeff_at(sys: DucciSystem, r: int, s: int) -> int:
  '''Single cell a(r, s); column index normalized cyclically.'''
  if not isinstance(r, int) or r < 0:
    raise ParameterError(f'row index must be an integer >= 0, got {r!r}')
  return _rows(sys, r)[r][_norm_col(sys.n, s) - 1]


def apply_coeff_expansion(sys: DucciSystem, u: Sequence[int],
                          r: int) -> ResidueTuple:
  '''Evaluate D^r(u) from table row r alone, never by stepping.

  Coordinate i of the result is sum_s a(r, s-i+1) * u_s mod m; agreement
  with repeated stepping is what the tests pin down.
  '''
  x = validate_tuple(sys, u)
  if not isinstance(r, int) or r < 0:
    raise ParameterError(f'iteration count must be an integer >= 0, got {r!r}')
  row = _rows(sys, r)[r]
  m, n = sys.m, sys.n
  return tuple(
    sum(row[(s - i) % n] * x[s] for s in range(n)) % m
    for i in range(n))


@dataclass(frozen=True)
class CoeffView:
  '''A named window into the table for systems with n = 2^k.

  kind "f": a(gamma * 2^(k-1), delta)            (needs k >= 1)
  kind "g": a(gamma * 2^(k-1), eps * 2^(k-2) + delta)   (needs k >= 2)
  kind "h": a(gamma * 2^(k-1) - 1, delta)        (needs k >= 1, gamma >= 1)
  '''

  kind: str
  gamma: int
  delta: int
  eps: int | None = None


def coeff_view(sys: DucciSystem, view: CoeffView) -> int:
  '''Evaluate a view; rejects systems whose n is not a suitable power of 2.'''
  k = sys.pow2_n
  if k is None or k < 1:
    raise ParameterError(f'views need n = 2^k with k >= 1, got n = {sys.n}')
  if view.kind == 'f':
    return coeff_at(sys, view.gamma * 2 ** (k - 1), view.delta)
  if view.kind == 'g':
    if k < 2:
      raise ParameterError('g-views need n = 2^k with k >= 2')
    if view.eps is None:
      raise ParameterError('g-views need an eps parameter')
    return coeff_at(sys, view.gamma * 2 ** (k - 1),
                    view.eps * 2 ** (k - 2) + view.delta)
  if view.kind == 'h':
    row = view.gamma * 2 ** (k - 1) - 1
    if row < 0:
      raise ParameterError('h-views need gamma * 2^(k-1) >= 1')
    return coeff_at(sys, row, view.delta)
  raise ParameterError(f'unknown view kind {view.kind!r}')


def view_f(sys: DucciSystem, gamma: int, delta: int) -> int:
  return coeff_view(sys, CoeffView('f', gamma, delta))


def view_g(sys: DucciSystem, gamma: int, eps: int, delta: int) -> int:
  return coeff_view(sys, CoeffView('g', gamma, delta, eps))


def view_h(sys: DucciSystem, gamma: int, delta: int) -> int:
  return coeff_view(sys, CoeffView('h', gamma, delta))


# --- binomial coefficients mod 2^l ------------------------------------

# Per exponent l: cumulative products of odd parts, table[j] = product
# of oddpart(t) for t <= j, reduced mod 2^l.  oddpart(t) = t >> v2(t),
# and the product over t <= N equals the odd part of N! mod 2^l.
_ODD_FACT_CACHE: dict[int, list[int]] = {}

# Per exponent l <= _INV_TABLE_MAX_L: inverse of every odd residue.
_INV_TABLE_CACHE: dict[int, np.ndarray] = {}
_INV_TABLE_MAX_L = 16


def _odd_fact(limit: int, l: int) -> list[int]:
  mod = 1 << l
  table = _ODD_FACT_CACHE.setdefault(l, [1 % mod])
  while len(table) <= limit:
    t = len(table)
    table.append((table[-1] * (t >> ((t & -t).bit_length() - 1))) % mod)
  return table


def _check_binom_args(big: int, small: int, l: int) -> None:
  if not isinstance(l, int) or l < 1:
    raise ParameterError(f'modulus exponent must be an integer >= 1, got {l!r}')
  if not isinstance(big, int) or big < 0:
    raise ParameterError(f'upper index must be an integer >= 0, got {big!r}')
  if not isinstance(small, int) or not 0 <= small <= big:
    raise ParameterError(
      f'lower index must be an integer in 0..{big}, got {small!r}')


def binom_mod_pow2(big: int, small: int, l: int) -> int:
  '''C(big, small) mod 2^l without computing the full binomial.

  The carry count c when adding `small` and `big - small` in base 2 is
  the exact power of 2 dividing the binomial; when c < l the odd part
  is a quotient of odd-part factorial products, invertible mod 2^l.
  '''
  _check_binom_args(big, small, l)
  rest = big - small
  carries = small.bit_count() + rest.bit_count() - big.bit_count()
  if carries >= l:
    return 0
  if l == 1:
    return 1
  mod = 1 << l
  table = _odd_fact(big, l)
  den = (table[small] * table[rest]) % mod
  return (pow(2, carries, mod) * table[big] * pow(den, -1, mod)) % mod


def _inverse_table(l: int) -> np.ndarray:
  table = _INV_TABLE_CACHE.get(l)
  if table is None:
    mod = 1 << l
    table = np.zeros(mod, dtype=np.int64)
    for x in range(1, mod, 2):
      table[x] = pow(x, -1, mod)
    _INV_TABLE_CACHE[l] = table
  return table


# Grown geometrically so row sweeps pay the popcount/array costs once.
_POPCOUNT_CACHE = np.zeros(1, dtype=np.int64)
_ODD_FACT_NP_CACHE: dict[int, np.ndarray] = {}


def _popcounts_upto(limit: int) -> np.ndarray:
  global _POPCOUNT_CACHE
  if len(_POPCOUNT_CACHE) <= limit:
    size = max(limit + 1, 2 * len(_POPCOUNT_CACHE))
    counts = np.zeros(size, dtype=np.int64)
    work = np.arange(size, dtype=np.int64)
    while work.any():
      counts += work & 1
      work >>= 1
    _POPCOUNT_CACHE = counts
  return _POPCOUNT_CACHE[:limit + 1]


def _odd_fact_np(limit: int, l: int) -> np.ndarray:
  cached = _ODD_FACT_NP_CACHE.get(l)
  if cached is None or len(cached) <= limit:
    cached = np.asarray(_odd_fact(limit, l), dtype=np.int64)
    _ODD_FACT_NP_CACHE[l] = cached
  return cached[:limit + 1]


def binom_mod_pow2_range(big: int, l: int) -> np.ndarray:
  '''C(big, small) mod 2^l for every small in 0..big, as int64.

  Vectorized version of `binom_mod_pow2` for row sweeps; restricted to
  l <= 16 so the odd-residue inverse table stays small.
  '''
  _check_binom_args(big, 0, l)
  if l > _INV_TABLE_MAX_L:
    raise ParameterError(f'row sweeps support l <= {_INV_TABLE_MAX_L}')
  mod = 1 << l
  pop = _popcounts_upto(big)
  carries = pop + pop[::-1] - pop[big]
  odd_fact = _odd_fact_np(big, l)
  inv = _inverse_table(l)[odd_fact]
  vals = (odd_fact[big] * inv) % mod * inv[::-1] % mod
  shifts = np.where(carries < l, carries, 0)
  vals = (vals << shifts) % mod
  return np.where(carries >= l, 0, vals)
