'''Machine checks for the identity catalog of pair-sum dynamics.

Each `verify_*` function sweeps a parameter family, evaluates one
claimed identity case by case, and returns a `CheckReport`.  A failing
case carries a minimal counterexample (smallest swept parameters
first, then lexicographically smallest witness).  Cases whose
hypotheses are not met, or whose state space exceeds the configured
cap, are reported as skips rather than failures.

Checked claims, with their check ids:

  length_formula         basic pre-period and period of Z_{2^l}^{2^k}
                         equal ((l+1) * 2^(k-1), 1)
  length_lower_bound     one step earlier the basic iterate is nonzero
  vanishing_bound        every state of Z_{2^l}^{2^k} is zero after
                         l * 2^k steps
  binary_length_formula  in Z_2^n the basic pre-period is 2^v2(n)
  trivial_kernel         the kernel of Z_{2^l}^{2^k} is {0}
  cycle_subgroup         the kernel is a subgroup, closed under
                         rotation and scaling, permuted by the map
  predecessor_count      for even n every state has 0 or exactly m
                         predecessors, forming one translation family
  binomial_congruences   C(2^j, 2^(j-1)) is 2 mod 4 and 6 mod 8, other
                         inner cells of row 2^j are 0 mod 4, row
                         2^j - 1 is odd with center 3 mod 4
  coeff_pair_sum1        a(l*2^(k-1), s) + a(l*2^(k-1), s - 2^(k-1))
                         is 0 mod 2^l for every column s
  coeff_pair_sum2        the analogous two-cell sum one level down,
                         rows (l-1)*2^(k-1), needs l >= 3 and k >= 2
  half_modulus_pivot     a(l*2^(k-1), l*2^(k-2) + 1) is exactly
                         2^(l-1) mod 2^l, needs l >= 2 and k >= 2

Congruence sweeps share one coefficient table per k built at the
largest requested modulus 2^max(l); each case then asserts residues
mod its own 2^l.
'''

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import _statespace
from .coeffs import binom_mod_pow2, binom_mod_pow2_range, coeff_at
from .core import DucciSystem, _step, basic_tuple, make_system
from .errors import CapExceededError
from .limits import ENUM_NODE_CAP, ORBIT_VISIT_CAP
from .orbits import basic_len_per, kernel_set, predecessors

__all__ = [
  'CaseResult', 'CheckReport', 'verify_length_formula',
  'verify_length_lower_bound', 'verify_vanishing_bound',
  'verify_binary_length_formula', 'verify_trivial_kernel',
  'verify_cycle_subgroup', 'verify_predecessor_count',
  'verify_binomial_congruences', 'verify_coeff_pair_sum1',
  'verify_coeff_pair_sum2', 'verify_half_modulus_pivot',
  'run_checks', 'reports_to_jsonl', 'summary_table', 'exit_code',
  'CHECK_NAMES', 'DEFAULT_SYSTEMS',
]


@dataclass(frozen=True)
class CaseResult:
  '''Outcome of one parameter combination inside a check.'''

  params: dict
  verdict: str                      # pass | fail | skip
  observed: dict | None = None
  witness: dict | None = None       # present iff verdict == fail
  reason: str | None = None         # present iff verdict == skip

  def to_json_obj(self) -> dict:
    obj: dict = {'params': self.params, 'verdict': self.verdict}
    if self.observed is not None:
      obj['observed'] = self.observed
    if self.witness is not None:
      obj['witness'] = self.witness
    if self.reason is not None:
      obj['reason'] = self.reason
    return obj


@dataclass(frozen=True)
class CheckReport:
  '''Aggregate outcome of one check over its whole sweep.

  verdict is "fail" iff any case failed (and then `counterexample`
  holds the first failing case's parameters and witness), "pass" if at
  least one case passed and none failed, else "skip".
  '''

  check_id: str
  parameters: dict
  verdict: str
  counterexample: dict | None
  cases: tuple[CaseResult, ...]
  elapsed: float = field(compare=False, default=0.0)

  def to_json_obj(self, include_elapsed: bool = False) -> dict:
    obj: dict = {
      'check_id': self.check_id,
      'parameters': self.parameters,
      'verdict': self.verdict,
      'counterexample': self.counterexample,
      'cases': [c.to_json_obj() for c in self.cases],
    }
    if include_elapsed:
      obj['elapsed'] = self.elapsed
    return obj


def _finish(check_id: str, parameters: dict, cases: list[CaseResult],
            started: float) -> CheckReport:
  counterexample = None
  if any(c.verdict == 'fail' for c in cases):
    verdict = 'fail'
    first = next(c for c in cases if c.verdict == 'fail')
    counterexample = dict(first.params)
    counterexample.update(first.witness or {})
  elif any(c.verdict == 'pass' for c in cases):
    verdict = 'pass'
  else:
    verdict = 'skip'
  return CheckReport(check_id, parameters, verdict, counterexample,
                     tuple(cases), time.perf_counter() - started)


def _range_param(rng) -> list[int]:
  return list(rng)


def _pow2_system(k: int, l: int) -> DucciSystem:
  return make_system(2 ** l, 2 ** k)


# --- orbit-side checks -------------------------------------------------

def verify_length_formula(k_range=range(1, 6), l_range=range(1, 7), *,
                          max_states: int = ORBIT_VISIT_CAP) -> CheckReport:
  '''Basic pre-period and period of Z_{2^l}^{2^k}: ((l+1)*2^(k-1), 1).'''
  started = time.perf_counter()
  cases = []
  for k in k_range:
    for l in l_range:
      params = {'k': k, 'l': l}
      if k < 1 or l < 1:
        cases.append(CaseResult(params, 'skip',
                                reason='hypothesis: needs k >= 1 and l >= 1'))
        continue
      want = ((l + 1) * 2 ** (k - 1), 1)
      try:
        got = basic_len_per(_pow2_system(k, l), max_states=max_states)
      except CapExceededError as exc:
        cases.append(CaseResult(params, 'skip', reason=f'cap: {exc}'))
        continue
      if got == want:
        cases.append(CaseResult(params, 'pass',
                                observed={'len': got[0], 'per': got[1]}))
      else:
        cases.append(CaseResult(
          params, 'fail', witness={'expected': list(want),
                                   'observed': list(got)}))
  return _finish('length_formula',
                 {'k': _range_param(k_range), 'l': _range_param(l_range)},
                 cases, started)


def verify_length_lower_bound(k_range=range(1, 6),
                              l_range=range(1, 7)) -> CheckReport:
  '''One step before the formula value the basic iterate is nonzero.'''
  started = time.perf_counter()
  cases = []
  for k in k_range:
    for l in l_range:
      params = {'k': k, 'l': l}
      if k < 1 or l < 1:
        cases.append(CaseResult(params, 'skip',
                                reason='hypothesis: needs k >= 1 and l >= 1'))
        continue
      sys = _pow2_system(k, l)
      steps = (l + 1) * 2 ** (k - 1) - 1
      cur = basic_tuple(sys)
      for _ in range(steps):
        cur = _step(cur, sys.m)
      if any(cur):
        cases.append(CaseResult(params, 'pass', observed={'steps': steps}))
      else:
        cases.append(CaseResult(params, 'fail',
                                witness={'steps': steps, 'iterate': 'zero'}))
  return _finish('length_lower_bound',
                 {'k': _range_param(k_range), 'l': _range_param(l_range)},
                 cases, started)


def verify_vanishing_bound(k_range=range(1, 6), l_range=range(1, 7), *,
                           samples: int = 100, seed: int = 0,
                           exhaustive_limit: int = 1 << 16) -> CheckReport:
  '''After l * 2^k steps every state of Z_{2^l}^{2^k} is zero.

  Exhaustive over the whole state space when it has at most
  `exhaustive_limit` states, seeded random samples otherwise.  Also
  asserts the formula value never exceeds this bound.
  '''
  started = time.perf_counter()
  rng = random.Random(seed)
  cases = []
  for k in k_range:
    for l in l_range:
      params = {'k': k, 'l': l}
      if k < 1 or l < 1:
        cases.append(CaseResult(params, 'skip',
                                reason='hypothesis: needs k >= 1 and l >= 1'))
        continue
      sys = _pow2_system(k, l)
      bound = l * 2 ** k
      formula = (l + 1) * 2 ** (k - 1)
      if formula > bound:
        cases.append(CaseResult(params, 'fail',
                                witness={'formula': formula, 'bound': bound}))
        continue
      if sys.state_count <= exhaustive_limit:
        states = _statespace.states_matrix(sys.m, sys.n, exhaustive_limit)
        final = _statespace.batch_iter(states, sys.m, bound)
        bad = np.nonzero(final.any(axis=1))[0]
        if bad.size:
          u = _statespace.decode(int(bad[0]), sys.m, sys.n)
          cases.append(CaseResult(params, 'fail',
                                  witness={'state': list(u), 'bound': bound}))
        else:
          cases.append(CaseResult(
            params, 'pass',
            observed={'bound': bound, 'states': sys.state_count,
                      'mode': 'exhaustive'}))
        continue
      bad_state = None
      for _ in range(samples):
        u = tuple(rng.randrange(sys.m) for _ in range(sys.n))
        cur = u
        for _ in range(bound):
          cur = _step(cur, sys.m)
        if any(cur):
          bad_state = u
          break
      if bad_state is None:
        cases.append(CaseResult(
          params, 'pass',
          observed={'bound': bound, 'samples': samples, 'mode': 'sampled'}))
      else:
        cases.append(CaseResult(params, 'fail',
                                witness={'state': list(bad_state),
                                         'bound': bound}))
  return _finish('vanishing_bound',
                 {'k': _range_param(k_range), 'l': _range_param(l_range),
                  'samples': samples, 'seed': seed},
                 cases, started)


def verify_binary_length_formula(n_max: int = 16) -> CheckReport:
  '''In Z_2^n the basic pre-period is 2^v2(n) (1 for odd n).'''
  started = time.perf_counter()
  cases = []
  for n in range(1, n_max + 1):
    params = {'n': n}
    want = 1 << ((n & -n).bit_length() - 1)
    length, period = basic_len_per(make_system(2, n))
    if length == want:
      cases.append(CaseResult(params, 'pass',
                              observed={'len': length, 'per': period}))
    else:
      cases.append(CaseResult(params, 'fail',
                              witness={'expected': want, 'observed': length}))
  return _finish('binary_length_formula', {'n_max': n_max}, cases, started)


def verify_trivial_kernel(k_range=range(1, 6), l_range=range(1, 7), *,
                          max_states: int = ENUM_NODE_CAP) -> CheckReport:
  '''The only cycle state of Z_{2^l}^{2^k} is the zero tuple.'''
  started = time.perf_counter()
  cases = []
  for k in k_range:
    for l in l_range:
      params = {'k': k, 'l': l}
      if k < 1 or l < 1:
        cases.append(CaseResult(params, 'skip',
                                reason='hypothesis: needs k >= 1 and l >= 1'))
        continue
      sys = _pow2_system(k, l)
      try:
        kernel = kernel_set(sys, max_states=max_states)
      except CapExceededError as exc:
        cases.append(CaseResult(params, 'skip', reason=f'cap: {exc}'))
        continue
      if kernel.members == {(0,) * sys.n}:
        cases.append(CaseResult(params, 'pass',
                                observed={'states': sys.state_count}))
      else:
        extra = min(u for u in kernel.members if any(u))
        cases.append(CaseResult(params, 'fail',
                                witness={'cycle_state': list(extra),
                                         'order': kernel.order}))
  return _finish('trivial_kernel',
                 {'k': _range_param(k_range), 'l': _range_param(l_range)},
                 cases, started)


def verify_cycle_subgroup(m: int, n: int, *,
                          max_states: int = ENUM_NODE_CAP) -> CheckReport:
  '''The kernel is a subgroup of Z_m^n, rotation- and scaling-closed,
  and the pair-sum map permutes it.  Closure is checked exhaustively
  over all member pairs.'''
  started = time.perf_counter()
  params = {'m': m, 'n': n}
  sys = make_system(m, n)

  def finish(case: CaseResult) -> CheckReport:
    return _finish('cycle_subgroup', params, [case], started)

  try:
    kernel = kernel_set(sys, max_states=max_states)
  except CapExceededError as exc:
    return finish(CaseResult(params, 'skip', reason=f'cap: {exc}'))

  members = kernel.sorted_members()
  mat = np.array(members, dtype=np.int64)
  weights = np.array([m ** (n - 1 - i) for i in range(n)], dtype=np.int64)
  mask = np.zeros(sys.state_count, dtype=bool)
  mask[mat @ weights] = True

  def fail(kind: str, **extra) -> CheckReport:
    witness = {'violation': kind}
    witness.update(extra)
    return finish(CaseResult(params, 'fail', witness=witness))

  if (0,) * n not in kernel.members:
    return fail('identity_missing')
  for pos, row in enumerate(mat):
    inside = mask[((mat + row) % m) @ weights]
    if not inside.all():
      other = int(np.argmax(~inside))
      return fail('sum_escapes', u=list(members[pos]), v=list(members[other]))
  inside = mask[((-mat) % m) @ weights]
  if not inside.all():
    return fail('inverse_escapes',
                u=list(members[int(np.argmax(~inside))]))
  for lam in range(m):
    inside = mask[((mat * lam) % m) @ weights]
    if not inside.all():
      return fail('scale_escapes', lam=lam,
                  u=list(members[int(np.argmax(~inside))]))
  inside = mask[np.roll(mat, -1, axis=1) @ weights]
  if not inside.all():
    return fail('rotation_escapes',
                u=list(members[int(np.argmax(~inside))]))
  image = ((mat + np.roll(mat, -1, axis=1)) % m) @ weights
  if not mask[image].all():
    return fail('image_escapes',
                u=list(members[int(np.argmax(~mask[image]))]))
  if np.unique(image).size != kernel.order:
    return fail('image_not_injective')
  return finish(CaseResult(params, 'pass', observed={'order': kernel.order}))


def verify_predecessor_count(m: int, n: int, *,
                             max_states: int = ENUM_NODE_CAP) -> CheckReport:
  '''For even n: every state has 0 or exactly m predecessors, and the
  predecessors of a state form one translation family
  (y_1 + z, y_2 - z, ..., y_{n-1} + z, y_n - z) for z in 0..m-1.'''
  started = time.perf_counter()
  params = {'m': m, 'n': n}
  sys = make_system(m, n)

  def finish(case: CaseResult) -> CheckReport:
    return _finish('predecessor_count', params, [case], started)

  if n % 2 == 1:
    return finish(CaseResult(params, 'skip',
                             reason='hypothesis: n must be even'))
  try:
    succ = _statespace.successor_array(m, n, max_states)
  except CapExceededError as exc:
    return finish(CaseResult(params, 'skip', reason=f'cap: {exc}'))
  indeg = np.bincount(succ, minlength=sys.state_count)
  bad = np.nonzero((indeg != 0) & (indeg != m))[0]
  if bad.size:
    state = _statespace.decode(int(bad[0]), m, n)
    return finish(CaseResult(params, 'fail',
                             witness={'state': list(state),
                                      'count': int(indeg[bad[0]])}))
  alt = tuple(1 if i % 2 == 0 else m - 1 for i in range(n))
  with_preds = np.nonzero(indeg == m)[0]
  for code in with_preds:
    state = _statespace.decode(int(code), m, n)
    preds = predecessors(sys, state)
    base = preds[0]
    family = sorted(
      tuple((base[i] + z * alt[i]) % m for i in range(n))
      for z in range(m))
    if len(preds) != m or preds != family:
      return finish(CaseResult(params, 'fail',
                               witness={'state': list(state),
                                        'count': len(preds)}))
  return finish(CaseResult(
    params, 'pass',
    observed={'states': sys.state_count,
              'with_preds': int(with_preds.size)}))


# --- congruence checks -------------------------------------------------

def verify_binomial_congruences(j_range=range(2, 17)) -> CheckReport:
  '''Row-2^j binomial congruences: the central cell is 2 mod 4 and
  6 mod 8, every other inner cell is 0 mod 4; row 2^j - 1 is odd
  everywhere with central cell 3 mod 4.'''
  started = time.perf_counter()
  cases = []
  for j in j_range:
    params = {'j': j}
    if j < 2:
      cases.append(CaseResult(params, 'skip',
                              reason='hypothesis: j must be >= 2'))
      continue
    big, half = 2 ** j, 2 ** (j - 1)
    observed = {
      'center_mod4': binom_mod_pow2(big, half, 2),
      'center_mod8': binom_mod_pow2(big, half, 3),
      'odd_center_mod4': binom_mod_pow2(big - 1, half, 2),
    }
    witness = None
    if observed['center_mod4'] != 2:
      witness = {'cell': [big, half], 'mod4': observed['center_mod4']}
    elif observed['center_mod8'] != 6:
      witness = {'cell': [big, half], 'mod8': observed['center_mod8']}
    elif observed['odd_center_mod4'] != 3:
      witness = {'cell': [big - 1, half],
                 'mod4': observed['odd_center_mod4']}
    if witness is None:
      row = binom_mod_pow2_range(big, 2)
      row[0] = row[half] = row[big] = 0
      nonzero = np.nonzero(row)[0]
      if nonzero.size:
        witness = {'cell': [big, int(nonzero[0])],
                   'mod4': int(row[nonzero[0]])}
    if witness is None:
      odd_row = binom_mod_pow2_range(big - 1, 1)
      even_cells = np.nonzero(odd_row != 1)[0]
      if even_cells.size:
        witness = {'cell': [big - 1, int(even_cells[0])], 'mod2': 0}
    if witness is None:
      cases.append(CaseResult(params, 'pass', observed=observed))
    else:
      cases.append(CaseResult(params, 'fail', witness=witness))
  return _finish('binomial_congruences', {'j': _range_param(j_range)},
                 cases, started)


def _working_table_modulus(l_range) -> int:
  values = list(l_range)
  return max(values) if values else 1


def verify_coeff_pair_sum1(k_range=range(1, 7),
                           l_range=range(1, 7)) -> CheckReport:
  '''Columns half a turn apart sum to 0 mod 2^l on row l * 2^(k-1).'''
  started = time.perf_counter()
  work_l = _working_table_modulus(l_range)
  cases = []
  for k in k_range:
    if k < 1:
      cases.append(CaseResult({'k': k}, 'skip',
                              reason='hypothesis: k must be >= 1'))
      continue
    sys = make_system(2 ** work_l, 2 ** k)
    half = 2 ** (k - 1)
    for l in l_range:
      params = {'k': k, 'l': l}
      mod = 1 << l
      row = l * half
      witness = None
      for s in range(1, 2 ** k + 1):
        a, b = coeff_at(sys, row, s), coeff_at(sys, row, s - half)
        if (a + b) % mod:
          witness = {'row': row, 's': s, 'cells': [a % mod, b % mod]}
          break
      if witness is None:
        cases.append(CaseResult(params, 'pass', observed={'row': row}))
      else:
        cases.append(CaseResult(params, 'fail', witness=witness))
  return _finish('coeff_pair_sum1',
                 {'k': _range_param(k_range), 'l': _range_param(l_range)},
                 cases, started)


def verify_coeff_pair_sum2(k_range=range(2, 7),
                           l_range=range(3, 7)) -> CheckReport:
  '''Two chosen cells of row (l-1) * 2^(k-1) sum to 0 mod 2^l;
  hypotheses l >= 3 and k >= 2.'''
  started = time.perf_counter()
  work_l = _working_table_modulus(l_range)
  cases = []
  for k in k_range:
    for l in l_range:
      params = {'k': k, 'l': l}
      if l < 3 or k < 2:
        cases.append(CaseResult(params, 'skip',
                                reason='hypothesis: needs l >= 3 and k >= 2'))
        continue
      sys = make_system(2 ** max(work_l, l), 2 ** k)
      mod = 1 << l
      row = (l - 1) * 2 ** (k - 1)
      s1 = l * 2 ** (k - 2) + 1
      s2 = l * 2 ** (k - 2) - 2 ** (k - 1) + 1
      a, b = coeff_at(sys, row, s1), coeff_at(sys, row, s2)
      if (a + b) % mod:
        cases.append(CaseResult(
          params, 'fail',
          witness={'row': row, 'columns': [s1, s2],
                   'cells': [a % mod, b % mod]}))
      else:
        cases.append(CaseResult(params, 'pass',
                                observed={'row': row, 'columns': [s1, s2]}))
  return _finish('coeff_pair_sum2',
                 {'k': _range_param(k_range), 'l': _range_param(l_range)},
                 cases, started)


def verify_half_modulus_pivot(k_range=range(2, 7),
                              l_range=range(2, 7)) -> CheckReport:
  '''a(l * 2^(k-1), l * 2^(k-2) + 1) is exactly 2^(l-1) mod 2^l;
  hypotheses l >= 2 and k >= 2.'''
  started = time.perf_counter()
  work_l = _working_table_modulus(l_range)
  cases = []
  for k in k_range:
    for l in l_range:
      params = {'k': k, 'l': l}
      if l < 2 or k < 2:
        cases.append(CaseResult(params, 'skip',
                                reason='hypothesis: needs l >= 2 and k >= 2'))
        continue
      sys = make_system(2 ** max(work_l, l), 2 ** k)
      row = l * 2 ** (k - 1)
      col = l * 2 ** (k - 2) + 1
      value = coeff_at(sys, row, col) % (1 << l)
      if value == 1 << (l - 1):
        cases.append(CaseResult(params, 'pass',
                                observed={'row': row, 'col': col,
                                          'value': value}))
      else:
        cases.append(CaseResult(params, 'fail',
                                witness={'row': row, 'col': col,
                                         'value': value,
                                         'expected': 1 << (l - 1)}))
  return _finish('half_modulus_pivot',
                 {'k': _range_param(k_range), 'l': _range_param(l_range)},
                 cases, started)


# --- the runner --------------------------------------------------------

CHECK_NAMES = ('main', 'lower', 'bound', 'l2', 'kernel', 'subgroup',
               'preds', 'binom', 'sum1', 'sum2', 'pivot')

DEFAULT_SYSTEMS = tuple(
  (m, n) for m in range(2, 7) for n in range(1, 9) if m ** n <= 1 << 16)


def _bounded(lo, hi, default_lo, default_hi):
  return range(default_lo if lo is None else lo,
               (default_hi if hi is None else hi) + 1)


def run_checks(names=None, *, k_min=None, k_max=None, l_min=None, l_max=None,
               j_min=None, j_max=None, n_max=None, samples: int = 100,
               seed: int = 0, systems=None,
               max_states: int = ENUM_NODE_CAP) -> list[CheckReport]:
  '''Run the named checks (all of them by default) and return reports
  sorted by check id and parameters.

  Range arguments override only the endpoints a caller provides; every
  check keeps its own documented default sweep otherwise.
  '''
  selected = list(names) if names else list(CHECK_NAMES)
  if 'all' in selected:
    selected = list(CHECK_NAMES)
  unknown = [name for name in selected if name not in CHECK_NAMES]
  if unknown:
    raise ValueError(f'unknown check names: {unknown}')
  pairs = list(DEFAULT_SYSTEMS) if systems is None else list(systems)
  reports: list[CheckReport] = []
  for name in selected:
    if name == 'main':
      reports.append(verify_length_formula(
        _bounded(k_min, k_max, 1, 5), _bounded(l_min, l_max, 1, 6)))
    elif name == 'lower':
      reports.append(verify_length_lower_bound(
        _bounded(k_min, k_max, 1, 5), _bounded(l_min, l_max, 1, 6)))
    elif name == 'bound':
      reports.append(verify_vanishing_bound(
        _bounded(k_min, k_max, 1, 5), _bounded(l_min, l_max, 1, 6),
        samples=samples, seed=seed))
    elif name == 'l2':
      reports.append(verify_binary_length_formula(16 if n_max is None
                                                  else n_max))
    elif name == 'kernel':
      reports.append(verify_trivial_kernel(
        _bounded(k_min, k_max, 1, 5), _bounded(l_min, l_max, 1, 6),
        max_states=max_states))
    elif name == 'subgroup':
      for m, n in pairs:
        reports.append(verify_cycle_subgroup(m, n, max_states=max_states))
    elif name == 'preds':
      for m, n in pairs:
        reports.append(verify_predecessor_count(m, n,
                                                max_states=max_states))
    elif name == 'binom':
      reports.append(verify_binomial_congruences(
        _bounded(j_min, j_max, 2, 16)))
    elif name == 'sum1':
      reports.append(verify_coeff_pair_sum1(
        _bounded(k_min, k_max, 1, 6), _bounded(l_min, l_max, 1, 6)))
    elif name == 'sum2':
      reports.append(verify_coeff_pair_sum2(
        _bounded(k_min, k_max, 2, 6), _bounded(l_min, l_max, 3, 6)))
    elif name == 'pivot':
      reports.append(verify_half_modulus_pivot(
        _bounded(k_min, k_max, 2, 6), _bounded(l_min, l_max, 2, 6)))
  reports.sort(key=lambda r: (r.check_id,
                              json.dumps(r.parameters, sort_keys=True)))
  return reports


def reports_to_jsonl(reports, include_elapsed: bool = False) -> str:
  '''One JSON object per line, stable key order, no timing data unless
  requested (timings would break byte-identical reruns).'''
  return '\n'.join(
    json.dumps(r.to_json_obj(include_elapsed), separators=(',', ':'))
    for r in reports) + '\n'


def summary_table(reports) -> str:
  '''Aligned text table: check id, case tallies, verdict, elapsed.'''
  header = ('check_id', 'cases', 'pass', 'fail', 'skip', 'verdict', 'elapsed')
  rows = [header]
  for r in reports:
    tally = {'pass': 0, 'fail': 0, 'skip': 0}
    for case in r.cases:
      tally[case.verdict] += 1
    rows.append((r.check_id, str(len(r.cases)), str(tally['pass']),
                 str(tally['fail']), str(tally['skip']), r.verdict,
                 f'{r.elapsed:.3f}s'))
  widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
  lines = []
  for row in rows:
    lines.append('  '.join(cell.ljust(widths[i])
                           for i, cell in enumerate(row)).rstrip())
  return '\n'.join(lines) + '\n'


def exit_code(reports) -> int:
  '''0 when everything passed or was a hypothesis skip, 1 on any
  failure, 3 when caps prevented a full verdict.'''
  if any(r.verdict == 'fail' for r in reports):
    return 1
  for r in reports:
    for case in r.cases:
      if case.verdict == 'skip' and (case.reason or '').startswith('cap'):
        return 3
  return 0
