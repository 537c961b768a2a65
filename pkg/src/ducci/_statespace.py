'''Bulk helpers over the full state space of Z_m^n.

States are indexed by integers using big-endian digits (entry 1 is the
most significant), so ascending index order equals lexicographic order
of the tuples.  Everything here is internal plumbing for the orbit,
graph and verification modules.
'''

from __future__ import annotations

from collections import deque

import numpy as np

from .errors import CapExceededError
from .limits import ENUM_NODE_CAP


def check_cap(required: int, cap: int, what: str) -> None:
  if required > cap:
    raise CapExceededError(
      f'{what} needs {required} states, cap is {cap}',
      required=required, cap=cap)


def encode(u, m: int) -> int:
  code = 0
  for digit in u:
    code = code * m + digit
  return code


def decode(code: int, m: int, n: int) -> tuple[int, ...]:
  digits = []
  for _ in range(n):
    code, d = divmod(code, m)
    digits.append(d)
  return tuple(reversed(digits))


def successor_array(m: int, n: int, cap: int = ENUM_NODE_CAP) -> np.ndarray:
  '''Index of the pair-sum image for every state index, as int64.'''
  count = m ** n
  check_cap(count, cap, f'enumerating Z_{m}^{n}')
  idx = np.arange(count, dtype=np.int64)
  succ = np.zeros(count, dtype=np.int64)
  first = (idx // (m ** (n - 1))) % m
  cur = first
  for i in range(n):
    if i == n - 1:
      nxt = first
    else:
      nxt = (idx // (m ** (n - 2 - i))) % m
    succ += ((cur + nxt) % m) * (m ** (n - 1 - i))
    cur = nxt
  return succ


def states_matrix(m: int, n: int, cap: int = ENUM_NODE_CAP) -> np.ndarray:
  '''All states as an (m**n, n) int64 matrix in lexicographic order.'''
  count = m ** n
  check_cap(count, cap, f'enumerating Z_{m}^{n}')
  idx = np.arange(count, dtype=np.int64)
  cols = [(idx // (m ** (n - 1 - i))) % m for i in range(n)]
  return np.stack(cols, axis=1)


def batch_step(states: np.ndarray, m: int) -> np.ndarray:
  '''Pair-sum map applied to every row of an (N, n) state matrix.'''
  return (states + np.roll(states, -1, axis=1)) % m


def batch_iter(states: np.ndarray, m: int, r: int) -> np.ndarray:
  for _ in range(r):
    states = batch_step(states, m)
  return states


def cycle_mask(succ: np.ndarray) -> tuple[list[bool], list[int]]:
  '''Peel in-degree-0 states until only cycle states remain.

  Returns (on_cycle flags, successor list).  A state survives peeling
  exactly when it lies on a cycle of the transition graph.
  '''
  succ_list = succ.tolist()
  indeg = np.bincount(succ, minlength=len(succ_list)).tolist()
  stack = [v for v, d in enumerate(indeg) if d == 0]
  while stack:
    v = stack.pop()
    w = succ_list[v]
    indeg[w] -= 1
    if indeg[w] == 0:
      stack.append(w)
  return [d > 0 for d in indeg], succ_list


def tail_cycle_tables(succ: np.ndarray) -> tuple[list[int], list[int], list[bool]]:
  '''Per-state (steps to reach a cycle, cycle length, on-cycle flag).'''
  on_cycle, succ_list = cycle_mask(succ)
  count = len(succ_list)
  lens = [0] * count
  pers = [0] * count
  labeled = [False] * count
  for v in range(count):
    if on_cycle[v] and not labeled[v]:
      cyc = [v]
      labeled[v] = True
      w = succ_list[v]
      while w != v:
        labeled[w] = True
        cyc.append(w)
        w = succ_list[w]
      for node in cyc:
        pers[node] = len(cyc)
  preds: list[list[int]] = [[] for _ in range(count)]
  for v in range(count):
    if not on_cycle[v]:
      preds[succ_list[v]].append(v)
  queue = deque(v for v in range(count) if on_cycle[v])
  while queue:
    w = queue.popleft()
    for v in preds[w]:
      lens[v] = lens[w] + 1
      pers[v] = pers[w]
      queue.append(v)
  return lens, pers, on_cycle
