'''Command-line front end.

Every public operation is reachable from one of the subcommands:

  step    apply the pair-sum map r times (optionally via the
          coefficient expansion), with scale/add/rotate pre-ops
  orbit   pre-period, period, tail, and cycle of a tuple
  basic   the tuple (0,...,0,1) and its pre-period/period
  preds   all one-step predecessors of a tuple
  kernel  the cycle states of the whole system
  coeff   iteration-coefficient tables, single cells, and views
  binom   one binomial coefficient modulo a power of two
  graph   the full transition graph or one component, as DOT/CSV
  verify  the identity checks, as JSON lines or a summary table

Systems are named either directly (--m 4 --n 3) or, for power-of-two
sweeps, as exponents (--k 2 --l 2 meaning n = 2^k, m = 2^l); exactly
one of the two spellings per invocation.  Tuples are accepted with or
without parentheses and are reduced mod m (with a warning on stderr
when reduction changed an entry).

Exit codes: 0 success (or all checks pass / hypothesis-skip), 1 check
failure, 2 usage error, 3 cap exceeded.  Identical invocations give
byte-identical stdout for the machine formats (json, csv, dot); the
verify text summary includes wall-clock timings and is exempt.
'''

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coeffs import (CoeffView, apply_coeff_expansion, binom_mod_pow2,
                     coeff_at, coeff_table, coeff_view)
from .core import (DucciSystem, ResidueTuple, add, basic_tuple, ducci_iter,
                   format_tuple, make_system, parse_tuple, reduce_tuple,
                   scale, shift)
from .errors import CapExceededError, ParameterError
from .graphs import build_graph, component_of, to_dot, to_edge_csv, weak_components
from .limits import ENUM_NODE_CAP, ORBIT_VISIT_CAP
from .orbits import kernel_set, orbit_summary, predecessors, vanishes
from .verify import CHECK_NAMES, exit_code, reports_to_jsonl, run_checks, summary_table

__all__ = ['main', 'build_parser']

_JSON_SEP = (',', ':')


def _add_system_flags(sub: argparse.ArgumentParser) -> None:
  group = sub.add_argument_group('system')
  group.add_argument('--m', type=int, help='modulus (with --n)')
  group.add_argument('--n', type=int, help='tuple length (with --m)')
  group.add_argument('--k', type=int, help='tuple length exponent, n = 2^k')
  group.add_argument('--l', type=int, help='modulus exponent, m = 2^l')


def _add_output_flag(sub: argparse.ArgumentParser) -> None:
  sub.add_argument('-o', '--output', metavar='PATH',
                   help='write to PATH instead of standard output')


def _system_from_args(sub: argparse.ArgumentParser,
                      args: argparse.Namespace) -> DucciSystem:
  direct = args.m is not None or args.n is not None
  exponent = args.k is not None or args.l is not None
  if direct == exponent:
    sub.error('name the system with either --m/--n or --k/--l')
  if direct:
    if args.m is None or args.n is None:
      sub.error('--m and --n go together')
    return make_system(args.m, args.n)
  if args.k is None or args.l is None:
    sub.error('--k and --l go together')
  if args.k < 0 or args.l < 1:
    sub.error('need k >= 0 and l >= 1')
  return make_system(2 ** args.l, 2 ** args.k)


def _tuple_from_args(sub: argparse.ArgumentParser, sys_: DucciSystem,
                     text: str) -> ResidueTuple:
  entries = parse_tuple(text)
  reduced = reduce_tuple(sys_, entries)
  if len(entries) != sys_.n:
    sub.error(f'tuple has {len(entries)} entries, system needs {sys_.n}')
  if tuple(entries) != reduced:
    print(f'warning: entries reduced mod {sys_.m}: '
          f'{format_tuple(entries)} -> {format_tuple(reduced)}',
          file=sys.stderr)
  return reduced


def _emit(text: str, output: str | None) -> None:
  if output is None:
    sys.stdout.write(text)
  else:
    Path(output).write_text(text, encoding='utf-8')


def _json_line(obj) -> str:
  return json.dumps(obj, separators=_JSON_SEP) + '\n'


# --- subcommand bodies --------------------------------------------------

def _cmd_step(sub, args) -> int:
  sys_ = _system_from_args(sub, args)
  u = _tuple_from_args(sub, sys_, args.tuple)
  if args.r < 0:
    sub.error('--r must be >= 0')
  if args.scale is not None:
    u = scale(sys_, args.scale, u)
  if args.add is not None:
    u = add(sys_, u, _tuple_from_args(sub, sys_, args.add))
  for _ in range(args.shift):
    u = shift(sys_, u)
  if args.via == 'coeffs':
    result = apply_coeff_expansion(sys_, u, args.r)
  else:
    result = ducci_iter(sys_, u, args.r)
  if args.format == 'json':
    _emit(_json_line(list(result)), args.output)
  else:
    _emit(format_tuple(result) + '\n', args.output)
  return 0


def _cmd_orbit(sub, args) -> int:
  sys_ = _system_from_args(sub, args)
  u = _tuple_from_args(sub, sys_, args.tuple)
  if args.vanishes:
    flag = vanishes(sys_, u, max_states=args.max_states)
    _emit(('true' if flag else 'false') + '\n', args.output)
    return 0
  summary = orbit_summary(sys_, u, max_states=args.max_states)
  if args.format == 'json':
    _emit(_json_line(summary.to_json_obj()), args.output)
  else:
    lines = [f'len {summary.len}', f'per {summary.per}',
             'tail ' + ' '.join(format_tuple(t) for t in summary.tail),
             'cycle ' + ' '.join(format_tuple(t) for t in summary.cycle)]
    _emit('\n'.join(lines) + '\n', args.output)
  return 0


def _cmd_basic(sub, args) -> int:
  sys_ = _system_from_args(sub, args)
  u = basic_tuple(sys_)
  summary = orbit_summary(sys_, u, max_states=args.max_states)
  if args.format == 'json':
    _emit(_json_line({'tuple': format_tuple(u), 'len': summary.len,
                      'per': summary.per}), args.output)
  else:
    _emit(f'tuple {format_tuple(u)}\nlen {summary.len}\n'
          f'per {summary.per}\n', args.output)
  return 0


def _cmd_preds(sub, args) -> int:
  sys_ = _system_from_args(sub, args)
  u = _tuple_from_args(sub, sys_, args.tuple)
  found = predecessors(sys_, u)
  if args.format == 'json':
    _emit(_json_line([list(v) for v in found]), args.output)
  else:
    _emit(''.join(format_tuple(v) + '\n' for v in found), args.output)
  return 0


def _cmd_kernel(sub, args) -> int:
  sys_ = _system_from_args(sub, args)
  kernel = kernel_set(sys_, max_states=args.max_states)
  if args.format == 'json':
    _emit(_json_line(kernel.to_json_obj()), args.output)
  else:
    _emit(''.join(format_tuple(v) + '\n'
                  for v in kernel.sorted_members()), args.output)
  return 0


def _parse_int_list(sub, text: str, want: int, what: str) -> list[int]:
  parts = [p.strip() for p in text.split(',')]
  if len(parts) != want or not all(p.lstrip('-').isdigit() for p in parts):
    sub.error(f'{what} needs {want} comma-separated integers, got {text!r}')
  return [int(p) for p in parts]


def _cmd_coeff(sub, args) -> int:
  sys_ = _system_from_args(sub, args)
  chosen = [x for x in (args.r_max, args.at, args.view) if x is not None]
  if len(chosen) != 1:
    sub.error('pick exactly one of --r-max, --at, --view')
  if args.r_max is not None:
    if args.r_max < 0:
      sub.error('--r-max must be >= 0')
    table = coeff_table(sys_, args.r_max)
    if args.format == 'json':
      rows = {str(r): list(table.rows[r]) for r in range(args.r_max + 1)}
      _emit(_json_line(rows), args.output)
    else:
      _emit(table.to_csv(), args.output)
    return 0
  if args.at is not None:
    r, s = _parse_int_list(sub, args.at, 2, '--at')
    if r < 0:
      sub.error('row must be >= 0')
    value = coeff_at(sys_, r, s)
    if args.format == 'json':
      _emit(_json_line({'r': r, 's': s, 'value': value}), args.output)
    else:
      _emit(f'{value}\n', args.output)
    return 0
  kind, _, rest = args.view.partition(':')
  if kind not in ('f', 'g', 'h') or not rest:
    sub.error("--view looks like 'f:gamma,delta', 'g:gamma,eps,delta', "
              "or 'h:gamma,delta'")
  params = _parse_int_list(sub, rest, 3 if kind == 'g' else 2, '--view')
  if kind == 'g':
    view = CoeffView(kind, params[0], params[2], eps=params[1])
  else:
    view = CoeffView(kind, params[0], params[1])
  value = coeff_view(sys_, view)
  if args.format == 'json':
    _emit(_json_line({'view': args.view, 'value': value}), args.output)
  else:
    _emit(f'{value}\n', args.output)
  return 0


def _cmd_binom(sub, args) -> int:
  if args.big < 0 or args.small < 0 or args.mod_exp < 1:
    sub.error('need N >= 0, K >= 0, L >= 1')
  value = binom_mod_pow2(args.big, args.small, args.mod_exp)
  if args.format == 'json':
    _emit(_json_line({'n': args.big, 'k': args.small, 'l': args.mod_exp,
                      'value': value}), args.output)
  else:
    _emit(f'{value}\n', args.output)
  return 0


def _cmd_graph(sub, args) -> int:
  sys_ = _system_from_args(sub, args)
  graph = build_graph(sys_, max_nodes=args.max_nodes)
  if args.component is not None:
    graph = component_of(graph, _tuple_from_args(sub, sys_, args.component))
  if args.format == 'dot':
    _emit(to_dot(graph), args.output)
  elif args.format == 'csv':
    _emit(to_edge_csv(graph), args.output)
  else:
    summary = {'nodes': graph.node_count, 'edges': graph.edge_count,
               'components': len(weak_components(graph))}
    if args.format == 'json':
      _emit(_json_line(summary), args.output)
    else:
      _emit(''.join(f'{key} {val}\n' for key, val in summary.items()),
            args.output)
  return 0


def _cmd_verify(sub, args) -> int:
  systems = None
  if args.m is not None or args.n is not None:
    if args.m is None or args.n is None:
      sub.error('--m and --n go together')
    systems = [(args.m, args.n)]
  names = None if args.check == 'all' else [args.check]
  reports = run_checks(
    names, k_min=args.k_min, k_max=args.k_max, l_min=args.l_min,
    l_max=args.l_max, j_min=args.j_min, j_max=args.j_max, n_max=args.n_max,
    samples=args.samples, seed=args.seed, systems=systems,
    max_states=args.max_states)
  if args.format == 'text':
    _emit(summary_table(reports), args.output)
  else:
    _emit(reports_to_jsonl(reports), args.output)
  return exit_code(reports)


# --- parser -------------------------------------------------------------

def build_parser() -> tuple[argparse.ArgumentParser, dict]:
  parser = argparse.ArgumentParser(
    prog='ducci',
    description='Exact pair-sum (Ducci) dynamics on Z_m^n.')
  subs = parser.add_subparsers(dest='command', metavar='COMMAND')
  table: dict[str, argparse.ArgumentParser] = {}

  def new_sub(name: str, help_: str, *, system: bool = True,
              formats: tuple[str, ...] = ('json', 'text'),
              default_format: str = 'json') -> argparse.ArgumentParser:
    sub = subs.add_parser(name, help=help_, description=help_)
    if system:
      _add_system_flags(sub)
    sub.add_argument('--format', choices=formats, default=default_format,
                     help=f'output format (default {default_format})')
    _add_output_flag(sub)
    table[name] = sub
    return sub

  sub = new_sub('step', 'apply the pair-sum map r times')
  sub.add_argument('-t', '--tuple', required=True,
                   help='starting tuple, e.g. "(3,1,3)" or 3,1,3')
  sub.add_argument('--r', type=int, default=1, help='step count (default 1)')
  sub.add_argument('--via', choices=('direct', 'coeffs'), default='direct',
                   help='direct iteration or the coefficient expansion')
  sub.add_argument('--scale', type=int, metavar='LAMBDA',
                   help='first multiply every entry by LAMBDA')
  sub.add_argument('--add', metavar='TUPLE',
                   help='then add TUPLE entrywise')
  sub.add_argument('--shift', type=int, default=0, metavar='COUNT',
                   help='then rotate left COUNT times')

  sub = new_sub('orbit', 'pre-period, period, tail, and cycle of a tuple')
  sub.add_argument('-t', '--tuple', required=True, help='starting tuple')
  sub.add_argument('--vanishes', action='store_true',
                   help='print only whether the orbit ends at zero')
  sub.add_argument('--max-states', type=int, default=ORBIT_VISIT_CAP,
                   help='orbit visit cap')

  sub = new_sub('basic', 'the tuple (0,...,0,1) and its length/period')
  sub.add_argument('--max-states', type=int, default=ORBIT_VISIT_CAP,
                   help='orbit visit cap')

  sub = new_sub('preds', 'one-step predecessors of a tuple')
  sub.add_argument('-t', '--tuple', required=True, help='target tuple')

  sub = new_sub('kernel', 'all cycle states of the system')
  sub.add_argument('--max-states', type=int, default=ENUM_NODE_CAP,
                   help='state enumeration cap')

  sub = new_sub('coeff', 'iteration-coefficient table, cell, or view',
                formats=('csv', 'json', 'text'), default_format='csv')
  sub.add_argument('--r-max', type=int, metavar='R',
                   help='dump rows 0..R as CSV')
  sub.add_argument('--at', metavar='R,S', help='one cell, row and column')
  sub.add_argument('--view', metavar='KIND:ARGS',
                   help="half-turn view: 'f:gamma,delta', "
                        "'g:gamma,eps,delta', or 'h:gamma,delta'")

  sub = new_sub('binom', 'binomial coefficient modulo a power of two',
                system=False)
  sub.add_argument('big', type=int, metavar='N')
  sub.add_argument('small', type=int, metavar='K')
  sub.add_argument('mod_exp', type=int, metavar='L',
                   help='modulus exponent, result is mod 2^L')

  sub = new_sub('graph', 'transition graph as DOT, edge CSV, or summary',
                formats=('dot', 'csv', 'json', 'text'), default_format='dot')
  sub.add_argument('--component', metavar='TUPLE',
                   help='restrict to the weak component of TUPLE')
  sub.add_argument('--max-nodes', type=int, default=ENUM_NODE_CAP,
                   help='node cap')

  sub = new_sub('verify', 'run identity checks, print reports',
                system=False, formats=('json', 'text'),
                default_format='json')
  sub.add_argument('check', nargs='?', default='all',
                   choices=CHECK_NAMES + ('all',),
                   help='which check to run (default all)')
  sub.add_argument('--k-min', type=int)
  sub.add_argument('--k-max', type=int)
  sub.add_argument('--l-min', type=int)
  sub.add_argument('--l-max', type=int)
  sub.add_argument('--j-min', type=int)
  sub.add_argument('--j-max', type=int)
  sub.add_argument('--n-max', type=int)
  sub.add_argument('--samples', type=int, default=100,
                   help='tuples per randomized case (default 100)')
  sub.add_argument('--seed', type=int, default=0,
                   help='sample seed (default 0)')
  sub.add_argument('--m', type=int, help='restrict system checks (with --n)')
  sub.add_argument('--n', type=int, help='restrict system checks (with --m)')
  sub.add_argument('--max-states', type=int, default=ENUM_NODE_CAP,
                   help='state enumeration cap')

  return parser, table


_DISPATCH = {
  'step': _cmd_step, 'orbit': _cmd_orbit, 'basic': _cmd_basic,
  'preds': _cmd_preds, 'kernel': _cmd_kernel, 'coeff': _cmd_coeff,
  'binom': _cmd_binom, 'graph': _cmd_graph, 'verify': _cmd_verify,
}


def main(argv=None) -> int:
  parser, table = build_parser()
  try:
    args = parser.parse_args(argv)
    if args.command is None:
      parser.error('a COMMAND is required')
    sub = table[args.command]
    try:
      return _DISPATCH[args.command](sub, args)
    except ParameterError as exc:
      sub.error(str(exc))
  except SystemExit as exc:
    return exc.code if isinstance(exc.code, int) else 2
  except CapExceededError as exc:
    print(f'error: {exc}', file=sys.stderr)
    return 3
  except BrokenPipeError:
    return 0
  return 0


if __name__ == '__main__':
  sys.exit(main())
