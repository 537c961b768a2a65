'''A guided walk through one small system, Z_4^3.

Follows the orbit of (3,1,3) into its three-cycle, inspects the
pre-period and period, inverts the map where possible, and finishes
with the cycle subgroup of the whole system.

Run: python3 demos/orbit_tour.py
'''

from ducci import (build_graph, component_of, ducci_step, format_tuple,
                   kernel_set, make_system, orbit_summary, predecessors,
                   to_dot)

sys = make_system(4, 3)
start = (3, 1, 3)

print(f'system: Z_{sys.m}^{sys.n}  ({sys.m ** sys.n} states)')
print(f'start:  {format_tuple(start)}')
print()

print('The pair-sum step sends (x1,x2,x3) to (x1+x2, x2+x3, x3+x1) mod 4.')
state = start
for r in range(1, 7):
  state = ducci_step(sys, state)
  print(f'  after {r} step{"s" if r > 1 else " "}: {format_tuple(state)}')
print()

summary = orbit_summary(sys, start)
print(f'pre-period {summary.len}, period {summary.per}')
print('tail :', ' '.join(format_tuple(u) for u in summary.tail))
print('cycle:', ' '.join(format_tuple(u) for u in summary.cycle))
print()

print('Walking backwards instead: which states map TO a given state?')
for target in [(0, 0, 2), (3, 1, 3)]:
  preds = predecessors(sys, target)
  shown = ' '.join(format_tuple(p) for p in preds) or '(none)'
  print(f'  {format_tuple(target)} <- {shown}')
print('States with no predecessor, like (3,1,3) itself, are "garden of')
print('Eden" states: every orbit begins outside the image of the map.')
print()

kernel = kernel_set(sys)
print(f'cycle subgroup: {kernel.order} of {sys.m ** sys.n} states live on')
print('cycles, and they form a group under entrywise addition mod 4:')
members = sorted(kernel.members)
print(' ', ' '.join(format_tuple(u) for u in members[:9]))
print(' ', ' '.join(format_tuple(u) for u in members[9:]))
print()

component = component_of(build_graph(sys), start)
print(f'The component of {format_tuple(start)} has {len(component.nodes)}'
      f' states; its DOT drawing:')
print()
print(to_dot(component))
