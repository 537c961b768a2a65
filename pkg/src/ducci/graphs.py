'''Transition graphs of the pair-sum map, with DOT and CSV export.

Every state has exactly one out-edge (to its image), so each weakly
connected component contains exactly one cycle and the union of those
cycles over all components is the kernel of the system.
'''

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import DucciSystem, ResidueTuple, _step, format_tuple, validate_tuple
from .errors import CapExceededError, ParameterError
from .limits import ENUM_NODE_CAP

__all__ = [
  'TransitionGraph', 'build_graph', 'component_of', 'weak_components',
  'to_dot', 'to_edge_csv',
]


@dataclass(frozen=True)
class TransitionGraph:
  '''A set of states with their out-edges under the pair-sum map.

  `nodes` is lexicographically sorted; `edges` holds one (u, image)
  pair per node, aligned with `nodes`; `indegree` covers every node,
  zeros included.
  '''

  sys: DucciSystem
  nodes: tuple[ResidueTuple, ...]
  edges: tuple[tuple[ResidueTuple, ResidueTuple], ...]
  indegree: dict[ResidueTuple, int]

  @property
  def node_count(self) -> int:
    return len(self.nodes)

  @property
  def edge_count(self) -> int:
    return len(self.edges)


def _graph_from_nodes(sys: DucciSystem,
                      nodes: list[ResidueTuple]) -> TransitionGraph:
  m = sys.m
  edges = tuple((u, _step(u, m)) for u in nodes)
  indeg = {u: 0 for u in nodes}
  for _, target in edges:
    indeg[target] += 1
  return TransitionGraph(sys, tuple(nodes), edges, indeg)


def build_graph(sys: DucciSystem, *,
                max_nodes: int = ENUM_NODE_CAP) -> TransitionGraph:
  '''The full transition graph on all m^n states.'''
  count = sys.state_count
  if count > max_nodes:
    raise CapExceededError(
      f'{sys} has {count} states, node cap is {max_nodes}',
      required=count, cap=max_nodes)
  nodes = list(product(range(sys.m), repeat=sys.n))
  return _graph_from_nodes(sys, nodes)


def component_of(graph: TransitionGraph,
                 u: ResidueTuple) -> TransitionGraph:
  '''The weakly connected component of `u`, as its own graph.

  In-degrees within a component equal those in the full graph, since
  every predecessor of a node belongs to the same component.
  '''
  start = validate_tuple(graph.sys, u)
  if start not in graph.indegree:
    raise ParameterError(f'{format_tuple(start)} is not in this graph')
  neighbours: dict[ResidueTuple, list[ResidueTuple]] = {
    v: [] for v in graph.nodes}
  for source, target in graph.edges:
    neighbours[source].append(target)
    neighbours[target].append(source)
  seen = {start}
  frontier = [start]
  while frontier:
    node = frontier.pop()
    for other in neighbours[node]:
      if other not in seen:
        seen.add(other)
        frontier.append(other)
  return _graph_from_nodes(graph.sys, sorted(seen))


def weak_components(graph: TransitionGraph) -> list[TransitionGraph]:
  '''All weakly connected components, ordered by their smallest node.'''
  remaining = set(graph.nodes)
  out = []
  for node in graph.nodes:
    if node in remaining:
      comp = component_of(graph, node)
      out.append(comp)
      remaining.difference_update(comp.nodes)
  return out


def to_dot(graph: TransitionGraph) -> str:
  '''DOT text: node lines in lexicographic order, then edge lines in
  source order.  Output is byte-stable for a given graph.'''
  lines = ['digraph ducci {']
  for node in graph.nodes:
    lines.append(f'  "{format_tuple(node)}";')
  for source, target in graph.edges:
    lines.append(f'  "{format_tuple(source)}" -> "{format_tuple(target)}";')
  lines.append('}')
  return '\n'.join(lines) + '\n'


def to_edge_csv(graph: TransitionGraph) -> str:
  '''Edge list as CSV with header source,target; fields are quoted
  because canonical tuple text contains commas.'''
  lines = ['source,target']
  for source, target in graph.edges:
    lines.append(f'"{format_tuple(source)}","{format_tuple(target)}"')
  return '\n'.join(lines) + '\n'
