#!/usr/bin/python3

"""
This module contains the classes and functions that model a Parallel
Generalized Fat-Tree (PGFT): the PGFT(h; m; w; p) parameter family, the
addressed switches at every level, the typed end-nodes, the ports and parallel
links between them, and the structural queries the routing and metric layers
rely on. A Topology can be built directly from a Pgft_Params object or loaded
from an .ini config file such as data/case_study.ini.

Stage-indexed arrays are used throughout: stage 0 is the node-to-leaf stage,
so m[0] is the number of end-nodes per leaf, w[l+1] is the number of distinct
parents of a level-l switch, and p[l] is the number of parallel links between a
level-l switch and each of its children.
"""

import collections
import itertools
import logging
import math
import re

import iniconfig
import networkx as nx

import pgftroute.exceptions as excpt
import pgftroute.utility as util


__name__ = 'pgftroute.topology'

log = logging.getLogger(__name__)


UP = 'up'

DOWN = 'down'

DEFAULT_TYPE_LABEL = 'compute'

# Edge colors used by to_dot() for highlighted route classes. Links shared by
# more than one class are drawn in SHARED_LINK_COLOR.
HIGHLIGHT_PALETTE = ('#e41a1c', '#377eb8', '#4daf4a', '#984ea3', '#ff7f00', '#a65628', '#f781bf', '#999999')

SHARED_LINK_COLOR = 'black'


# This regular expression matches the PGFT notation, e.g.
# 'PGFT(3; 8,4,2; 1,2,1; 1,1,4)'. The three lists are validated separately by
# util.parse_int_list() so the error message can say which one is malformed.

_pgft_spec_re = re.compile(r"""^\s*PGFT\s*\(
                                \s*([0-9]+)\s*;
                                ([^;()]*);
                                ([^;()]*);
                                ([^;()]*)
                            \)\s*$""", re.X)

_nid_mod_rule_re = re.compile(r'^nid_mod\s+([0-9]+)\s+([0-9]+)$')

_nid_list_rule_re = re.compile(r'^nid_list\s+(.+)$')


class Pgft_Params(object):
    """
This class represents one member of the PGFT family: the level count h and the
stage-indexed sequences of down-arities m, up-arities w and parallel-link
multiplicities p. Instances are immutable and hashable.
    """
    __slots__ = 'h', 'm', 'w', 'p'

    def __init__(self, m, w, p, h=None):
        """
This __init__ method validates and stores the PGFT parameters.

:m: The down-arities, stage 0 first.
:w: The up-arities, stage 0 first; w[0] must be 1.
:p: The parallel-link multiplicities, stage 0 first.
:h: The level count. If given, it must equal the length of each list.
        """
        m, w, p = tuple(m), tuple(w), tuple(p)
        if h is None:
            h = len(m)
        if h < 1:
            raise excpt.Invalid_Data_Exception('PGFT', 'the level count h must be a positive integer')
        for list_name, values in (('m', m), ('w', w), ('p', p)):
            if len(values) != h:
                raise excpt.Invalid_Data_Exception('PGFT', f'the {list_name} list has {len(values)} entries but h = {h}')
            if any(not isinstance(value, int) or value < 1 for value in values):
                raise excpt.Invalid_Data_Exception('PGFT', f'every entry of the {list_name} list must be a positive '
                                                           'integer')
        if w[0] != 1:
            raise excpt.Invalid_Data_Exception('PGFT', 'w[0] must be 1: each end-node attaches to exactly one leaf')
        object.__setattr__(self, 'h', h)
        object.__setattr__(self, 'm', m)
        object.__setattr__(self, 'w', w)
        object.__setattr__(self, 'p', p)

    def __setattr__(self, name, value):
        raise AttributeError(f'{type(self).__name__} is immutable')

    def __eq__(self, other):
        if not isinstance(other, Pgft_Params):
            return NotImplemented
        return (self.m, self.w, self.p) == (other.m, other.w, other.p)

    def __hash__(self):
        return hash((self.m, self.w, self.p))

    def __repr__(self):
        return f'Pgft_Params(m={self.m}, w={self.w}, p={self.p})'

    def __str__(self):
        lists = (','.join(map(str, values)) for values in (self.m, self.w, self.p))
        return f'PGFT({self.h};' + ';'.join(lists) + ')'

    @property
    def node_count(self):
        """
The number of end-nodes, the product of every down-arity.
        """
        return math.prod(self.m)

    @property
    def node_radices(self):
        """
The mixed radix of a NID, most significant first: (m[h-1], ..., m[1], m[0]).
        """
        return tuple(reversed(self.m))

    def group_product(self, level):
        """
This method returns the product of the up-arities w[1] through w[level]; it's
the divisor used by the Xmodk formulas. The empty product (level 0) is 1.

:level:  An int in [0, h).
:return: An int.
        """
        return math.prod(self.w[1:level + 1])

    def switch_count(self, level):
        """
This method returns the number of switches at a level, which is the product of
w[0..level] times the product of m[level+1..h-1].

:level:  An int in [0, h).
:return: An int.
        """
        self._check_level(level)
        return math.prod(self.w[:level + 1]) * math.prod(self.m[level + 1:])

    def down_port_count(self, level):
        """
The number of down slots of a switch at the given level: m[level] * p[level].
        """
        self._check_level(level)
        return self.m[level] * self.p[level]

    def up_port_count(self, level):
        """
The number of up slots of a switch at the given level: w[level+1] * p[level+1],
or 0 for top switches.
        """
        self._check_level(level)
        if level == self.h - 1:
            return 0
        return self.w[level + 1] * self.p[level + 1]

    def _check_level(self, level):
        if not 0 <= level < self.h:
            raise excpt.Invalid_Data_Exception('PGFT', f'level {level} is outside [0, {self.h})')


def parse_pgft_spec(text):
    """
This function parses the PGFT notation, e.g. 'PGFT(3; 8,4,2; 1,2,1; 1,1,4)',
into a Pgft_Params object. Whitespace is tolerated anywhere between tokens.

>>> parse_pgft_spec('PGFT(3;8,4,2;1,2,1;1,1,4)')
Pgft_Params(m=(8, 4, 2), w=(1, 2, 1), p=(1, 1, 4))

:text:   The PGFT notation string.
:return: A Pgft_Params object.
    """
    match = _pgft_spec_re.match(text)
    if not match:
        raise excpt.Invalid_Data_Exception('PGFT', f"malformed PGFT notation '{text}'; expected "
                                                   "'PGFT(h; m-list; w-list; p-list)'")
    h_str, m_str, w_str, p_str = match.groups()
    m = util.parse_int_list(m_str, 'PGFT m-list')
    w = util.parse_int_list(w_str, 'PGFT w-list')
    p = util.parse_int_list(p_str, 'PGFT p-list')
    return Pgft_Params(m, w, p, h=int(h_str))


class Switch_Addr(collections.namedtuple('Switch_Addr', ('level', 'copy_digits', 'group_digits'))):
    """
This class represents a switch address. copy_digits is (c[h-1], ..., c[level+1])
with each c[i] in [0, m[i]); group_digits is (g[level], ..., g[1]) with each
g[k] in [0, w[k]). Every switch has h-1 digits in total; str() renders the
address as it's written in text, e.g. '(2,0,1)'.
    """
    __slots__ = ()

    @property
    def digits(self):
        return self.copy_digits + self.group_digits

    def __str__(self):
        return util.format_address(self.level, self.digits)


class Node_Id(collections.namedtuple('Node_Id', ('nid', 'type_label'))):
    """
This class represents an end-node: its NID and its node-type label.
    """
    __slots__ = ()

    def __str__(self):
        return f'nid{self.nid}'


class Port_Ref(collections.namedtuple('Port_Ref', ('switch', 'direction', 'slot'))):
    """
This class represents one port of a switch. Slots are 0-based and round-robin
ordered: down slot = round * m[level] + child index, up slot = round * w[level+1]
+ parent group digit, so the first w[level+1] up slots reach distinct parents
before any parallel link is reused.
    """
    __slots__ = ()


class Type_Rule(object):
    """
This class represents a node-type rule: a predicate on NIDs and the label given
to the NIDs it matches. Rules are read from 'type <label> = ...' config entries
of the form 'nid_mod <q> <r>' or 'nid_list <n,...>'; a bare callable can be
wrapped too.
    """
    __slots__ = 'label', 'kind', 'modulus', 'residue', 'nids', 'predicate'

    def __init__(self, label, kind, modulus=None, residue=None, nids=(), predicate=None):
        self.label = label
        self.kind = kind
        self.modulus = modulus
        self.residue = residue
        self.nids = frozenset(nids)
        self.predicate = predicate

    @classmethod
    def from_config_value(cls, label, value, source='config'):
        """
This factory method parses the value of a 'type <label>' config entry.

:label:  The node-type label.
:value:  Either 'nid_mod <q> <r>' or 'nid_list <n,...>'.
:source: Where the value came from, for error messages.
:return: A Type_Rule object.
        """
        value = value.strip()
        mod_match = _nid_mod_rule_re.match(value)
        if mod_match:
            modulus, residue = map(int, mod_match.groups())
            if modulus < 1 or residue >= modulus:
                raise excpt.Invalid_Data_Exception(source, f"type '{label}': nid_mod needs q >= 1 and 0 <= r < q")
            return cls(label, 'nid_mod', modulus=modulus, residue=residue)
        list_match = _nid_list_rule_re.match(value)
        if list_match:
            nids = util.parse_int_list(list_match.group(1), f"{source}: type '{label}'")
            return cls(label, 'nid_list', nids=nids)
        raise excpt.Invalid_Data_Exception(source, f"type '{label}': expected 'nid_mod <q> <r>' or "
                                                   f"'nid_list <n,...>', got '{value}'")

    @classmethod
    def from_predicate(cls, predicate, label):
        return cls(label, 'predicate', predicate=predicate)

    def matches(self, nid):
        if self.kind == 'nid_mod':
            return nid % self.modulus == self.residue
        elif self.kind == 'nid_list':
            return nid in self.nids
        return bool(self.predicate(nid))

    def __str__(self):
        if self.kind == 'nid_mod':
            return f'type {self.label} = nid_mod {self.modulus} {self.residue}'
        elif self.kind == 'nid_list':
            return f'type {self.label} = nid_list ' + ','.join(map(str, sorted(self.nids)))
        return f'type {self.label} = <predicate>'


class Topology(object):
    """
This class is the immutable model of a built PGFT: its parameters, every
switch at every level, the end-nodes in NID order with their type labels, and a
networkx MultiGraph of the links (one edge per parallel link, keyed by its
parallel round). Use build_topology() or load_topology_config() to get one.
    """
    __slots__ = 'params', 'nodes', 'type_rules', 'default_label', '_switches', '_graph'

    def __init__(self, params, nodes, type_rules, default_label, switches, graph):
        object.__setattr__(self, 'params', params)
        object.__setattr__(self, 'nodes', tuple(nodes))
        object.__setattr__(self, 'type_rules', tuple(type_rules))
        object.__setattr__(self, 'default_label', default_label)
        object.__setattr__(self, '_switches', tuple(tuple(level_switches) for level_switches in switches))
        object.__setattr__(self, '_graph', graph)

    def __setattr__(self, name, value):
        raise AttributeError('Topology is immutable')

    def __repr__(self):
        return f'Topology({self.params})'

    @property
    def node_count(self):
        return len(self.nodes)

    @property
    def labels(self):
        """
The known node-type labels: the default label first, then the rule labels in
order of first appearance. This is also the default grouping order.
        """
        labels = [self.default_label]
        for rule in self.type_rules:
            if rule.label not in labels:
                labels.append(rule.label)
        return tuple(labels)

    def switches(self, level=None):
        """
This method returns the switches of one level, or of every level (leaves
first) when level is None.

:level:  An int in [0, h), or None.
:return: A tuple of Switch_Addr objects.
        """
        if level is None:
            return tuple(itertools.chain.from_iterable(self._switches))
        self.params._check_level(level)
        return self._switches[level]

    def node(self, nid):
        self.check_nid(nid)
        return self.nodes[nid]

    def nodes_of_type(self, label):
        return tuple(node for node in self.nodes if node.type_label == label)

    def check_nid(self, nid, source='topology'):
        if not isinstance(nid, int) or not 0 <= nid < len(self.nodes):
            raise excpt.Invalid_Data_Exception(source, f'NID {nid} is outside [0, {len(self.nodes)})')

    def check_switch(self, switch, source='topology'):
        """
This method raises Invalid_Data_Exception if the given address is not a switch
of this topology.
        """
        params = self.params
        if not isinstance(switch, Switch_Addr) or not 0 <= switch.level < params.h:
            raise excpt.Invalid_Data_Exception(source, f'{switch!r} is not a switch address of {params}')
        copy_radices = params.m[switch.level + 1:][::-1]
        group_radices = params.w[1:switch.level + 1][::-1]
        if (len(switch.copy_digits) != len(copy_radices) or len(switch.group_digits) != len(group_radices)
                or any(not 0 <= digit < radix for digit, radix in zip(switch.copy_digits, copy_radices))
                or any(not 0 <= digit < radix for digit, radix in zip(switch.group_digits, group_radices))):
            raise excpt.Invalid_Data_Exception(source, f'{switch} is not a switch address of {params}')

    def node_digits(self, nid):
        """
This method decomposes a NID into the copy digits (c[h-1], ..., c[1]) that
identify its leaf, and its port rank on that leaf.

:nid:    An int NID.
:return: A 2-tuple of a tuple of ints and an int.
        """
        self.check_nid(nid)
        digits = util.int_to_digits(nid, self.params.node_radices)
        return digits[:-1], digits[-1]

    def leaf_of(self, nid):
        copy_digits, _ = self.node_digits(nid)
        return Switch_Addr(0, copy_digits, ())

    def is_ancestor(self, switch, nid):
        """
This method tests whether a switch lies above the given end-node, i.e. whether
its copy digits are a prefix of the node's leaf digits. A node's own leaf is
its lowest ancestor.
        """
        copy_digits, _ = self.node_digits(nid)
        return switch.copy_digits == copy_digits[:self.params.h - 1 - switch.level]

    @property
    def graph(self):
        return self._graph


def build_topology(params, type_rules=(), default_label=DEFAULT_TYPE_LABEL):
    """
This function constructs the addressed multigraph of a PGFT. Switch
(l, c[h-1]..c[l+1], g[l]..g[1]) is linked upward to
(l+1, c[h-1]..c[l+2], g[l+1], g[l]..g[1]) for every g[l+1] in [0, w[l+1]),
p[l+1] times. Every NID is labeled by the first type rule that matches it, or
default_label if none does.

:params:        A Pgft_Params object.
:type_rules:    A sequence of Type_Rule objects or (predicate, label) pairs.
:default_label: The label given to NIDs no rule matches.
:return:        A Topology object.
    """
    rules = []
    for rule in type_rules:
        if not isinstance(rule, Type_Rule):
            predicate, label = rule
            rule = Type_Rule.from_predicate(predicate, label)
        if rule.kind == 'nid_list' and any(nid >= params.node_count for nid in rule.nids):
            raise excpt.Invalid_Data_Exception('type rules', f"type '{rule.label}' lists a NID outside "
                                                             f'[0, {params.node_count})')
        rules.append(rule)

    nodes = []
    for nid in range(params.node_count):
        label = next((rule.label for rule in rules if rule.matches(nid)), default_label)
        nodes.append(Node_Id(nid, label))

    switches = []
    for level in range(params.h):
        copy_ranges = [range(radix) for radix in params.m[level + 1:][::-1]]
        group_ranges = [range(radix) for radix in params.w[1:level + 1][::-1]]
        switches.append([Switch_Addr(level, tuple(copy_digits), tuple(group_digits))
                         for copy_digits in itertools.product(*copy_ranges)
                         for group_digits in itertools.product(*group_ranges)])

    graph = nx.MultiGraph(name='pgft')
    for level_switches in switches:
        for switch in level_switches:
            graph.add_node(switch, kind='switch', level=switch.level)
    for node in nodes:
        graph.add_node(node, kind='node', type_label=node.type_label)
        leaf = Switch_Addr(0, util.int_to_digits(node.nid, params.node_radices)[:-1], ())
        for parallel_round in range(params.p[0]):
            graph.add_edge(node, leaf, key=parallel_round)
    for level in range(params.h - 1):
        for switch in switches[level]:
            for group_digit in range(params.w[level + 1]):
                parent = Switch_Addr(level + 1, switch.copy_digits[:-1], (group_digit,) + switch.group_digits)
                for parallel_round in range(params.p[level + 1]):
                    graph.add_edge(switch, parent, key=parallel_round)

    topo = Topology(params, nodes, rules, default_label, switches, nx.freeze(graph))
    log.debug('built %s: %d switches, %d nodes, %d links', params, sum(map(len, switches)), len(nodes),
              graph.number_of_edges())
    return topo


def resolve_port(topo, switch, direction, slot):
    """
This function resolves a port to the element at the other end of its link.

* Up slots resolve to the parent with g[l+1] = slot mod w[l+1], on parallel
  round slot div w[l+1].
* Down slots resolve to child index t = slot mod m[l], on parallel round
  slot div m[l]. For a leaf the child is the end-node on port rank t.

:topo:      A Topology object.
:switch:    A Switch_Addr of that topology.
:direction: UP or DOWN.
:slot:      The 0-based slot index.
:return:    A 2-tuple of the neighbor (Switch_Addr or Node_Id) and the parallel
            round as an int.
    """
    params = topo.params
    topo.check_switch(switch, 'resolve_port')
    level = switch.level
    if direction == UP:
        slot_count = params.up_port_count(level)
        if not 0 <= slot < slot_count:
            raise excpt.Invalid_Data_Exception('resolve_port', f'up slot {slot} is outside [0, {slot_count}) for '
                                                               f'switch {switch}')
        parallel_round, group_digit = divmod(slot, params.w[level + 1])
        parent = Switch_Addr(level + 1, switch.copy_digits[:-1], (group_digit,) + switch.group_digits)
        return parent, parallel_round
    elif direction == DOWN:
        slot_count = params.down_port_count(level)
        if not 0 <= slot < slot_count:
            raise excpt.Invalid_Data_Exception('resolve_port', f'down slot {slot} is outside [0, {slot_count}) for '
                                                               f'switch {switch}')
        parallel_round, child_index = divmod(slot, params.m[level])
        if level == 0:
            nid = util.digits_to_int(switch.copy_digits + (child_index,), params.node_radices)
            return topo.nodes[nid], parallel_round
        child = Switch_Addr(level - 1, switch.copy_digits + (child_index,), switch.group_digits[1:])
        return child, parallel_round
    raise excpt.Invalid_Data_Exception('resolve_port', f"direction must be '{UP}' or '{DOWN}', got '{direction}'")


def up_slot(params, level, group_digit, parallel_round):
    return parallel_round * params.w[level + 1] + group_digit


def down_slot(params, level, child_index, parallel_round):
    return parallel_round * params.m[level] + child_index


def opposite_port(topo, port):
    """
This function returns the port at the far end of the link a port drives: the
receiving port of the downstream switch. A leaf's delivery port ends at an
end-node, so None is returned for it.

:topo:   A Topology object.
:port:   A Port_Ref.
:return: A Port_Ref, or None.
    """
    params = topo.params
    neighbor, parallel_round = resolve_port(topo, port.switch, port.direction, port.slot)
    if isinstance(neighbor, Node_Id):
        return None
    if port.direction == UP:
        # The child index of the switch below its parent is its last copy
        # digit, c[l+1].
        slot = down_slot(params, neighbor.level, port.switch.copy_digits[-1], parallel_round)
        return Port_Ref(neighbor, DOWN, slot)
    slot = up_slot(params, neighbor.level, port.switch.group_digits[0], parallel_round)
    return Port_Ref(neighbor, UP, slot)


def display_port(topo, port):
    """
This function returns the 1-based port number used in text and figures: down
slots come first, then up slots. The last down slot of top switch (2,0,1) in
the case-study topology is displayed as 8.
    """
    if port.direction == DOWN:
        return port.slot + 1
    return topo.params.down_port_count(port.switch.level) + port.slot + 1


def format_port(topo, port):
    return f'{port.switch}:{display_port(topo, port)}'


def nca_level(topo, a, b):
    """
This function returns the level of the nearest common ancestors of two
end-nodes: the smallest l such that both share copy digits c[h-1]..c[l+1]. Two
nodes on the same leaf (or a node and itself) have NCA level 0.

>>> nca_level(case_study_topo, 8, 47)
2

:topo:   A Topology object.
:a:      An int NID (a Node_Id is accepted too).
:b:      An int NID (a Node_Id is accepted too).
:return: An int level.
    """
    a = a.nid if isinstance(a, Node_Id) else a
    b = b.nid if isinstance(b, Node_Id) else b
    copy_a, _ = topo.node_digits(a)
    copy_b, _ = topo.node_digits(b)
    height = topo.params.h
    for level in range(height):
        if copy_a[:height - 1 - level] == copy_b[:height - 1 - level]:
            return level
    raise excpt.Internal_Exception(f'no common ancestor found for NIDs {a} and {b}')


def describe(topo):
    """
This function returns a structural summary of a topology as a JSON-ready dict:
per-level switch counts and port counts, the cross-bisectional bandwidth (CBB)
ratio of every stage above the leaves, and node counts per type.

:topo:   A Topology object.
:return: A dict.
    """
    params = topo.params
    levels = []
    for level in range(params.h):
        down_ports = params.down_port_count(level)
        up_ports = params.up_port_count(level)
        levels.append({'level': level, 'switch_count': params.switch_count(level), 'down_ports': down_ports,
                       'up_ports': up_ports, 'radix': down_ports + up_ports})

    # The CBB ratio of level l compares its upward capacity w[l+1]*p[l+1] with
    # its downward capacity m[l]*p[l]; below 1 the stage is nonfull.
    cbb = []
    for level in range(params.h - 1):
        ratio = params.up_port_count(level) / params.down_port_count(level)
        cbb.append({'level': level, 'up_links': params.up_port_count(level),
                    'down_links': params.down_port_count(level), 'ratio': ratio, 'full': ratio >= 1})

    type_counts = collections.Counter(node.type_label for node in topo.nodes)
    node_types = {label: type_counts.get(label, 0) for label in topo.labels}
    node_types.update((label, count) for label, count in type_counts.items() if label not in node_types)

    return {'pgft': str(params), 'h': params.h, 'm': list(params.m), 'w': list(params.w), 'p': list(params.p),
            'node_count': topo.node_count, 'switch_count': sum(level['switch_count'] for level in levels),
            'link_count': topo.graph.number_of_edges(), 'levels': levels, 'cbb': cbb, 'node_types': node_types,
            'type_rules': [str(rule) for rule in topo.type_rules]}


def topology_graph(topo):
    """
This function returns the frozen networkx MultiGraph of a topology. Nodes are
Switch_Addr and Node_Id objects; each parallel link is one edge whose key is
its parallel round.
    """
    return topo.graph


def link_key(lower, upper, parallel_round):
    """
This function returns the key identifying one parallel link in the highlight
mapping given to to_dot(): the lower element (a Switch_Addr or Node_Id), the
upper switch, and the parallel round.
    """
    return lower, upper, parallel_round


def to_dot(topo, highlight=None):
    """
This function renders the topology as DOT text through networkx's pydot
bridge. Switches are named by their address tuple, end-nodes are records of NID
and type label, and every edge is labeled with its parallel round.

:topo:      A Topology object.
:highlight: An optional mapping of link_key() tuples to class ids (such as a
            destination NID). Highlighted links are colored by class; links
            shared by several classes are drawn in black.
:return:    A str of DOT text.
    """
    graph = nx.MultiGraph(topo.graph)
    graph.graph['graph'] = {'rankdir': 'BT'}
    class_colors = {}
    for key, classes in (highlight or {}).items():
        lower, upper, parallel_round = key
        if not graph.has_edge(lower, upper, key=parallel_round):
            raise excpt.Invalid_Data_Exception('to_dot', f'{lower} - {upper} round {parallel_round} is not a link')
        classes = classes if isinstance(classes, (set, frozenset, tuple, list)) else (classes,)
        for class_id in classes:
            class_colors.setdefault(class_id, HIGHLIGHT_PALETTE[len(class_colors) % len(HIGHLIGHT_PALETTE)])
        color = class_colors[next(iter(classes))] if len(set(classes)) == 1 else SHARED_LINK_COLOR
        graph.edges[lower, upper, parallel_round].update(color=color, penwidth='2.5')

    for lower, upper, parallel_round, attrs in graph.edges(keys=True, data=True):
        attrs['label'] = str(parallel_round)
    names = {}
    for element, attrs in graph.nodes(data=True):
        kind = attrs.pop('kind')
        attrs.pop('level', None)
        type_label = attrs.pop('type_label', None)
        if kind == 'switch':
            names[element] = str(element)
            attrs.update(shape='box')
        else:
            names[element] = f'nid{element.nid}'
            attrs.update(shape='record', label=f'{{{element.nid}|{type_label}}}')
    graph = nx.relabel_nodes(graph, names)
    return nx.drawing.nx_pydot.to_pydot(graph).to_string()


def load_topology_config(path=None, data=None):
    """
This function loads a topology config .ini file. The [topology] section holds,
in order, a 'pgft' entry, any number of 'type <label>' rule entries, and the
optional 'type_order' and 'default_type' entries:

    [topology]
    pgft = PGFT(3; 8,4,2; 1,2,1; 1,1,4)
    type io = nid_mod 8 7
    type_order = compute,io

:path:   The path of the file; when data is given, it's only used in messages.
:data:   The file contents as a string, or None to read path.
:return: A 2-tuple of a Topology object and the type order (a tuple of labels).
    """
    source = path or '<config>'
    try:
        ini_config = iniconfig.IniConfig(source, data=data)
    except iniconfig.ParseError as err:
        raise excpt.Invalid_Data_Exception(source, f'line {err.lineno + 1}: {err.msg}')
    except OSError as err:
        raise excpt.Invalid_Data_Exception(source, f'could not read config file: {err.strerror}')

    if 'topology' not in ini_config.sections:
        raise excpt.Invalid_Data_Exception(source, 'missing [topology] section')
    section = ini_config.sections['topology']
    if 'pgft' not in section:
        raise excpt.Invalid_Data_Exception(source, "missing 'pgft' entry in [topology]")

    params = parse_pgft_spec(section['pgft'])
    default_label = section.get('default_type', DEFAULT_TYPE_LABEL).strip()
    type_rules = []
    for key, value in section.items():
        if key in ('pgft', 'type_order', 'default_type'):
            continue
        key_parts = key.split()
        if len(key_parts) != 2 or key_parts[0] != 'type':
            raise excpt.Invalid_Data_Exception(source, f"unrecognized entry '{key}' in [topology]")
        type_rules.append(Type_Rule.from_config_value(key_parts[1], value, source))

    topo = build_topology(params, type_rules, default_label)
    if 'type_order' in section:
        type_order = tuple(label.strip() for label in section['type_order'].split(',') if label.strip())
    else:
        type_order = topo.labels
    log.info('loaded %s from %s with %d type rules', params, source, len(type_rules))
    return topo, type_order
