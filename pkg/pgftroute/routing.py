#!/usr/bin/python3

"""
This module computes routes through a PGFT. A route climbs from the source's
leaf through the up slots its policy picks until it reaches the first ancestor
of the destination, then descends along the children the destination's
address forces, on the parallel rounds the policy picks. Destination-based
policies can also be materialized as per-switch forwarding tables.
"""

import collections
import logging

import pgftroute.exceptions as excpt
import pgftroute.topology as topology


__name__ = 'pgftroute.routing'

log = logging.getLogger(__name__)


ROUTE_DUMP_HEADER = ('src', 'dst', 'hop_index', 'switch_addr', 'direction', 'slot', 'display_port')

TABLE_DUMP_HEADER = ('switch_addr', 'dst', 'direction', 'slot', 'display_port')


class Route(collections.namedtuple('Route', ('src', 'dst', 'hops'))):
    """
This class represents the route of one (src, dst) pair: hops is the tuple of
output ports (topology.Port_Ref objects) in the order the route uses them,
ending with the leaf port that delivers to dst.
    """
    __slots__ = ()

    @property
    def switches(self):
        return tuple(hop.switch for hop in self.hops)


class Route_Set(object):
    """
This class maps the pairs of a pattern to their routes, in pattern order, and
keeps the provenance of the set: the topology, the policy and the pattern name.
    """
    __slots__ = 'topology', 'policy', 'pattern_name', '_routes'

    def __init__(self, topo, route_policy, pattern_name, routes=()):
        self.topology = topo
        self.policy = route_policy
        self.pattern_name = pattern_name
        self._routes = collections.OrderedDict(((route.src, route.dst), route) for route in routes)

    @property
    def algorithm(self):
        return self.policy.name

    @property
    def pairs(self):
        return tuple(self._routes)

    def routes(self):
        return tuple(self._routes.values())

    def __getitem__(self, pair):
        return self._routes[pair]

    def __contains__(self, pair):
        return pair in self._routes

    def __iter__(self):
        return iter(self._routes.values())

    def __len__(self):
        return len(self._routes)


def compute_route(topo, route_policy, src, dst):
    """
This function computes the route of one pair under a policy. The route ascends
only to the lowest common ancestors of src and dst, so it visits exactly
2 * nca_level(src, dst) + 1 switches.

:topo:         A topology.Topology object.
:route_policy: A policy.Selection_Policy object.
:src:          The source NID.
:dst:          The destination NID.
:return:       A Route object.
    """
    topo.check_nid(src, 'compute_route')
    topo.check_nid(dst, 'compute_route')
    if src == dst:
        raise excpt.Invalid_Data_Exception('compute_route', f'source and destination are the same node ({src})')
    params = topo.params
    dst_copy_digits, dst_rank = topo.node_digits(dst)

    hops = []
    current = topo.leaf_of(src)
    while not topo.is_ancestor(current, dst):
        slot = route_policy.up_slot(params, current.level, src, dst)
        hops.append(topology.Port_Ref(current, topology.UP, slot))
        current, _ = topology.resolve_port(topo, current, topology.UP, slot)

    # Descent: the child is forced by the destination's copy digit c[level]
    # (its port rank, at the leaf); only the parallel round is chosen.
    while True:
        level = current.level
        child_index = dst_rank if level == 0 else dst_copy_digits[params.h - 1 - level]
        parallel_round = route_policy.down_round(params, level, src, dst)
        slot = topology.down_slot(params, level, child_index, parallel_round)
        hops.append(topology.Port_Ref(current, topology.DOWN, slot))
        if level == 0:
            break
        current, _ = topology.resolve_port(topo, current, topology.DOWN, slot)
    return Route(src, dst, tuple(hops))


def compute_routes(topo, route_policy, pattern):
    """
This function computes one route per pair of a pattern. Errors raised for a
pair are re-raised naming that pair.

:topo:         A topology.Topology object.
:route_policy: A policy.Selection_Policy object.
:pattern:      A patterns.Pattern object.
:return:       A Route_Set object.
    """
    if pattern.node_count != topo.node_count:
        raise excpt.Invalid_Data_Exception(pattern.name, f'pattern was built for {pattern.node_count} nodes but '
                                                         f'the topology has {topo.node_count}')
    routes = []
    for src, dst in pattern.pairs:
        try:
            routes.append(compute_route(topo, route_policy, src, dst))
        except excpt.Invalid_Data_Exception as err:
            raise excpt.Invalid_Data_Exception(f'pair ({src},{dst})', err.message)
    log.info('computed %d routes for pattern %s under %s', len(routes), pattern.name, route_policy.name)
    return Route_Set(topo, route_policy, pattern.name, routes)


def forwarding_tables(topo, route_policy):
    """
This function materializes a destination-based policy as forwarding tables.
A switch that is an ancestor of the destination forwards down toward the
child the destination forces, on the policy's round; any other switch forwards
up on the policy's slot.

:topo:         A topology.Topology object.
:route_policy: A dmodk or gdmodk policy.Selection_Policy object.
:return:       A dict mapping each topology.Switch_Addr to a tuple of
               topology.Port_Ref objects indexed by destination NID.
    """
    if not route_policy.is_destination_based:
        raise excpt.Bad_Usage_Exception('tables', f"forwarding tables need a destination-based algorithm (dmodk or "
                                                  f"gdmodk), not '{route_policy.name}'")
    params = topo.params
    tables = {}
    for switch in topo.switches():
        level = switch.level
        entries = []
        for dst in range(topo.node_count):
            if topo.is_ancestor(switch, dst):
                dst_copy_digits, dst_rank = topo.node_digits(dst)
                child_index = dst_rank if level == 0 else dst_copy_digits[params.h - 1 - level]
                parallel_round = route_policy.down_round(params, level, None, dst)
                slot = topology.down_slot(params, level, child_index, parallel_round)
                entries.append(topology.Port_Ref(switch, topology.DOWN, slot))
            else:
                slot = route_policy.up_slot(params, level, None, dst)
                entries.append(topology.Port_Ref(switch, topology.UP, slot))
        tables[switch] = tuple(entries)
    log.debug('built forwarding tables for %d switches under %s', len(tables), route_policy.name)
    return tables


def lookup_route(topo, tables, src, dst):
    """
This function walks the forwarding tables from the source's leaf to the
destination and returns the route the tables describe.

:topo:   A topology.Topology object.
:tables: The dict returned by forwarding_tables().
:src:    The source NID.
:dst:    The destination NID.
:return: A Route object.
    """
    topo.check_nid(src, 'lookup_route')
    topo.check_nid(dst, 'lookup_route')
    if src == dst:
        raise excpt.Invalid_Data_Exception('lookup_route', f'source and destination are the same node ({src})')
    hops = []
    current = topo.leaf_of(src)
    # An up*/down* walk visits at most 2h - 1 switches.
    for _ in range(2 * topo.params.h - 1):
        port = tables[current][dst]
        hops.append(port)
        neighbor, _ = topology.resolve_port(topo, current, port.direction, port.slot)
        if isinstance(neighbor, topology.Node_Id):
            return Route(src, dst, tuple(hops))
        current = neighbor
    raise excpt.Internal_Exception(f'forwarding tables loop for pair ({src},{dst})')


def validate_route(topo, route):
    """
This function checks a route and reports every problem it finds: hops that
are not adjacent, a walk that is not up*-down*, a walk longer than the
shortest one, and a last hop that doesn't deliver to the destination.

:topo:   A topology.Topology object.
:route:  A Route object.
:return: A list of violation strings; empty if the route is valid.
    """
    violations = []
    try:
        topo.check_nid(route.src, 'src')
        topo.check_nid(route.dst, 'dst')
    except excpt.Invalid_Data_Exception as err:
        return [f'endpoint: {err}']
    if route.src == route.dst:
        violations.append('endpoint: source and destination are the same node')
    if not route.hops:
        return violations + ['length: the route has no hops']

    if route.hops[0].switch != topo.leaf_of(route.src):
        violations.append(f'adjacency: the first hop is at {route.hops[0].switch}, not at the source leaf '
                          f'{topo.leaf_of(route.src)}')

    last_neighbor = None
    for index, hop in enumerate(route.hops):
        try:
            neighbor, _ = topology.resolve_port(topo, hop.switch, hop.direction, hop.slot)
        except excpt.Invalid_Data_Exception as err:
            violations.append(f'adjacency: hop {index} has an invalid port ({err.message})')
            neighbor = None
        if index + 1 < len(route.hops) and neighbor is not None and neighbor != route.hops[index + 1].switch:
            violations.append(f'adjacency: hop {index} leads to {neighbor}, not to {route.hops[index + 1].switch}')
        last_neighbor = neighbor

    directions = [hop.direction for hop in route.hops]
    first_down = directions.index(topology.DOWN) if topology.DOWN in directions else len(directions)
    if topology.UP in directions[first_down:]:
        violations.append('shape: the route turns up again after going down')
    switches = route.switches
    if len(set(switches)) != len(switches):
        violations.append('shape: the route visits a switch more than once')

    expected = 2 * topology.nca_level(topo, route.src, route.dst) + 1
    if len(switches) != expected:
        violations.append(f'length: the route visits {len(switches)} switches; the shortest visits {expected}')

    if last_neighbor != topo.node(route.dst):
        violations.append(f'delivery: the last hop does not deliver to NID {route.dst}')
    return violations


def route_links(topo, route):
    """
This function returns the inter-switch links of a route, in order, as
(from switch, to switch, parallel round) tuples. Injection and delivery links
are left out.
    """
    links = []
    for hop in route.hops:
        neighbor, parallel_round = topology.resolve_port(topo, hop.switch, hop.direction, hop.slot)
        if isinstance(neighbor, topology.Switch_Addr):
            links.append((hop.switch, neighbor, parallel_round))
    return tuple(links)


def reversed_links(links):
    return tuple((to_switch, from_switch, parallel_round)
                 for from_switch, to_switch, parallel_round in reversed(links))


def route_dump_rows(topo, route_set):
    """
This function yields the rows of a route dump CSV, one per hop, matching
ROUTE_DUMP_HEADER.
    """
    for route in route_set:
        for hop_index, hop in enumerate(route.hops):
            yield (route.src, route.dst, hop_index, str(hop.switch), hop.direction, hop.slot,
                   topology.display_port(topo, hop))


def table_dump_rows(topo, tables):
    """
This function yields the rows of a forwarding-table dump CSV, one per switch
and destination, matching TABLE_DUMP_HEADER.
    """
    for switch in topo.switches():
        for dst, port in enumerate(tables[switch]):
            yield str(switch), dst, port.direction, port.slot, topology.display_port(topo, port)


def is_destination_tree(route_set):
    """
This function tests the destination-tree property: for every destination, the
routes toward it leave each switch through a single port.
    """
    return _is_tree(route_set, lambda route: route.dst)


def is_source_tree(route_set):
    """
This function tests the source-tree property: for every source, the routes
from it enter each switch through a single port. Delivery hops have no
receiving switch and are skipped.
    """
    topo = route_set.topology
    return _is_tree(route_set, lambda route: route.src, lambda hop: topology.opposite_port(topo, hop))


def _is_tree(route_set, endpoint_of, port_of=lambda hop: hop):
    ports_used = collections.defaultdict(set)
    for route in route_set:
        endpoint = endpoint_of(route)
        for hop in route.hops:
            port = port_of(hop)
            if port is not None:
                ports_used[endpoint, port.switch].add((port.direction, port.slot))
    return all(len(ports) == 1 for ports in ports_used.values())
