#!/usr/bin/python3

"""
This module evaluates the static congestion metric of a route set. For every
switch port it counts the distinct sources and the distinct destinations of
the routes crossing it; the port's C value is the smaller of the two, and the
topology's C value is the largest port value. A port whose C value is 1 carries
a single flow, whatever the number of routes.
"""

import collections
import functools
import logging

import numpy as np

import pgftroute.exceptions as excpt
import pgftroute.policy as policy
import pgftroute.routing as routing
import pgftroute.topology as topology


__name__ = 'pgftroute.metric'

log = logging.getLogger(__name__)


OUTPUT = 'output'

INPUT = 'input'

DIRECTIONS = (OUTPUT, INPUT)

REPORT_HEADER = ('switch', 'direction', 'slot', 'display_port', 'src_count', 'dst_count', 'c')


class Flow_Counts(collections.namedtuple('Flow_Counts', ('port', 'src_count', 'dst_count'))):
    """
This class holds the distinct source and destination counts of one port.
    """
    __slots__ = ()

    @property
    def c_value(self):
        return c_port(self)


def c_port(counts):
    """
This function returns the C value of a port: min(src_count, dst_count).

:counts: A Flow_Counts object.
:return: An int.
    """
    return min(counts.src_count, counts.dst_count)


def _check_direction(direction):
    if direction not in DIRECTIONS:
        raise excpt.Bad_Usage_Exception('direction', f"direction must be '{OUTPUT}' or '{INPUT}', got '{direction}'")


def endpoint_sets(topo, routes, direction=OUTPUT):
    """
This function accumulates, for every port the routes use, the set of source
NIDs and the set of destination NIDs crossing it.

In the output direction every hop is attributed to the port it leaves
through, delivery ports included; node injection is not a switch port. In the
input direction every hop is attributed to the port the downstream switch
receives it on, so delivery hops (received by an end-node) are left out.

:topo:      A topology.Topology object.
:routes:    An iterable of routing.Route objects.
:direction: OUTPUT or INPUT.
:return:    A dict mapping topology.Port_Ref objects to (sources, destinations)
            pairs of frozensets.
    """
    _check_direction(direction)
    sources = collections.defaultdict(set)
    destinations = collections.defaultdict(set)
    for route in routes:
        for hop in route.hops:
            port = hop if direction == OUTPUT else topology.opposite_port(topo, hop)
            if port is None:
                continue
            sources[port].add(route.src)
            destinations[port].add(route.dst)
    return {port: (frozenset(sources[port]), frozenset(destinations[port])) for port in sources}


def merge_endpoint_sets(first, second):
    """
This function merges two partial aggregations from endpoint_sets() by taking
per-port unions. It's associative and commutative, so route sets can be
aggregated in chunks and merged in any order.
    """
    merged = dict(first)
    for port, (sources, destinations) in second.items():
        if port in merged:
            merged_sources, merged_destinations = merged[port]
            merged[port] = (merged_sources | sources, merged_destinations | destinations)
        else:
            merged[port] = (sources, destinations)
    return merged


def flow_counts(route_set, direction=OUTPUT):
    """
This function returns the Flow_Counts of every port used by a route set.

:route_set: A routing.Route_Set object.
:direction: OUTPUT or INPUT.
:return:    A dict mapping topology.Port_Ref objects to Flow_Counts objects.
    """
    return _counts_from_sets(endpoint_sets(route_set.topology, route_set, direction))


def _counts_from_sets(port_sets):
    return {port: Flow_Counts(port, len(sources), len(destinations))
            for port, (sources, destinations) in port_sets.items()}


def _histogram(values):
    values = np.asarray(list(values), dtype=np.int64)
    if not values.size:
        return {}
    keys, counts = np.unique(values, return_counts=True)
    return {int(key): int(count) for key, count in zip(keys, counts)}


class Congestion_Report(object):
    """
This class represents the congestion analysis of a route set: one Flow_Counts
row per used port in port order, the topology-wide maximum c_topo (0 for an
empty route set), the hotspot ports achieving it, and a histogram of the
C values.
    """
    __slots__ = 'topology', 'algorithm', 'pattern', 'direction', 'rows', 'c_topo', 'hotspots', 'histogram', '_by_port'

    def __init__(self, topo, algorithm, pattern, direction, counts):
        self.topology = topo
        self.algorithm = algorithm
        self.pattern = pattern
        self.direction = direction
        self.rows = tuple(sorted(counts, key=lambda row: row.port))
        self._by_port = {row.port: row for row in self.rows}
        self.c_topo = max((row.c_value for row in self.rows), default=0)
        self.hotspots = tuple(row.port for row in self.rows if self.c_topo and row.c_value == self.c_topo)
        self.histogram = _histogram(row.c_value for row in self.rows)

    def counts(self, port):
        """
This method returns the Flow_Counts of a port, with zero counts for a port no
route uses.
        """
        return self._by_port.get(port, Flow_Counts(port, 0, 0))

    def c_value(self, port):
        return self.counts(port).c_value

    def csv_rows(self):
        """
This method yields the rows of the report CSV, matching REPORT_HEADER.
        """
        for row in self.rows:
            yield (str(row.port.switch), row.port.direction, row.port.slot,
                   topology.display_port(self.topology, row.port), row.src_count, row.dst_count, row.c_value)

    def summary(self):
        """
This method returns the JSON summary of the report. Hotspots are formatted as
'(2,0,1):8' and histogram keys are C values as strings.
        """
        return {'algorithm': self.algorithm, 'pattern': self.pattern, 'direction': self.direction,
                'c_topo': self.c_topo,
                'hotspots': [topology.format_port(self.topology, port) for port in self.hotspots],
                'histogram': {str(c_value): count for c_value, count in self.histogram.items()}}


def analyze(route_set, direction=OUTPUT, chunk_size=None):
    """
This function analyzes a route set. When chunk_size is given, the routes are
aggregated chunk by chunk and the partial aggregations merged; the report is
identical to the one-pass result.

:route_set:  A routing.Route_Set object.
:direction:  OUTPUT or INPUT.
:chunk_size: An optional positive int.
:return:     A Congestion_Report object.
    """
    _check_direction(direction)
    topo = route_set.topology
    routes = route_set.routes()
    if chunk_size:
        chunks = [routes[index:index + chunk_size] for index in range(0, len(routes), chunk_size)]
        port_sets = functools.reduce(merge_endpoint_sets,
                                     (endpoint_sets(topo, chunk, direction) for chunk in chunks), {})
    else:
        port_sets = endpoint_sets(topo, routes, direction)
    report = Congestion_Report(topo, route_set.algorithm, route_set.pattern_name, direction,
                               _counts_from_sets(port_sets).values())
    log.info('%s over %s (%s ports): c_topo = %d at %d hotspot(s)', route_set.algorithm, route_set.pattern_name,
             direction, report.c_topo, len(report.hotspots))
    return report


class Seed_Sweep(object):
    """
This class holds the c_topo value obtained with each seed of a randomized
algorithm, and their summary statistics. The median is the lower median, so it
is always one of the observed values.
    """
    __slots__ = 'algorithm', 'pattern', 'direction', 'seeds', 'values', 'minimum', 'median', 'maximum', 'histogram'

    def __init__(self, algorithm, pattern, direction, seeds, values):
        if not seeds:
            raise excpt.Bad_Usage_Exception('seeds', 'a seed sweep needs at least one seed')
        self.algorithm = algorithm
        self.pattern = pattern
        self.direction = direction
        self.seeds = tuple(seeds)
        self.values = np.asarray(values, dtype=np.int64)
        self.minimum = int(self.values.min())
        self.maximum = int(self.values.max())
        self.median = int(np.quantile(self.values, 0.5, method='lower'))
        self.histogram = _histogram(self.values)

    def summary(self):
        return {'algorithm': self.algorithm, 'pattern': self.pattern, 'direction': self.direction,
                'runs': len(self.seeds), 'c_topo_min': self.minimum, 'c_topo_median': self.median,
                'c_topo_max': self.maximum,
                'histogram': {str(c_value): count for c_value, count in self.histogram.items()}}


def seed_sweep(topo, pattern, seeds, algorithm=policy.RANDOM, direction=OUTPUT, type_order=None):
    """
This function routes a pattern once per seed and collects c_topo for each run.

:topo:       A topology.Topology object.
:pattern:    A patterns.Pattern object.
:seeds:      An iterable of int seeds, or an int N standing for seeds 0..N-1.
:algorithm:  The algorithm name; deterministic algorithms give one value
             repeated.
:direction:  OUTPUT or INPUT.
:type_order: Passed to policy.make_policy() for grouped algorithms.
:return:     A Seed_Sweep object.
    """
    seeds = tuple(range(seeds)) if isinstance(seeds, int) else tuple(seeds)
    values = []
    for seed in seeds:
        route_policy = policy.make_policy(algorithm, topo, seed=seed, type_order=type_order)
        route_set = routing.compute_routes(topo, route_policy, pattern)
        values.append(analyze(route_set, direction).c_topo)
    sweep = Seed_Sweep(algorithm, pattern.name, direction, seeds, values)
    log.info('%s over %s: %d seeds, c_topo min %d median %d max %d', algorithm, pattern.name, len(seeds),
             sweep.minimum, sweep.median, sweep.maximum)
    return sweep
