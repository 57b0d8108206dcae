#!/usr/bin/python3

"""
This module consists of the Run_Config class, which holds the options of one
command-line invocation, and the Command_Processor class, whose process()
method dispatches a subcommand (describe, route, analyze, compare or export) to
its command method. Command methods return tuples of
pgftroute.statemsgs.Command_Result subclass objects; errors raised by the
lower layers are turned into Command_Bad_Usage (exit code 1) or
Command_Invalid_Data (exit code 2) results.
"""

import collections
import logging
import types

import pgftroute.exceptions as excpt
import pgftroute.metric as metric
import pgftroute.patterns as patterns
import pgftroute.policy as policy
import pgftroute.routing as routing
import pgftroute.statemsgs as stmsg
import pgftroute.topology as topology
import pgftroute.utility as util


__name__ = 'pgftroute.processor'

log = logging.getLogger(__name__)


DEFAULT_ALGORITHM = policy.DMODK

DEFAULT_PATTERN = patterns.ALL_TO_ALL

COMPARE_HEADER = ('algorithm', 'pattern', 'direction', 'runs', 'c_topo', 'c_topo_min', 'c_topo_max',
                  'hotspot_count', 'improvement')


class Run_Config(object):
    """
This class holds the options of one invocation: the topology source (an inline
PGFT notation with optional --type rules, or a config file), the algorithms,
seeds and type order of the policies, the pattern selectors, the metric
direction, and the output options.
    """
    __slots__ = ('spec', 'config', 'type_rules', 'algorithms', 'seed', 'seeds', 'type_order', 'patterns',
                 'direction', 'out', 'format', 'tables', 'highlight')

    def __init__(self, spec=None, config=None, type_rules=(), algorithms=(), seed=0, seeds=None, type_order=None,
                 patterns=(), direction=metric.OUTPUT, out=None, format=None, tables=False, highlight=None):
        """
This __init__ method validates and stores the options.

:spec:       An inline PGFT notation string, or None.
:config:     The path of a topology config .ini file, or None.
:type_rules: A sequence of 'LABEL=RULE' strings added to an inline spec.
:algorithms: A sequence of algorithm names; defaults to ('dmodk',).
:seed:       The seed of the random algorithm (the first seed of a sweep).
:seeds:      The number of seeds compare runs for randomized algorithms.
:type_order: A comma-separated label order for the grouped algorithms.
:patterns:   A sequence of pattern selectors; defaults to ('all2all',).
:direction:  'output' or 'input'.
:out:        The prefix artifact files are written to, or None.
:format:     'csv', 'json' or 'dot' to keep only artifacts of that format.
:tables:     Whether route also dumps forwarding tables.
:highlight:  A pattern selector whose routes export highlights.
        """
        if (spec is None) == (config is None):
            raise excpt.Bad_Usage_Exception('config', 'give exactly one topology source: --spec or --config')
        if type_rules and config is not None:
            raise excpt.Bad_Usage_Exception('config', '--type rules only apply to an inline --spec; put them in the '
                                                      'config file instead')
        if seeds is not None and seeds < 1:
            raise excpt.Bad_Usage_Exception('seeds', f'--seeds must be at least 1, got {seeds}')
        if direction not in metric.DIRECTIONS:
            raise excpt.Bad_Usage_Exception('direction', f"direction must be 'output' or 'input', got '{direction}'")
        self.spec = spec
        self.config = config
        self.type_rules = tuple(type_rules)
        self.algorithms = tuple(algorithms) or (DEFAULT_ALGORITHM,)
        self.seed = 0 if seed is None else seed
        self.seeds = seeds
        self.type_order = (tuple(label.strip() for label in type_order.split(',') if label.strip())
                           if type_order else None)
        self.patterns = tuple(patterns) or (DEFAULT_PATTERN,)
        self.direction = direction
        self.out = out
        self.format = format
        self.tables = tables
        self.highlight = highlight

    def load_topology(self):
        """
This method builds the configured topology.

:return: A 2-tuple of a pgftroute.topology.Topology object and the type order
         (--type-order if given, else the config's or the topology's).
        """
        if self.config is not None:
            topo, type_order = topology.load_topology_config(self.config)
        else:
            rules = []
            for rule_text in self.type_rules:
                label, equals, rule = rule_text.partition('=')
                if not equals or not label.strip():
                    raise excpt.Bad_Usage_Exception('--type', f"expected 'LABEL=RULE', got '{rule_text}'")
                rules.append(topology.Type_Rule.from_config_value(label.strip(), rule, '--type'))
            topo = topology.build_topology(topology.parse_pgft_spec(self.spec), rules)
            type_order = topo.labels
        return topo, self.type_order or type_order

    def single(self, option, command):
        """
This method returns the only value of a multi-valued option, for commands that
take one algorithm or one pattern.
        """
        values = getattr(self, option)
        if len(values) != 1:
            raise excpt.Bad_Usage_Exception(command, f'{command} takes a single {option[:-1]}, got '
                                            + util.join_with_commas_and_conjunction(values, quote=True))
        return values[0]


class Command_Processor(object):
    """
This class dispatches subcommands to its command methods. Each command method
reads the Run_Config, runs the pipeline (topology, policy, pattern, routes,
metric) and returns a tuple of statemsgs.Command_Result objects.
    """
    __slots__ = 'run_config', 'dispatch_table'

    commands = {'describe', 'route', 'analyze', 'compare', 'export'}

    def __init__(self, run_config):
        """
This __init__ method builds the dispatch table by introspection: each method
whose name ends in _command is stored under the command it implements.

:run_config: A Run_Config object.
        """
        self.run_config = run_config
        self.dispatch_table = dict()
        commands_set = set(self.commands)
        for method_name in dir(type(self)):
            attrval = getattr(self, method_name, None)
            if not isinstance(attrval, types.MethodType):
                continue
            if not method_name.endswith('_command') or method_name.startswith('_'):
                continue
            command = method_name.rsplit('_', maxsplit=1)[0]
            self.dispatch_table[command] = attrval
            if command not in commands_set:
                raise excpt.Internal_Exception('Inconsistency between set list of commands and command methods found '
                                               f'by introspection: method {method_name}() does not correspond to a '
                                               'command in commands.')
            commands_set.remove(command)
        if len(commands_set):
            raise excpt.Internal_Exception('Inconsistency between set list of commands and command methods found by '
                                           f"introspection: command '{commands_set.pop()}' does not correspond to a "
                                           'command method.')

    def process(self, command):
        """
This method dispatches a subcommand and converts the data and usage errors the
pipeline raises into result objects.

:command: One of the names in commands.
:return:  A tuple of statemsgs.Command_Result objects.
        """
        if command not in self.dispatch_table:
            return stmsg.Command_Bad_Usage(command, 'unknown command; expected '
                                           + util.join_with_commas_and_conjunction(sorted(self.commands), 'or')),
        log.debug('dispatching %s', command)
        try:
            return self.dispatch_table[command]()
        except excpt.Bad_Usage_Exception as err:
            log.warning('%s: usage error: %s', command, err)
            return stmsg.Command_Bad_Usage(err.command, err.message),
        except excpt.Invalid_Data_Exception as err:
            log.warning('%s: invalid data: %s', command, err)
            return stmsg.Command_Invalid_Data(err.source, err.message),

    def describe_command(self):
        topo, _ = self.run_config.load_topology()
        return stmsg.Describe_Command_Summary(topology.describe(topo)),

    def route_command(self):
        """
This method computes the routes of one pattern under one algorithm and dumps
them, plus the forwarding tables when --tables is given (dmodk and gdmodk
only).
        """
        config = self.run_config
        topo, type_order = config.load_topology()
        route_policy = policy.make_policy(config.single('algorithms', 'route'), topo, config.seed, type_order)
        tables_csv = None
        if config.tables:
            tables = routing.forwarding_tables(topo, route_policy)
            tables_csv = util.csv_text(routing.TABLE_DUMP_HEADER, routing.table_dump_rows(topo, tables))
        pattern = patterns.select_pattern(topo, config.single('patterns', 'route'))
        route_set = routing.compute_routes(topo, route_policy, pattern)
        route_csv = util.csv_text(routing.ROUTE_DUMP_HEADER, routing.route_dump_rows(topo, route_set))
        return stmsg.Route_Command_Routes(route_policy.name, pattern.name, len(route_set), route_csv, tables_csv),

    def analyze_command(self):
        config = self.run_config
        topo, type_order = config.load_topology()
        route_policy = policy.make_policy(config.single('algorithms', 'analyze'), topo, config.seed, type_order)
        pattern = patterns.select_pattern(topo, config.single('patterns', 'analyze'))
        report = metric.analyze(routing.compute_routes(topo, route_policy, pattern), config.direction)
        return stmsg.Analyze_Command_Report(report, util.csv_text(metric.REPORT_HEADER, report.csv_rows()),
                                            report.summary()),

    def compare_command(self):
        """
This method analyzes every pattern under every algorithm. Randomized
algorithms run once per seed (--seeds N runs seeds --seed through --seed+N-1)
and report the median c_topo with its minimum and maximum; the improvement
column is the first algorithm's c_topo divided by the row's.
        """
        config = self.run_config
        topo, type_order = config.load_topology()
        rows = []
        for selector in config.patterns:
            pattern = patterns.select_pattern(topo, selector)
            baseline = None
            for algorithm in config.algorithms:
                randomized = policy.ALGORITHMS.get(algorithm, (None, False))[0] == policy.RANDOM
                seeds = range(config.seed, config.seed + (config.seeds or 1)) if randomized else (config.seed,)
                reports = []
                for seed in seeds:
                    route_policy = policy.make_policy(algorithm, topo, seed, type_order)
                    reports.append(metric.analyze(routing.compute_routes(topo, route_policy, pattern),
                                                  config.direction))
                sweep = metric.Seed_Sweep(algorithm, pattern.name, config.direction, tuple(seeds),
                                          [report.c_topo for report in reports])
                median_report = next(report for report in reports if report.c_topo == sweep.median)
                if baseline is None:
                    baseline = sweep.median
                improvement = round(baseline / sweep.median, 3) if sweep.median else None
                rows.append(collections.OrderedDict((('algorithm', algorithm), ('pattern', pattern.name),
                                                     ('direction', config.direction), ('runs', len(reports)),
                                                     ('c_topo', sweep.median), ('c_topo_min', sweep.minimum),
                                                     ('c_topo_max', sweep.maximum),
                                                     ('hotspot_count', len(median_report.hotspots)),
                                                     ('improvement', improvement))))
        log.info('compared %d algorithm(s) over %d pattern(s)', len(config.algorithms), len(config.patterns))
        return stmsg.Compare_Command_Table(COMPARE_HEADER, rows),

    def export_command(self):
        """
This method renders the topology as DOT. With --highlight, the links used by
the routes of that pattern are colored by destination (by source for the
smodk family).
        """
        config = self.run_config
        topo, type_order = config.load_topology()
        if config.highlight is None:
            return stmsg.Export_Command_Dot(str(topo.params), topology.to_dot(topo)),
        route_policy = policy.make_policy(config.single('algorithms', 'export'), topo, config.seed, type_order)
        pattern = patterns.select_pattern(topo, config.highlight)
        route_set = routing.compute_routes(topo, route_policy, pattern)
        link_classes = collections.defaultdict(set)
        for route in route_set:
            class_id = route.src if route_policy.base == policy.SMODK else route.dst
            for hop in route.hops:
                neighbor, parallel_round = topology.resolve_port(topo, hop.switch, hop.direction, hop.slot)
                if hop.direction == topology.UP:
                    key = topology.link_key(hop.switch, neighbor, parallel_round)
                else:
                    key = topology.link_key(neighbor, hop.switch, parallel_round)
                link_classes[key].add(class_id)
        highlight = {key: tuple(sorted(classes)) for key, classes in link_classes.items()}
        return stmsg.Export_Command_Dot(str(topo.params), topology.to_dot(topo, highlight), len(highlight)),
