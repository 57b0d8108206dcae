#!/usr/bin/python3

"""
This module contains Command_Result and its subclasses.
pgftroute.processor.Command_Processor.process() dispatches a subcommand to a
command method, which always returns a tuple of Command_Result subclass
objects. Each one carries a message property rendering its outcome as text, an
exit_code, and the artifacts (file suffix, format, text) the front end writes
to files or prints.
"""

import abc

import pgftroute.utility as util


__name__ = 'pgftroute.statemsgs'


class Command_Result(abc.ABC):
    """
This class is the abstract base class of every command result. It defines an
abstract message property and an abstract __init__ method.
    """
    exit_code = 0

    @property
    @abc.abstractmethod
    def message(self):
        """
The message property of a Command_Result subclass renders the data stored in
the object attributes to a human-readable string. It's printed by pgftcli.py.
        """
        pass

    @abc.abstractmethod
    def __init__(self, *argl, **argd):
        """
The __init__ method of a Command_Result subclass stores its arguments to
object attributes, and performs no other task.
        """
        pass

    def artifacts(self):
        """
This method returns the artifacts of the result as a tuple of
(file suffix, format, text) triples; results without artifacts return ().
        """
        return ()


class Command_Bad_Usage(Command_Result):
    """
This class implements the error object returned when a command's flags are
misused, such as --tables with a source-based algorithm.
    """
    __slots__ = 'command', 'reason'

    exit_code = 1

    def __init__(self, command, reason):
        self.command = command
        self.reason = reason

    @property
    def message(self):
        return f'usage error in {self.command}: {self.reason}'


class Command_Invalid_Data(Command_Result):
    """
This class implements the error object returned when the input data is
invalid: a malformed PGFT notation, a bad config or pattern file, an unknown
label or an out-of-range NID.
    """
    __slots__ = 'source', 'reason'

    exit_code = 2

    def __init__(self, source, reason):
        self.source = source
        self.reason = reason

    @property
    def message(self):
        return f'invalid data in {self.source}: {self.reason}'


class Describe_Command_Summary(Command_Result):
    __slots__ = 'summary',

    def __init__(self, summary):
        self.summary = summary

    @property
    def message(self):
        summary = self.summary
        lines = [f"{summary['pgft']}: {summary['node_count']} end-nodes, {summary['switch_count']} switches, "
                 f"{summary['link_count']} links."]
        for level in summary['levels']:
            lines.append(f"level {level['level']}: {level['switch_count']} switches with {level['down_ports']} down "
                         f"and {level['up_ports']} up ports (radix {level['radix']})")
        for stage in summary['cbb']:
            fullness = 'full' if stage['full'] else 'nonfull'
            lines.append(f"CBB above level {stage['level']}: {stage['up_links']}/{stage['down_links']} = "
                         f"{stage['ratio']:.3g} ({fullness})")
        type_counts = [f'{count} {label}' for label, count in summary['node_types'].items()]
        lines.append('node types: ' + util.join_with_commas_and_conjunction(type_counts))
        return '\n'.join(lines)

    def artifacts(self):
        return (('.describe.json', 'json', util.json_text(self.summary)),)


class Route_Command_Routes(Command_Result):
    """
This class implements the result of the route command: the route dump and,
when requested, the forwarding-table dump.
    """
    __slots__ = 'algorithm', 'pattern', 'route_count', 'route_csv', 'tables_csv'

    def __init__(self, algorithm, pattern, route_count, route_csv, tables_csv=None):
        self.algorithm = algorithm
        self.pattern = pattern
        self.route_count = route_count
        self.route_csv = route_csv
        self.tables_csv = tables_csv

    @property
    def message(self):
        message = f'Computed {self.route_count} routes for pattern {self.pattern} under {self.algorithm}.'
        if self.tables_csv is not None:
            message += ' Forwarding tables were dumped too.'
        return message

    def artifacts(self):
        artifacts = [('.routes.csv', 'csv', self.route_csv)]
        if self.tables_csv is not None:
            artifacts.append(('.tables.csv', 'csv', self.tables_csv))
        return tuple(artifacts)


class Analyze_Command_Report(Command_Result):
    """
This class implements the result of the analyze command: a
pgftroute.metric.Congestion_Report, dumped as a per-port CSV and a JSON
summary.
    """
    __slots__ = 'report', 'report_csv', 'summary'

    def __init__(self, report, report_csv, summary):
        self.report = report
        self.report_csv = report_csv
        self.summary = summary

    @property
    def message(self):
        summary = self.summary
        message = (f"{summary['algorithm']} over {summary['pattern']} ({summary['direction']} ports): "
                   f"c_topo = {summary['c_topo']}")
        if summary['hotspots']:
            hotspots = summary['hotspots']
            shown = util.join_with_commas_and_conjunction(hotspots[:8])
            more = f' and {len(hotspots) - 8} more' if len(hotspots) > 8 else ''
            message += f', reached at {len(hotspots)} port(s): {shown}{more}'
        return message + '.'

    def artifacts(self):
        return (('.report.csv', 'csv', self.report_csv), ('.summary.json', 'json', util.json_text(self.summary)))


class Compare_Command_Table(Command_Result):
    """
This class implements the result of the compare command: one row per
(pattern, algorithm) with c_topo, its spread over seeds for randomized
algorithms, the hotspot count and the improvement over the first algorithm.
    """
    __slots__ = 'header', 'rows'

    def __init__(self, header, rows):
        self.header = tuple(header)
        self.rows = tuple(rows)

    @property
    def message(self):
        table = [tuple(self.header)] + [tuple('' if row[column] is None else str(row[column])
                                              for column in self.header) for row in self.rows]
        widths = [max(len(line[index]) for line in table) for index in range(len(self.header))]
        return '\n'.join('  '.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
                         for line in table)

    def artifacts(self):
        csv_rows = ((row[column] for column in self.header) for row in self.rows)
        return (('.compare.csv', 'csv', util.csv_text(self.header, csv_rows)),
                ('.compare.json', 'json', util.json_text([dict(row) for row in self.rows])))


class Export_Command_Dot(Command_Result):
    __slots__ = 'pgft', 'dot_text', 'highlighted_links'

    def __init__(self, pgft, dot_text, highlighted_links=0):
        self.pgft = pgft
        self.dot_text = dot_text
        self.highlighted_links = highlighted_links

    @property
    def message(self):
        if self.highlighted_links:
            return f'Exported {self.pgft} as DOT with {self.highlighted_links} highlighted links.'
        return f'Exported {self.pgft} as DOT.'

    def artifacts(self):
        return (('.dot', 'dot', self.dot_text),)
