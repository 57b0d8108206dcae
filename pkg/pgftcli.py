#!/usr/bin/python3

"""
The command-line front end of pgftroute. Usage:

    pgftcli.py describe --config data/case_study.ini
    pgftcli.py analyze --config data/case_study.ini --algo dmodk --pattern c2io-mirror
    pgftcli.py compare --config data/case_study.ini --algo dmodk,smodk,gdmodk,gsmodk,random --seeds 100 \\
        --pattern c2io-mirror --out results/c2io

See docs/CLI_Reference.md for every flag. Exit codes: 0 on success, 1 on a
usage error, 2 on invalid input data.
"""

import argparse
import logging
import os
import sys

import pgftroute as pgr


log = logging.getLogger('pgftcli')


class Usage_Error_Argument_Parser(argparse.ArgumentParser):
    """
An ArgumentParser that exits with status 1 on a usage error.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f'{self.prog}: error: {message}\n')


def build_argument_parser():
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group('topology source (give exactly one)')
    source.add_argument('--spec', help="an inline PGFT notation, e.g. 'PGFT(3; 8,4,2; 1,2,1; 1,1,4)'")
    source.add_argument('--config', help='a topology config .ini file')
    common.add_argument('--type', dest='type_rules', action='append', default=[], metavar='LABEL=RULE',
                        help="a node-type rule for --spec, e.g. 'io=nid_mod 8 7' (repeatable)")
    common.add_argument('--algo', dest='algorithms', action='append', default=[], metavar='ALGO[,ALGO...]',
                        help='random, dmodk, smodk, gdmodk or gsmodk (repeatable, comma-separated)')
    common.add_argument('--seed', type=int, default=0, help='the seed of the random algorithm (default 0)')
    common.add_argument('--seeds', type=int, help='compare: the number of seeds to run randomized algorithms with')
    common.add_argument('--type-order', help='the label order of the grouped algorithms, e.g. compute,io')
    common.add_argument('--pattern', dest='patterns', action='append', default=[], metavar='SELECTOR',
                        help='c2io-mirror, all2all, type:<src>:<dst>, file:<path>, scatter:<nid>, gather:<nid>, '
                             'shift:<k> or transpose:<selector> (repeatable)')
    common.add_argument('--direction', choices=pgr.DIRECTIONS, default=pgr.OUTPUT,
                        help='count ports as output (default) or as input')
    common.add_argument('--out', help='write artifacts to files named <OUT><suffix>')
    common.add_argument('--format', choices=('csv', 'json', 'dot'), help='keep only artifacts of this format')

    parser = Usage_Error_Argument_Parser(prog='pgftcli.py', description='Route PGFT fat-trees and evaluate the '
                                                                         'static congestion of their routes.')
    subparsers = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')
    subparsers.add_parser('describe', parents=[common], help='summarize a topology')
    route_parser = subparsers.add_parser('route', parents=[common], help='dump the routes of a pattern')
    route_parser.add_argument('--tables', action='store_true', help='also dump forwarding tables (dmodk family)')
    subparsers.add_parser('analyze', parents=[common], help='report the congestion metric of a pattern')
    subparsers.add_parser('compare', parents=[common], help='tabulate c_topo for algorithms x patterns')
    export_parser = subparsers.add_parser('export', parents=[common], help='render the topology as DOT')
    export_parser.add_argument('--highlight', metavar='SELECTOR', help="highlight the routes of a pattern")
    return parser


def run_config_from_args(args):
    algorithms = [name.strip() for value in args.algorithms for name in value.split(',') if name.strip()]
    return pgr.Run_Config(spec=args.spec, config=args.config, type_rules=args.type_rules, algorithms=algorithms,
                          seed=args.seed, seeds=args.seeds, type_order=args.type_order, patterns=args.patterns,
                          direction=args.direction, out=args.out, format=args.format,
                          tables=getattr(args, 'tables', False), highlight=getattr(args, 'highlight', None))


def emit(result, run_config, stdout=None, stderr=None):
    """
This function prints or writes one command result. Errors go to stderr. With
--out, artifacts are written to <OUT><suffix> files and the message is printed;
otherwise --format prints the matching artifacts instead of the message.
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    if result.exit_code:
        print(result.message, file=stderr)
        return
    artifacts = [artifact for artifact in result.artifacts()
                 if run_config.format is None or artifact[1] == run_config.format]
    if run_config.out is not None:
        print(result.message, file=stdout)
        directory = os.path.dirname(run_config.out)
        if directory:
            os.makedirs(directory, exist_ok=True)
        for suffix, _, text in artifacts:
            path = run_config.out + suffix
            with open(path, 'w', encoding='utf-8', newline='') as artifact_file:
                artifact_file.write(text)
            print(f'wrote {path}', file=stdout)
    elif run_config.format is not None:
        for _, _, text in artifacts:
            stdout.write(text)
    else:
        print(result.message, file=stdout)


def main(argv=None):
    pgr.configure_logging()
    args = build_argument_parser().parse_args(argv)
    try:
        run_config = run_config_from_args(args)
    except pgr.Bad_Usage_Exception as err:
        print(f'usage error in {err.command}: {err.message}', file=sys.stderr)
        return 1
    results = pgr.Command_Processor(run_config).process(args.command)
    for result in results:
        try:
            emit(result, run_config)
        except OSError as err:
            print(f'invalid data in {err.filename}: could not write artifact: {err.strerror}', file=sys.stderr)
            return 2
    return results[-1].exit_code


if __name__ == '__main__':
    sys.exit(main())
