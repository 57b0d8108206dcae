#!/usr/bin/python3

import contextlib
import io
import json
import os
import tempfile
import unittest

from .context import pgftroute as pgr
from .context import pgftcli

__name__ = 'tests.test_commands'


CASE_STUDY_INI = './testing_data/case_study.ini'


def process(command, **options):
    options.setdefault('config', CASE_STUDY_INI)
    return pgr.Command_Processor(pgr.Run_Config(**options)).process(command)


def run_cli(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        exit_code = pgftcli.main(list(argv))
    return exit_code, stdout.getvalue(), stderr.getvalue()


class Test_Run_Config(unittest.TestCase):

    def test_topology_source_errors(self):
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.Run_Config()
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.Run_Config(spec='PGFT(1; 4; 1; 1)', config=CASE_STUDY_INI)
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.Run_Config(config=CASE_STUDY_INI, type_rules=['io=nid_mod 8 7'])

    def test_option_errors(self):
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.Run_Config(config=CASE_STUDY_INI, seeds=0)
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.Run_Config(config=CASE_STUDY_INI, direction='sideways')

    def test_defaults_and_inline_types(self):
        run_config = pgr.Run_Config(spec='PGFT(3; 8,4,2; 1,2,1; 1,1,4)', type_rules=['io=nid_mod 8 7'],
                                    type_order='compute, io')
        self.assertEqual(run_config.algorithms, ('dmodk',))
        self.assertEqual(run_config.patterns, ('all2all',))
        topo, type_order = run_config.load_topology()
        self.assertEqual(len(topo.nodes_of_type('io')), 8)
        self.assertEqual(type_order, ('compute', 'io'))

    def test_bad_inline_type_rule(self):
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.Run_Config(spec='PGFT(1; 4; 1; 1)', type_rules=['nid_mod 2 1']).load_topology()


class Test_Process(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def test_unknown_command(self):
        result = process('simulate')
        self.assertIsInstance(result[0], pgr.Command_Bad_Usage)
        self.assertEqual(result[0].exit_code, 1)

    def test_describe(self):
        result = process('describe')
        self.assertIsInstance(result[0], pgr.Describe_Command_Summary)
        self.assertEqual(result[0].summary['node_count'], 64)
        self.assertEqual(result[0].summary['node_types'], {'compute': 56, 'io': 8})
        self.assertTrue(result[0].message.startswith('PGFT(3;8,4,2;1,2,1;1,1,4): 64 end-nodes, 14 switches'))
        self.assertEqual(result[0].artifacts()[0][:2], ('.describe.json', 'json'))

    def test_describe_single_switch(self):
        result = process('describe', config=None, spec='PGFT(1; 4; 1; 1)')
        self.assertEqual(result[0].summary['switch_count'], 1)
        self.assertEqual(result[0].summary['cbb'], [])

    def test_describe_malformed_spec(self):
        result = process('describe', config=None, spec='PGFT(3; 8,4; 1,2,1; 1,1,4)')
        self.assertIsInstance(result[0], pgr.Command_Invalid_Data)
        self.assertEqual(result[0].exit_code, 2)

    def test_describe_missing_config(self):
        result = process('describe', config='./testing_data/no_such_file.ini')
        self.assertIsInstance(result[0], pgr.Command_Invalid_Data)

    def test_route(self):
        result = process('route', patterns=['c2io-mirror'])
        self.assertIsInstance(result[0], pgr.Route_Command_Routes)
        self.assertEqual(result[0].route_count, 56)
        self.assertEqual(result[0].message, 'Computed 56 routes for pattern c2io-mirror under dmodk.')
        route_csv = result[0].artifacts()[0][2]
        self.assertTrue(route_csv.startswith('src,dst,hop_index,switch_addr,direction,slot,display_port\n'))
        self.assertEqual(len(result[0].artifacts()), 1)

    def test_route_with_tables(self):
        result = process('route', algorithms=['gdmodk'], patterns=['c2io-mirror'], tables=True)
        self.assertEqual([artifact[0] for artifact in result[0].artifacts()], ['.routes.csv', '.tables.csv'])
        result = process('route', algorithms=['smodk'], tables=True)
        self.assertIsInstance(result[0], pgr.Command_Bad_Usage)

    def test_route_takes_one_algorithm(self):
        result = process('route', algorithms=['dmodk', 'smodk'])
        self.assertIsInstance(result[0], pgr.Command_Bad_Usage)

    def test_analyze(self):
        result = process('analyze', patterns=['c2io-mirror'])
        self.assertIsInstance(result[0], pgr.Analyze_Command_Report)
        self.assertEqual(result[0].summary['c_topo'], 4)
        self.assertEqual(result[0].message, 'dmodk over c2io-mirror (output ports): c_topo = 4, reached at 4 '
                                            'port(s): (1,0,1):8, (1,1,1):8, (2,0,1):7, and (2,0,1):8.')
        self.assertEqual(process('analyze', algorithms=['gsmodk'], patterns=['c2io-mirror'])[0].summary['c_topo'], 4)

    def test_analyze_empty_pattern_file(self):
        result = process('analyze', patterns=['file:./testing_data/empty_pattern.csv'])
        self.assertEqual(result[0].summary['c_topo'], 0)
        self.assertEqual(result[0].message, 'dmodk over file:./testing_data/empty_pattern.csv (output ports): '
                                            'c_topo = 0.')

    def test_analyze_errors(self):
        self.assertIsInstance(process('analyze', algorithms=['ftree'])[0], pgr.Command_Bad_Usage)
        self.assertIsInstance(process('analyze', patterns=['file:./testing_data/self_pair.csv'])[0],
                              pgr.Command_Invalid_Data)
        self.assertIsInstance(process('analyze', config=None, spec='PGFT(2; 2,2; 1,2; 1,2)', algorithms=['gdmodk'])[0],
                              pgr.Command_Bad_Usage)

    def test_compare(self):
        result = process('compare', algorithms=['dmodk', 'smodk', 'gdmodk', 'gsmodk'], patterns=['c2io-mirror'])
        rows = result[0].rows
        self.assertEqual([row['algorithm'] for row in rows], ['dmodk', 'smodk', 'gdmodk', 'gsmodk'])
        self.assertEqual(rows[0]['c_topo'], 4)
        self.assertEqual(rows[0]['improvement'], 1.0)
        self.assertEqual(rows[3]['c_topo'], 4)
        self.assertLess(rows[2]['c_topo'], 4)
        self.assertTrue(all(row['runs'] == 1 for row in rows))
        self.assertEqual(result[0].message.splitlines()[0].split(), list(pgr.COMPARE_HEADER))
        compare_csv = result[0].artifacts()[0][2]
        self.assertEqual(compare_csv.splitlines()[1], 'dmodk,c2io-mirror,output,1,4,4,4,4,1.0')

    def test_compare_random_seeds(self):
        result = process('compare', algorithms=['random'], patterns=['c2io-mirror'], seed=5, seeds=10)
        row = result[0].rows[0]
        self.assertEqual(row['runs'], 10)
        self.assertLessEqual(row['c_topo_min'], row['c_topo'])
        self.assertLessEqual(row['c_topo'], row['c_topo_max'])
        self.assertEqual(json.loads(result[0].artifacts()[1][2])[0]['runs'], 10)

    def test_export(self):
        result = process('export')
        self.assertIsInstance(result[0], pgr.Export_Command_Dot)
        self.assertEqual(result[0].message, 'Exported PGFT(3;8,4,2;1,2,1;1,1,4) as DOT.')
        self.assertEqual(result[0].dot_text.count('shape=box'), 14)
        self.assertEqual(result[0].dot_text.count('shape=record'), 64)

    def test_export_highlight(self):
        result = process('export', highlight='file:./testing_data/c2io_subset.csv')
        self.assertEqual(result[0].highlighted_links, 5)
        self.assertEqual(result[0].message, 'Exported PGFT(3;8,4,2;1,2,1;1,1,4) as DOT with 5 highlighted links.')
        self.assertEqual(result[0].dot_text.count('penwidth'), 5)


class Test_Command_Line(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def test_analyze_message(self):
        exit_code, stdout, _ = run_cli('analyze', '--config', CASE_STUDY_INI, '--pattern', 'c2io-mirror')
        self.assertEqual(exit_code, 0)
        self.assertIn('c_topo = 4', stdout)

    def test_emit_follows_redirected_stdout(self):
        run_config = pgr.Run_Config(spec='PGFT(1; 4; 1; 1)')
        result = pgr.Command_Processor(run_config).process('describe')[0]
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            pgftcli.emit(result, run_config)
        self.assertEqual(stdout.getvalue(), result.message + '\n')
        exit_code, cli_stdout, _ = run_cli('describe', '--spec', 'PGFT(1; 4; 1; 1)')
        self.assertEqual(exit_code, 0)
        self.assertEqual(cli_stdout, result.message + '\n')

    def test_format_prints_artifact(self):
        exit_code, stdout, _ = run_cli('analyze', '--config', CASE_STUDY_INI, '--pattern', 'c2io-mirror',
                                       '--format', 'json')
        self.assertEqual(exit_code, 0)
        self.assertEqual(json.loads(stdout)['c_topo'], 4)

    def test_repeated_runs_are_identical(self):
        argv = ('route', '--spec', 'PGFT(3; 8,4,2; 1,2,1; 1,1,4)', '--type', 'io=nid_mod 8 7', '--algo', 'random',
                '--seed', '42', '--format', 'csv')
        self.assertEqual(run_cli(*argv), run_cli(*argv))

    def test_out_writes_files(self):
        with tempfile.TemporaryDirectory() as directory:
            prefix = os.path.join(directory, 'results', 'c2io')
            exit_code, stdout, _ = run_cli('analyze', '--config', CASE_STUDY_INI, '--pattern', 'c2io-mirror',
                                           '--out', prefix)
            self.assertEqual(exit_code, 0)
            self.assertIn(f'wrote {prefix}.report.csv', stdout)
            with open(prefix + '.summary.json', encoding='utf-8') as summary_file:
                self.assertEqual(json.load(summary_file)['c_topo'], 4)
            with open(prefix + '.report.csv', encoding='utf-8') as report_file:
                self.assertEqual(report_file.readline(), 'switch,direction,slot,display_port,src_count,dst_count,c\n')

    def test_compare_comma_separated_algorithms(self):
        exit_code, stdout, _ = run_cli('compare', '--config', CASE_STUDY_INI, '--algo', 'dmodk,gdmodk',
                                       '--algo', 'random', '--seeds', '3', '--pattern', 'c2io-mirror')
        self.assertEqual(exit_code, 0)
        self.assertEqual(len(stdout.splitlines()), 4)

    def test_exit_codes(self):
        self.assertEqual(run_cli('describe', '--spec', 'PGFT(2; 2,2; 1,2)')[0], 2)
        exit_code, _, stderr = run_cli('describe', '--spec', 'PGFT(1; 4; 1; 1)', '--config', CASE_STUDY_INI)
        self.assertEqual(exit_code, 1)
        self.assertIn('usage error', stderr)
        self.assertEqual(run_cli('analyze', '--config', CASE_STUDY_INI, '--algo', 'dmodk,smodk')[0], 1)

    def test_argparse_errors_exit_with_1(self):
        for argv in (('teleport',), ('analyze', '--direction', 'sideways'), ('analyze', '--seed', 'x')):
            with self.assertRaises(SystemExit) as context:
                run_cli(*argv)
            self.assertEqual(context.exception.code, 1)
