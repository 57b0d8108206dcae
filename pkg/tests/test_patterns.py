#!/usr/bin/python3

import unittest

from .context import pgftroute as pgr

__name__ = 'tests.test_patterns'


class Test_Pattern(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def test_pattern_validation(self):
        self.assertEqual(len(pgr.Pattern('ok', [(0, 1), (1, 0)], 4)), 2)
        for pairs in ([(0, 0)], [(0, 4)], [(0, 1), (0, 1)], [(-1, 2)]):
            with self.assertRaises(pgr.Invalid_Data_Exception):
                pgr.Pattern('bad', pairs, 4)


class Test_Mirror_C2io(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def setUp(self):
        self.topo = pgr.load_topology_config('./testing_data/case_study.ini')[0]

    def test_mirror_c2io(self):
        pattern = pgr.mirror_c2io(self.topo)
        pairs = dict(pattern.pairs)
        self.assertEqual(len(pattern), 56)
        self.assertEqual([pairs[nid] for nid in range(8, 15)], [47] * 7)
        self.assertEqual(pairs[0], 39)
        self.assertEqual(pairs[56], 31)
        self.assertNotIn(7, pairs)

    def test_every_route_crosses_a_top_switch(self):
        for src, dst in pgr.mirror_c2io(self.topo):
            self.assertEqual(pgr.nca_level(self.topo, src, dst), self.topo.params.h - 1)

    def test_each_io_node_receives_seven_flows(self):
        destinations = [dst for _, dst in pgr.mirror_c2io(self.topo)]
        for io_node in self.topo.nodes_of_type('io'):
            self.assertEqual(destinations.count(io_node.nid), 7)

    def test_mirror_c2io_errors(self):
        params = self.topo.params
        no_io = pgr.build_topology(params)
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.mirror_c2io(no_io)
        two_io = pgr.build_topology(params, [pgr.Type_Rule.from_config_value('io', 'nid_mod 4 3')])
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.mirror_c2io(two_io)
        odd_top = pgr.build_topology(pgr.parse_pgft_spec('PGFT(2; 2,3; 1,1; 1,1)'),
                                     [pgr.Type_Rule.from_config_value('io', 'nid_mod 2 1')])
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.mirror_c2io(odd_top)


class Test_Generated_Patterns(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def setUp(self):
        self.topo = pgr.load_topology_config('./testing_data/case_study.ini')[0]

    def test_type_to_type(self):
        self.assertEqual(len(pgr.type_to_type(self.topo, 'compute', 'io')), 448)
        self.assertEqual(len(pgr.type_to_type(self.topo, 'io', 'io')), 56)
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.type_to_type(self.topo, 'x', 'io')

    def test_all_to_all(self):
        pattern = pgr.all_to_all(self.topo)
        self.assertEqual(len(pattern), 4032)
        self.assertFalse(any(src == dst for src, dst in pattern))
        single = pgr.load_topology_config('./testing_data/single_switch.ini')[0]
        self.assertEqual(len(pgr.all_to_all(single)), 12)

    def test_transpose(self):
        pattern = pgr.mirror_c2io(self.topo)
        transposed = pgr.transpose(pattern)
        self.assertEqual(len(transposed), len(pattern))
        self.assertEqual(sorted(src for src, dst in transposed if dst in range(8, 15)), [47] * 7)
        self.assertEqual(pgr.transpose(transposed).pairs, pattern.pairs)
        self.assertEqual(transposed.name, 'transpose:c2io-mirror')

    def test_scatter_gather_shift(self):
        self.assertEqual(len(pgr.scatter(self.topo, 47)), 63)
        self.assertTrue(all(src == 47 for src, _ in pgr.scatter(self.topo, 47)))
        self.assertTrue(all(dst == 47 for _, dst in pgr.gather(self.topo, 47)))
        self.assertEqual(pgr.shift(self.topo, 8).pairs[:2], ((0, 8), (1, 9)))
        self.assertEqual(pgr.shift(self.topo, -1).pairs[0], (0, 63))
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.shift(self.topo, 64)
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.scatter(self.topo, 64)


class Test_Parse_Pattern_File(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def setUp(self):
        self.topo = pgr.load_topology_config('./testing_data/case_study.ini')[0]

    def test_parse_pattern_file(self):
        self.assertEqual(pgr.parse_pattern_file('8,47', self.topo).pairs, ((8, 47),))
        self.assertEqual(pgr.parse_pattern_file('src,dst\n\n# comment\n 8 , 47 \n9,47\n', self.topo).pairs,
                         ((8, 47), (9, 47)))
        self.assertEqual(len(pgr.parse_pattern_file('', self.topo)), 0)

    def test_parse_pattern_file_errors(self):
        for text in ('7,7', '99,0', '8,47\n8,47', '8', '8,47,9', 'a,b'):
            with self.assertRaises(pgr.Invalid_Data_Exception):
                pgr.parse_pattern_file(text, self.topo)


class Test_Select_Pattern(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def setUp(self):
        self.topo = pgr.load_topology_config('./testing_data/case_study.ini')[0]

    def test_select_pattern(self):
        self.assertEqual(len(pgr.select_pattern(self.topo, 'c2io-mirror')), 56)
        self.assertEqual(len(pgr.select_pattern(self.topo, 'all2all')), 4032)
        self.assertEqual(len(pgr.select_pattern(self.topo, 'type:io:compute')), 448)
        self.assertEqual(len(pgr.select_pattern(self.topo, 'file:./testing_data/c2io_subset.csv')), 7)
        self.assertEqual(len(pgr.select_pattern(self.topo, 'file:./testing_data/empty_pattern.csv')), 0)
        self.assertEqual(pgr.select_pattern(self.topo, 'gather:47').name, 'gather:47')
        self.assertEqual(pgr.select_pattern(self.topo, 'transpose:c2io-mirror').pairs[0], (39, 0))

    def test_select_pattern_errors(self):
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.select_pattern(self.topo, 'ring')
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.select_pattern(self.topo, 'type:io')
        for selector in ('file:./testing_data/no_such_file.csv', 'file:./testing_data/self_pair.csv',
                         'scatter:x', 'type:x:io'):
            with self.assertRaises(pgr.Invalid_Data_Exception):
                pgr.select_pattern(self.topo, selector)
