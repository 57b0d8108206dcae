#!/usr/bin/python3

import math
import unittest

from hypothesis import given, settings, strategies as st

from .context import pgftroute as pgr

__name__ = 'tests.test_policy'


TEST_TOPOLOGY_FILES = ('./testing_data/case_study.ini', './testing_data/two_level.ini',
                       './testing_data/single_switch.ini', './testing_data/mixed_types.ini')


class Test_Dmodk_Up_Index(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def setUp(self):
        self.params = pgr.parse_pgft_spec('PGFT(3; 8,4,2; 1,2,1; 1,1,4)')

    def test_dmodk_up_index(self):
        self.assertEqual(pgr.dmodk_up_index(0, 47, self.params), 1)
        self.assertEqual(pgr.dmodk_up_index(1, 47, self.params), 3)
        self.assertEqual(pgr.dmodk_up_index(0, 0, self.params), 0)

    def test_dmodk_up_index_level_out_of_range(self):
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.dmodk_up_index(2, 47, self.params)
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.dmodk_up_index(-1, 47, self.params)

    def test_dmodk_up_index_is_periodic(self):
        for level in range(self.params.h - 1):
            period = self.params.group_product(level) * self.params.up_port_count(level)
            for id_value in range(200):
                self.assertEqual(pgr.dmodk_up_index(level, id_value + period, self.params),
                                 pgr.dmodk_up_index(level, id_value, self.params))


class Test_Down_Parallel_Index(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def setUp(self):
        self.params = pgr.parse_pgft_spec('PGFT(3; 8,4,2; 1,2,1; 1,1,4)')

    def test_down_parallel_index(self):
        self.assertEqual(pgr.down_parallel_index(2, 47, self.params), 3)
        self.assertEqual(pgr.down_parallel_index(2, 0, self.params), 0)
        self.assertEqual(pgr.down_parallel_index(1, 5, self.params), 0)
        self.assertEqual(pgr.down_parallel_index(0, 47, self.params), 0)

    def test_down_parallel_index_level_out_of_range(self):
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.down_parallel_index(3, 47, self.params)

    def test_io_nodes_use_the_last_round(self):
        for io_nid in range(7, 64, 8):
            self.assertEqual(pgr.down_parallel_index(2, io_nid, self.params), 3)

    def test_decomposition_consistency(self):
        for path in TEST_TOPOLOGY_FILES:
            params = pgr.load_topology_config(path)[0].params
            for level in range(params.h - 1):
                for id_value in range(10000):
                    self.assertEqual(pgr.down_parallel_index(level + 1, id_value, params),
                                     pgr.dmodk_up_index(level, id_value, params) // params.w[level + 1])


class Test_Random_Index(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def test_single_option(self):
        for src in range(20):
            self.assertEqual(pgr.random_index(12345, src, 63 - src, 1, pgr.UP, 1), 0)

    def test_determinism(self):
        first = pgr.random_index(7, 8, 47, 1, pgr.UP, 8)
        self.assertEqual(pgr.random_index(7, 8, 47, 1, pgr.UP, 8), first)
        values = {pgr.random_index(seed, 8, 47, 1, pgr.UP, 1 << 30) for seed in range(10)}
        self.assertGreater(len(values), 1)

    def test_uniformity(self):
        draws = 10000
        frequencies = [0] * 8
        for index in range(draws):
            frequencies[pgr.random_index(2024, index, index + 1, 0, pgr.UP, 8)] += 1
        expected = draws / 8
        sigma = math.sqrt(draws * (1 / 8) * (7 / 8))
        for frequency in frequencies:
            self.assertLess(abs(frequency - expected), 8 * sigma)

    def test_errors(self):
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.random_index(0, 8, 47, 1, pgr.UP, 0)
        with self.assertRaises(pgr.Invalid_Data_Exception):
            pgr.random_index(2 ** 64, 8, 47, 1, pgr.UP, 4)


class Test_Group_Reindex(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def setUp(self):
        self.topo = pgr.load_topology_config('./testing_data/case_study.ini')[0]

    def test_group_reindex_case_study(self):
        gnids = pgr.group_reindex(self.topo, ('compute', 'io'))
        self.assertEqual(gnids[7], 56)
        self.assertEqual(gnids[47], 61)
        self.assertEqual(gnids[0], 0)
        self.assertEqual(gnids[8], 7)
        self.assertEqual([gnids[nid] for nid in range(7, 64, 8)], list(range(56, 64)))
        self.assertEqual(sorted(gnids), list(range(64)))

    def test_group_reindex_preserves_order_within_types(self):
        topo, type_order = pgr.load_topology_config('./testing_data/mixed_types.ini')
        gnids = pgr.group_reindex(topo, type_order)
        self.assertEqual(gnids[7], 0)
        self.assertEqual(gnids[0], 8)
        self.assertEqual(gnids[32], 9)
        self.assertEqual(gnids[1], 10)
        for label in type_order:
            mapped = [gnids[node.nid] for node in topo.nodes_of_type(label)]
            self.assertEqual(mapped, sorted(mapped))

    def test_single_type_is_identity(self):
        topo = pgr.build_topology(pgr.parse_pgft_spec('PGFT(3; 8,4,2; 1,2,1; 1,1,4)'))
        self.assertEqual(pgr.group_reindex(topo, ('compute',)), tuple(range(64)))

    def test_group_reindex_errors(self):
        for type_order in (('compute',), ('compute', 'io', 'storage'), ('compute', 'io', 'io')):
            with self.assertRaises(pgr.Invalid_Data_Exception):
                pgr.group_reindex(self.topo, type_order)


class Test_Make_Policy(unittest.TestCase):

    def __init__(self, *argl, **argd):
        super().__init__(*argl, **argd)
        self.maxDiff = None

    def setUp(self):
        self.topo = pgr.load_topology_config('./testing_data/case_study.ini')[0]

    def test_make_policy(self):
        self.assertEqual(pgr.make_policy('dmodk', self.topo).describe(),
                         {'algorithm': 'dmodk', 'base': 'dmodk', 'grouped': False})
        self.assertEqual(pgr.make_policy('gsmodk', self.topo).describe(),
                         {'algorithm': 'gsmodk', 'base': 'smodk', 'grouped': True, 'type_order': ['compute', 'io']})
        self.assertEqual(pgr.make_policy('random', self.topo, seed=None).seed, 0)
        self.assertEqual(pgr.make_policy('random', self.topo, seed=9).describe()['seed'], 9)

    def test_effective_id(self):
        self.assertEqual(pgr.make_policy('dmodk', self.topo).effective_id(8, 47), 47)
        self.assertEqual(pgr.make_policy('smodk', self.topo).effective_id(8, 47), 8)
        self.assertEqual(pgr.make_policy('gdmodk', self.topo).effective_id(8, 47), 61)
        self.assertEqual(pgr.make_policy('gsmodk', self.topo).effective_id(8, 47), 7)

    def test_make_policy_errors(self):
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.make_policy('ftree', self.topo)
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.make_policy('gdmodk', pgr.build_topology(self.topo.params))
        with self.assertRaises(pgr.Bad_Usage_Exception):
            pgr.make_policy('random', self.topo, seed=-1)

    def test_policy_is_immutable(self):
        with self.assertRaises(AttributeError):
            pgr.make_policy('dmodk', self.topo).seed = 3

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(sorted(pgr.ALGORITHMS)), st.integers(min_value=0, max_value=63),
           st.integers(min_value=0, max_value=63), st.integers(min_value=0, max_value=1))
    def test_policy_evaluation_is_pure(self, algorithm, src, dst, level):
        first = pgr.make_policy(algorithm, self.topo, seed=11)
        second = pgr.make_policy(algorithm, self.topo, seed=11)
        params = self.topo.params
        self.assertEqual(first.up_slot(params, level, src, dst), second.up_slot(params, level, src, dst))
        self.assertEqual(first.down_round(params, level + 1, src, dst), second.down_round(params, level + 1, src, dst))
