#!/usr/bin/python3

import os
import unittest

import pgftroute as pgr
from tests import *


for testing_data_file in ('./testing_data/case_study.ini', './testing_data/single_switch.ini',
                          './testing_data/two_level.ini', './testing_data/mixed_types.ini',
                          './testing_data/c2io_subset.csv', './testing_data/empty_pattern.csv',
                          './testing_data/self_pair.csv'):
    if os.path.exists(testing_data_file):
        continue
    else:
        raise pgr.Internal_Exception(
            f"Could not access testing data file '{testing_data_file}'. Please "
            'ensure you are running the tests from a directory that '
            "contains the 'testing_data' directory distributed with pgftroute.")


if __name__ == '__main__':
    unittest.main()
