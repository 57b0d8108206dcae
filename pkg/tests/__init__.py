#!/usr/bin/python3

from pgftroute import *

from tests.test_utility import *
from tests.test_topology import *
from tests.test_policy import *
from tests.test_routing import *
from tests.test_patterns import *
from tests.test_metric import *
from tests.test_commands import *
from tests.test_acceptance import *

__name__ = 'tests.__init__'
