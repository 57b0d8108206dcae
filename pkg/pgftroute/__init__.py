#!/usr/bin/python3

"""
This package builds Parallel Generalized Fat-Trees (PGFTs), routes
communication patterns through them with the Dmodk, Smodk, Random and
type-grouped Gdmodk and Gsmodk algorithms, and evaluates the static congestion
metric of the resulting routes: for every port, the smaller of its distinct
source count and distinct destination count.

* pgftroute.exceptions comprises the exceptions used by the package.
* pgftroute.utility comprises a small collection of utility functions used by
  the package.
* pgftroute.topology comprises the base layer: PGFT parameters, switch and
  node addressing, ports, the link multigraph and its config loader.
* pgftroute.policy comprises the per-hop port-selection rules.
* pgftroute.routing computes routes and forwarding tables.
* pgftroute.patterns generates communication patterns.
* pgftroute.metric evaluates the congestion metric.
* pgftroute.processor comprises the command layer used by pgftcli.py, and
  pgftroute.statemsgs the result objects its commands return.
"""

from pgftroute.processor import *
from pgftroute.statemsgs import *
from pgftroute.metric import *
from pgftroute.patterns import *
from pgftroute.routing import *
from pgftroute.policy import *
from pgftroute.topology import *
from pgftroute.utility import *
from pgftroute.exceptions import *

__name__ = 'pgftroute.__init__'
