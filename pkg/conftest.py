from hypothesis import HealthCheck, settings

# test_pgftroute.py re-exports the tests package (`from tests import *`), so
# pytest collects each Hypothesis test twice; that trips differing_executors.
settings.register_profile('pgftroute', suppress_health_check=[HealthCheck.differing_executors])
settings.load_profile('pgftroute')
