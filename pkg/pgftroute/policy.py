#!/usr/bin/python3

"""
This module holds the per-hop port-selection rules: the Dmodk closed form, its
source-based mirror Smodk, a seeded counter-based Random choice, and the
type-grouped NID reindexing that turns Dmodk and Smodk into Gdmodk and Gsmodk.
"""

import hashlib
import logging

import pgftroute.exceptions as excpt
import pgftroute.topology as topology
import pgftroute.utility as util


__name__ = 'pgftroute.policy'

log = logging.getLogger(__name__)


RANDOM = 'random'

DMODK = 'dmodk'

SMODK = 'smodk'

BASE_ALGORITHMS = (RANDOM, DMODK, SMODK)

# Every algorithm name accepted by make_policy(), mapped to its base algorithm
# and whether NIDs are reindexed by type first.
ALGORITHMS = {'random': (RANDOM, False),
              'dmodk': (DMODK, False),
              'smodk': (SMODK, False),
              'gdmodk': (DMODK, True),
              'gsmodk': (SMODK, True)}

MAX_SEED = 2 ** 64 - 1


def dmodk_up_index(level, id_value, params):
    """
This function computes the Dmodk up slot of a level-l switch:
floor(id / (w[1] * ... * w[l])) mod (w[l+1] * p[l+1]). With round-robin slot
ordering the result selects the parent (slot mod w[l+1]) and the parallel round
(slot div w[l+1]).

>>> dmodk_up_index(1, 47, case_study_params)
3

:level:    The level of the switch, in [0, h-1).
:id_value: The NID (or gNID) the choice is keyed on.
:params:   A topology.Pgft_Params object.
:return:   An int up slot.
    """
    if not 0 <= level < params.h - 1:
        raise excpt.Invalid_Data_Exception('dmodk_up_index', f'level {level} has no up-ports; it must be in '
                                                             f'[0, {params.h - 1})')
    if id_value < 0:
        raise excpt.Invalid_Data_Exception('dmodk_up_index', f'id {id_value} is negative')
    return (id_value // params.group_product(level)) % params.up_port_count(level)


def down_parallel_index(level, id_value, params):
    """
This function computes the parallel round a level-l switch uses toward the
child the destination forces: floor(id / (w[1] * ... * w[l])) mod p[l]. At
level 0 it picks the delivery link among the p[0] links to the end-node. The
round always equals the one the mirrored up choice one level lower arrived on.

:level:    The level of the switch, in [0, h).
:id_value: The NID (or gNID) the choice is keyed on.
:params:   A topology.Pgft_Params object.
:return:   An int parallel round in [0, p[level]).
    """
    if not 0 <= level < params.h:
        raise excpt.Invalid_Data_Exception('down_parallel_index', f'level {level} is outside [0, {params.h})')
    if id_value < 0:
        raise excpt.Invalid_Data_Exception('down_parallel_index', f'id {id_value} is negative')
    return (id_value // params.group_product(level)) % params.p[level]


def random_index(seed, src, dst, level, direction, option_count):
    """
This function returns a reproducible pseudo-random index in
[0, option_count). It's a keyed BLAKE2b hash of (src, dst, level, direction)
with the 64-bit seed as the key, so each draw is independent of the order in
which pairs are evaluated.

:seed:         An int in [0, 2**64).
:src:          The source NID.
:dst:          The destination NID.
:level:        The level of the switch making the choice.
:direction:    topology.UP or topology.DOWN.
:option_count: The number of options, at least 1.
:return:       An int.
    """
    if option_count < 1:
        raise excpt.Invalid_Data_Exception('random_index', f'option_count must be at least 1, got {option_count}')
    if not 0 <= seed <= MAX_SEED:
        raise excpt.Invalid_Data_Exception('random_index', f'seed {seed} is not a 64-bit unsigned integer')
    hasher = hashlib.blake2b(f'{src}:{dst}:{level}:{direction}'.encode('ascii'), digest_size=8,
                             key=seed.to_bytes(8, 'little'))
    return int.from_bytes(hasher.digest(), 'little') % option_count


def group_reindex(topo, type_order):
    """
This function reindexes NIDs by node type: every type gets a contiguous block
of grouped NIDs (gNIDs), blocks follow type_order, and within a block the
original NID order is kept, so consecutive gNIDs stay topologically close.

On the case study with order (compute, io), compute NID 8 becomes gNID 7 and
the io nodes 7, 15, ..., 63 become gNIDs 56 through 63.

:topo:       A topology.Topology object.
:type_order: An ordered sequence of labels covering every label present.
:return:     A tuple mapping each NID (as index) to its gNID.
    """
    type_order = tuple(type_order)
    duplicates = sorted({label for label in type_order if type_order.count(label) > 1})
    if duplicates:
        raise excpt.Invalid_Data_Exception('type order', 'repeated label(s) '
                                           + util.join_with_commas_and_conjunction(duplicates, quote=True))
    present = []
    for node in topo.nodes:
        if node.type_label not in present:
            present.append(node.type_label)
    missing = [label for label in present if label not in type_order]
    if missing:
        raise excpt.Invalid_Data_Exception('type order', 'no position given for label(s) '
                                           + util.join_with_commas_and_conjunction(missing, quote=True))
    unknown = [label for label in type_order if label not in present and label not in topo.labels]
    if unknown:
        raise excpt.Invalid_Data_Exception('type order', 'unknown label(s) '
                                           + util.join_with_commas_and_conjunction(unknown, quote=True))

    gnids = [None] * topo.node_count
    next_gnid = 0
    for label in type_order:
        for node in topo.nodes:
            if node.type_label == label:
                gnids[node.nid] = next_gnid
                next_gnid += 1
    if next_gnid != topo.node_count or None in gnids:
        raise excpt.Internal_Exception('group_reindex did not produce a bijection')
    return tuple(gnids)


class Selection_Policy(object):
    """
This class represents a port-selection policy: a base algorithm (random, dmodk
or smodk), an optional NID-to-gNID map for the grouped variants, and the seed
of the random algorithm. Evaluating it is a pure function of the policy, the
pair and the hop position; instances are immutable.
    """
    __slots__ = 'name', 'base', 'id_map', 'seed', 'type_order'

    def __init__(self, base, id_map=None, seed=0, name=None, type_order=None):
        """
This __init__ method validates and stores the policy.

:base:       One of RANDOM, DMODK or SMODK.
:id_map:     A sequence mapping NID to gNID, or None.
:seed:       The 64-bit seed; only used by RANDOM.
:name:       The algorithm name shown in reports; defaults to base, prefixed
             with 'g' when id_map is given.
:type_order: The type order id_map was built from, kept for describe().
        """
        if base not in BASE_ALGORITHMS:
            raise excpt.Bad_Usage_Exception('policy', f"unknown base algorithm '{base}'; expected "
                                            + util.join_with_commas_and_conjunction(BASE_ALGORITHMS, 'or'))
        if id_map is not None:
            id_map = tuple(id_map)
            if base == RANDOM:
                raise excpt.Bad_Usage_Exception('policy', 'the random algorithm takes no NID reindexing')
            if sorted(id_map) != list(range(len(id_map))):
                raise excpt.Invalid_Data_Exception('policy', 'the id map is not a bijection on [0, node count)')
        if not isinstance(seed, int) or not 0 <= seed <= MAX_SEED:
            raise excpt.Bad_Usage_Exception('policy', f'seed {seed} is not a 64-bit unsigned integer')
        if name is None:
            name = ('g' + base) if id_map is not None else base
        object.__setattr__(self, 'name', name)
        object.__setattr__(self, 'base', base)
        object.__setattr__(self, 'id_map', id_map)
        object.__setattr__(self, 'seed', seed)
        object.__setattr__(self, 'type_order', tuple(type_order) if type_order is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError('Selection_Policy is immutable')

    def __repr__(self):
        return f'Selection_Policy({self.name!r})'

    @property
    def is_destination_based(self):
        return self.base == DMODK

    def effective_id(self, src, dst):
        """
This method returns the id the modk formulas are keyed on for a pair: the
destination (dmodk family) or the source (smodk family), mapped to its gNID
when the policy is grouped.
        """
        if self.base == RANDOM:
            raise excpt.Internal_Exception('the random algorithm has no effective id')
        nid = dst if self.base == DMODK else src
        return self.id_map[nid] if self.id_map is not None else nid

    def up_slot(self, params, level, src, dst):
        """
This method returns the up slot a level-l switch uses for the pair (src, dst).
        """
        if self.base == RANDOM:
            return random_index(self.seed, src, dst, level, topology.UP, params.up_port_count(level))
        return dmodk_up_index(level, self.effective_id(src, dst), params)

    def down_round(self, params, level, src, dst):
        """
This method returns the parallel round a level-l switch uses toward the child
on the way to dst (or toward dst itself, at a leaf).
        """
        if self.base == RANDOM:
            return random_index(self.seed, src, dst, level, topology.DOWN, params.p[level])
        return down_parallel_index(level, self.effective_id(src, dst), params)

    def describe(self):
        """
This method returns the policy's metadata as a JSON-ready dict, keeping the
composition of grouped algorithms visible.
        """
        description = {'algorithm': self.name, 'base': self.base, 'grouped': self.id_map is not None}
        if self.base == RANDOM:
            description['seed'] = self.seed
        if self.type_order is not None:
            description['type_order'] = list(self.type_order)
        return description


def make_policy(algorithm, topo, seed=0, type_order=None):
    """
This function builds a Selection_Policy from an algorithm name.

:algorithm:  One of the keys of ALGORITHMS.
:topo:       The topology.Topology the policy will route on.
:seed:       The seed of the random algorithm; defaults to 0.
:type_order: The label order used by the grouped algorithms; defaults to the
             topology's label order (default label first).
:return:     A Selection_Policy object.
    """
    if algorithm not in ALGORITHMS:
        raise excpt.Bad_Usage_Exception('algorithm', f"unknown algorithm '{algorithm}'; expected "
                                        + util.join_with_commas_and_conjunction(ALGORITHMS, 'or', quote=True))
    base, grouped = ALGORITHMS[algorithm]
    seed = 0 if seed is None else seed
    if not grouped:
        return Selection_Policy(base, seed=seed, name=algorithm)
    if not topo.type_rules:
        raise excpt.Bad_Usage_Exception('algorithm', f"'{algorithm}' needs node-type rules; none are configured")
    type_order = topo.labels if type_order is None else tuple(type_order)
    id_map = group_reindex(topo, type_order)
    log.debug('%s: reindexed %d NIDs by type order %s', algorithm, topo.node_count, type_order)
    return Selection_Policy(base, id_map=id_map, seed=seed, name=algorithm, type_order=type_order)
