#!/usr/bin/python3

"""
This module generates communication patterns: sets of (source NID, destination
NID) pairs. It covers all-to-all, type-to-type, the compute-to-IO mirror
pattern of the case study, scatter, gather, shift permutations, transposes, and
pair lists read from CSV files, plus the selector strings the command line uses
to name them.
"""

import csv
import logging

import pgftroute.exceptions as excpt
import pgftroute.topology as topology
import pgftroute.utility as util


__name__ = 'pgftroute.patterns'

log = logging.getLogger(__name__)


C2IO_MIRROR = 'c2io-mirror'

ALL_TO_ALL = 'all2all'

DEFAULT_IO_LABEL = 'io'

SELECTOR_FORMS = (C2IO_MIRROR, ALL_TO_ALL, 'type:<src>:<dst>', 'file:<path>', 'scatter:<nid>', 'gather:<nid>',
                  'shift:<k>', 'transpose:<selector>')


class Pattern(object):
    """
This class represents a communication pattern: an ordered set of (src, dst)
NID pairs for a topology with node_count end-nodes, and a name recording where
it came from. Pairs are validated on construction: NIDs must be in range,
src must differ from dst, and no pair may repeat.
    """
    __slots__ = 'name', 'pairs', 'node_count'

    def __init__(self, name, pairs, node_count):
        pairs = tuple((src, dst) for src, dst in pairs)
        seen = set()
        for src, dst in pairs:
            for nid in (src, dst):
                if not isinstance(nid, int) or not 0 <= nid < node_count:
                    raise excpt.Invalid_Data_Exception(name, f'NID {nid} is outside [0, {node_count})')
            if src == dst:
                raise excpt.Invalid_Data_Exception(name, f'pair ({src},{dst}) sends a node to itself')
            if (src, dst) in seen:
                raise excpt.Invalid_Data_Exception(name, f'pair ({src},{dst}) appears more than once')
            seen.add((src, dst))
        self.name = name
        self.pairs = pairs
        self.node_count = node_count

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __repr__(self):
        return f'Pattern({self.name!r}, {len(self.pairs)} pairs)'


def mirror_c2io(topo, compute_label=topology.DEFAULT_TYPE_LABEL, io_label=DEFAULT_IO_LABEL, name=C2IO_MIRROR):
    """
This function builds the compute-to-IO mirror pattern: every compute node
sends to the IO node of its symmetrical leaf, the leaf whose top copy digit is
rotated by half the top arity, other digits unchanged. On the case study NIDs
8 through 14 all send to NID 47.

:topo:          A topology.Topology object with exactly one io node per leaf.
:compute_label: The label of the sending nodes.
:io_label:      The label of the receiving nodes.
:return:        A Pattern object.
    """
    params = topo.params
    if params.h < 2:
        raise excpt.Invalid_Data_Exception(name, 'the mirror pattern needs at least two levels')
    top_arity = params.m[params.h - 1]
    if top_arity % 2:
        raise excpt.Invalid_Data_Exception(name, f'the top arity m[{params.h - 1}] = {top_arity} is odd, so leaves '
                                                 'have no symmetrical counterpart')

    io_of_leaf = {}
    for node in topo.nodes_of_type(io_label):
        leaf = topo.leaf_of(node.nid)
        if leaf in io_of_leaf:
            raise excpt.Invalid_Data_Exception(name, f"leaf {leaf} has more than one '{io_label}' node")
        io_of_leaf[leaf] = node.nid
    for leaf in topo.switches(0):
        if leaf not in io_of_leaf:
            raise excpt.Invalid_Data_Exception(name, f"leaf {leaf} has no '{io_label}' node")

    pairs = []
    for node in topo.nodes_of_type(compute_label):
        copy_digits = topo.leaf_of(node.nid).copy_digits
        mirrored_digits = ((copy_digits[0] + top_arity // 2) % top_arity,) + copy_digits[1:]
        pairs.append((node.nid, io_of_leaf[topology.Switch_Addr(0, mirrored_digits, ())]))
    return Pattern(name, pairs, topo.node_count)


def type_to_type(topo, src_label, dst_label, name=None):
    """
This function builds the full bipartite pattern from every node of one type
to every node of another (or the same) type, leaving out self-pairs.
    """
    name = name or f'type:{src_label}:{dst_label}'
    present = {node.type_label for node in topo.nodes}
    for label in (src_label, dst_label):
        if label not in present and label not in topo.labels:
            raise excpt.Invalid_Data_Exception(name, f"unknown node-type label '{label}'; known labels are "
                                               + util.join_with_commas_and_conjunction(topo.labels, quote=True))
    pairs = [(src.nid, dst.nid) for src in topo.nodes_of_type(src_label) for dst in topo.nodes_of_type(dst_label)
             if src.nid != dst.nid]
    return Pattern(name, pairs, topo.node_count)


def all_to_all(topo, name=ALL_TO_ALL):
    node_count = topo.node_count
    pairs = [(src, dst) for src in range(node_count) for dst in range(node_count) if src != dst]
    return Pattern(name, pairs, node_count)


def scatter(topo, root, name=None):
    """
This function builds the one-to-all pattern from the root NID.
    """
    name = name or f'scatter:{root}'
    topo.check_nid(root, name)
    return Pattern(name, [(root, dst) for dst in range(topo.node_count) if dst != root], topo.node_count)


def gather(topo, root, name=None):
    """
This function builds the all-to-one pattern toward the root NID.
    """
    name = name or f'gather:{root}'
    topo.check_nid(root, name)
    return Pattern(name, [(src, root) for src in range(topo.node_count) if src != root], topo.node_count)


def shift(topo, offset, name=None):
    """
This function builds the shift permutation where NID n sends to
(n + offset) mod N.
    """
    name = name or f'shift:{offset}'
    node_count = topo.node_count
    if offset % node_count == 0:
        raise excpt.Invalid_Data_Exception(name, f'a shift by a multiple of {node_count} sends every node to itself')
    return Pattern(name, [(src, (src + offset) % node_count) for src in range(node_count)], node_count)


def transpose(pattern, name=None):
    return Pattern(name or f'transpose:{pattern.name}', [(dst, src) for src, dst in pattern.pairs],
                   pattern.node_count)


def parse_pattern_file(text, topo, name='pattern file'):
    """
This function parses a pattern CSV: one 'src,dst' pair per line. Blank lines
and lines starting with '#' are skipped, and a leading 'src,dst' header line is
accepted.

:text:   The file contents.
:topo:   The topology.Topology the NIDs refer to.
:name:   The pattern name, used in error messages.
:return: A Pattern object.
    """
    pairs = []
    lines = text.splitlines()
    for line_number, row in enumerate(csv.reader(lines), start=1):
        fields = [field.strip() for field in row]
        if not any(fields) or fields[0].startswith('#'):
            continue
        if not pairs and [field.lower() for field in fields] == ['src', 'dst']:
            continue
        if len(fields) != 2 or not all(field.isdigit() for field in fields):
            raise excpt.Invalid_Data_Exception(name, f"line {line_number}: expected 'src,dst', got "
                                                     f"'{lines[line_number - 1].strip()}'")
        pairs.append((int(fields[0]), int(fields[1])))
    log.debug('%s: read %d pairs', name, len(pairs))
    return Pattern(name, pairs, topo.node_count)


def _parse_nid_argument(selector, argument):
    if not argument.strip().lstrip('-').isdigit():
        raise excpt.Invalid_Data_Exception(selector, f"expected an integer, got '{argument}'")
    return int(argument)


def select_pattern(topo, selector):
    """
This function builds the pattern a command-line selector names. The accepted
forms are listed in SELECTOR_FORMS; transpose: wraps any other selector.

:topo:     A topology.Topology object.
:selector: The selector string, e.g. 'type:compute:io' or 'file:pairs.csv'.
:return:   A Pattern object.
    """
    selector = selector.strip()
    kind, _, argument = selector.partition(':')
    if selector == C2IO_MIRROR:
        return mirror_c2io(topo)
    elif selector == ALL_TO_ALL:
        return all_to_all(topo)
    elif kind == 'transpose' and argument:
        return transpose(select_pattern(topo, argument), name=selector)
    elif kind == 'type' and argument.count(':') == 1:
        src_label, dst_label = argument.split(':')
        return type_to_type(topo, src_label, dst_label, name=selector)
    elif kind == 'file' and argument:
        try:
            with open(argument, encoding='utf-8') as pattern_file:
                text = pattern_file.read()
        except OSError as err:
            raise excpt.Invalid_Data_Exception(argument, f'could not read pattern file: {err.strerror}')
        return parse_pattern_file(text, topo, name=selector)
    elif kind == 'scatter' and argument:
        return scatter(topo, _parse_nid_argument(selector, argument), name=selector)
    elif kind == 'gather' and argument:
        return gather(topo, _parse_nid_argument(selector, argument), name=selector)
    elif kind == 'shift' and argument:
        return shift(topo, _parse_nid_argument(selector, argument), name=selector)
    raise excpt.Bad_Usage_Exception('pattern', f"unrecognized pattern selector '{selector}'; expected one of "
                                    + util.join_with_commas_and_conjunction(SELECTOR_FORMS, 'or'))
