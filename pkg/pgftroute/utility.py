#!/usr/bin/python3

"""
The pgftroute.utility module comprises a small collection of utility functions
used by other modules in the package: mixed-radix digit conversion (NIDs and
switch addresses are both mixed-radix numbers), integer-list parsing for the
PGFT notation and config rules, message formatting, and logging setup.
"""

import csv
import io
import json
import logging
import os
import re

import pgftroute.exceptions as excpt

__name__ = 'pgftroute.utility'


LOG_LEVEL_ENV_VAR = 'PGFTROUTE_LOG_LEVEL'


def join_with_commas_and_conjunction(values, conjunction='and', quote=False):
    """
This function joins a sequence of values with commas and a conjunction. It's
used to list the valid choices in error messages.

>>> join_with_commas_and_conjunction(['dmodk'])
'dmodk'
>>> join_with_commas_and_conjunction(['compute', 'io'], 'or')
'compute or io'
>>> join_with_commas_and_conjunction([1, 2, 3])
'1, 2, and 3'

:values:      The sequence of values to join; each is passed through str().
:conjunction: The conjunction to use with sequences longer than 1 element.
:quote:       If True, each value is wrapped in single quotes.
:return:      A comma-separated list string.
    """
    strs = [f"'{value}'" if quote else str(value) for value in values]
    if not strs:
        return ''
    elif len(strs) == 1:
        return strs[0]
    elif len(strs) == 2:
        return f'{strs[0]} {conjunction} {strs[1]}'
    return ', '.join(strs[:-1]) + f', {conjunction} ' + strs[-1]


# Both the NID of an end-node and the address of a switch are mixed-radix
# numbers. Digits are most-significant first throughout the package.

def int_to_digits(value, radices):
    """
This function decomposes a non-negative int into mixed-radix digits.

>>> int_to_digits(47, (2, 4, 8))
(1, 1, 7)

:value:   The int to decompose; must be in [0, product of radices).
:radices: The radix of each digit, most significant first.
:return:  A tuple of digits, most significant first.
    """
    digits = []
    for radix in reversed(radices):
        value, digit = divmod(value, radix)
        digits.append(digit)
    if value:
        raise excpt.Internal_Exception(f'value out of range for radices {tuple(radices)}')
    return tuple(reversed(digits))


def digits_to_int(digits, radices):
    """
This function recomposes an int from mixed-radix digits; it's the inverse of
int_to_digits().

>>> digits_to_int((1, 1, 7), (2, 4, 8))
47

:digits:  The digits, most significant first.
:radices: The radix of each digit, most significant first.
:return:  An int.
    """
    if len(digits) != len(radices):
        raise excpt.Internal_Exception('digit count does not match radix count')
    value = 0
    for digit, radix in zip(digits, radices):
        value = value * radix + digit
    return value


def format_address(level, digits):
    """
This function renders a switch address the way it's written in text, as a
parenthesized tuple of the level followed by the address digits.

>>> format_address(2, (0, 1))
'(2,0,1)'
    """
    return '(' + ','.join(str(part) for part in (level,) + tuple(digits)) + ')'


_int_list_re = re.compile(r'^\s*[0-9]+(\s*,\s*[0-9]+)*\s*$')


def parse_int_list(text, source):
    """
This function parses a comma-separated list of non-negative ints, tolerating
whitespace around the commas.

:text:   The string to parse, e.g. '8, 4, 2'.
:source: A name for the value being parsed, used in the error message.
:return: A tuple of ints.
    """
    if not _int_list_re.match(text):
        raise excpt.Invalid_Data_Exception(source, f"expected a comma-separated list of integers, got '{text}'")
    return tuple(int(token) for token in text.split(','))


def configure_logging(stream=None):
    """
This function configures the root logger once for the command-line front end.
Verbosity is read from the PGFTROUTE_LOG_LEVEL environment variable; unknown
level names fall back to WARNING.

:stream: The stream log records are written to (stderr by default).
:return: The level that was set, as an int.
    """
    level_name = os.environ.get(LOG_LEVEL_ENV_VAR, 'WARNING').strip().upper()
    level = logging.getLevelName(level_name)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, stream=stream,
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')
    return level


def csv_text(header, rows):
    """
This function renders a header and rows as CSV text with '\\n' line endings, so
repeated runs produce byte-identical files on every platform.

:header: A sequence of column names.
:rows:   An iterable of row sequences.
:return: A str.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def json_text(value):
    return json.dumps(value, indent=2) + '\n'
