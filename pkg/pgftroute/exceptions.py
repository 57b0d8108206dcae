#!/usr/bin/python3

"""
This module stores the exceptions used by other pgftroute modules. The command
processor maps them onto exit codes: Bad_Usage_Exception to 1 and
Invalid_Data_Exception to 2.
"""

__name__ = 'pgftroute.exceptions'


class Internal_Exception(Exception):
    """
This Exception subclass represents an internal error: a broken invariant that
no user input should be able to trigger.
    """
    pass


class Invalid_Data_Exception(Exception):
    """
This Exception subclass represents an error caused by invalid input data: a
malformed PGFT notation string, a bad config file, an out-of-range NID, level or
port slot, or an invalid communication pattern.
    """
    __slots__ = 'source', 'message'

    def __init__(self, source, message):
        """
This __init__ method initializes an Invalid_Data_Exception.

:source:  A short string naming where the bad data came from (a file path, an
          operation name, or a pair of NIDs).
:message: The exception message.
        """
        super().__init__(f'{source}: {message}')
        self.source = source
        self.message = message


class Bad_Usage_Exception(Exception):
    """
This Exception subclass represents an error caused by a misuse of a command or
an operation, such as requesting forwarding tables under a source-based policy.
    """
    __slots__ = 'command', 'message'

    def __init__(self, command, message):
        """
This __init__ method initializes a Bad_Usage_Exception.

:command: The command or operation that was being executed when this error was
          encountered.
:message: The exception message.
        """
        super().__init__(f'{command}: {message}')
        self.command = command
        self.message = message
