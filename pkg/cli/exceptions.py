#!/usr/bin/env python3

""" All exceptions raised by the cli package """

class ConfigParseException(Exception):
    """
    Raised when the configuration text is not valid INI.

    Attributes:
        line : line number of the error (None when unknown)
    """
    def __init__(self, line: int, message: str = None) -> None:
        self.line = line
        if not message:
            message = f'Cannot parse configuration at line {line}.'
        self.message = message
        super().__init__(self.message)

class ConfigValueException(Exception):
    """
    Raised when a configuration value violates an invariant.

    Attributes:
        key : dotted key of the value (e.g. basis.b)
    """
    def __init__(self, key: str, message: str = None) -> None:
        self.key = key
        if not message:
            message = f'Invalid configuration value for {key}.'
        elif not message.startswith(key):
            message = f'{key}: {message}'
        self.message = message
        super().__init__(self.message)

class UnknownStateException(Exception):
    """ Raised when a state index does not refer to a solved state. """
    def __init__(self, index: int, available: int, message: str = None) -> None:
        self.index = index
        self.available = available
        if not message:
            message = f'State {index} requested but only {available} states were found.'
        self.message = message
        super().__init__(self.message)
