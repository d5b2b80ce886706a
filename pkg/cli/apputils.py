#!/usr/bin/env python3

""" A module for helper functions for the cli module """

import re

# exceptions
from cli.exceptions import ConfigValueException

# typing
from typing import Tuple

_OVERRIDE = re.compile(r'^\s*([A-Za-z_]\w*)\.([A-Za-z_]\w*)\s*=(.*)$')

def exceptionName (exception: Exception) -> str:
    """
    Returns a string of the exceptions full name including the package.

    :param exception: exception to get the full name of
    """

    pattern = "\'(.*)\'"
    text = str(type(exception))

    return re.search(pattern, text).groups()[0]

def parseOverride (text: str) -> Tuple[str, str, str]:
    """
    Splits `section.key=value` into its parts; the key is lower-cased as INI keys are.

    :param text: override as given on the command line
    """

    match = _OVERRIDE.match(text)
    if not match:
        raise ConfigValueException(text, message=f'Override {text!r} is not of the form section.key=value.')

    section, key, value = match.groups()
    return section, key.lower(), value.strip()
