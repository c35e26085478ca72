# -*- coding: utf-8 -*-
"""
Functions to convert character tables and solver reports
to human-digestible and JSON-ready formats.
"""

from .text import format_as_text
from .as_dict import format_as_dict
from .utils import format_cyclo, format_fraction, format_numeric
