# pylint: disable=missing-module-docstring

from .families import FamilyEntry, family_names, lookup_family, named_series, series_names
from .output import emit_value, latex_rows, pretty_print, print_poly, print_report, series_text
