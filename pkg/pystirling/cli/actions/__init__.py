# pylint: disable=missing-module-docstring

from .binomial import binomial
from .ext_bell import ext_bell
from .family import check_routes, family
from .invert import invert
from .knuth_pittel import knuth_pittel
from .lagrange import lagrange
from .table import table
from .verify import verify
from .version import version
