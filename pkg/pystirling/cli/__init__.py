# pylint: disable=missing-module-docstring

from .actions.binomial import binomial
from .actions.ext_bell import ext_bell
from .actions.family import family
from .actions.invert import invert
from .actions.knuth_pittel import knuth_pittel
from .actions.lagrange import lagrange
from .actions.table import table
from .actions.verify import verify
from .actions.version import version
