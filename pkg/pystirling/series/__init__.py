# pylint: disable=missing-module-docstring

from .documents import SeriesDocument, load_series, series_from_document, series_to_document
from .functions import (
    exp_full,
    exp_series,
    expm,
    geometric,
    identity,
    log1p_series,
    logm,
    power_of_x,
    taylor_power,
)
from .inverse import invert_series
from .laurent import LaurentPoly1, compose_1case
from .power_series import (
    PowerSeries,
    compose_0case,
    derive,
    iterated_lie_derivative,
    lie_derive,
    series_mul,
    series_reciprocal,
)
from .sampling import random_rational, random_sequence, random_series
