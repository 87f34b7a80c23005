"""
JSON documents for series: `{"order": N, "taylor": ["t_0", ..., "t_N"]}` with rationals as strings.
"""

import json
import os
from fractions import Fraction
from typing import Any, Dict, List

from pydantic import BaseModel, Field

from pystirling.exceptions import InvalidSeriesDocument
from pystirling.logger import logger
from pystirling.pydantic_utils import IS_PYDANTIC_V2, get_model_dump, parse_document
from pystirling.series.power_series import PowerSeries

if IS_PYDANTIC_V2:
    from pydantic import model_validator
else:
    from pydantic import root_validator


class SeriesDocument(BaseModel):
    """
    Serialized series. The list of Taylor coefficients must have `order + 1` entries.
    """

    order: int = Field(ge=0)
    taylor: List[str]

    if IS_PYDANTIC_V2:

        @model_validator(mode="after")  # type: ignore
        def _validate_length(self) -> "SeriesDocument":
            if len(self.taylor) != self.order + 1:
                raise ValueError("taylor must contain order + 1 coefficients")
            return self

    else:

        @root_validator  # type: ignore
        def _validate_length(cls, values: Dict[str, Any]) -> Dict[str, Any]:
            if values.get("taylor") is not None and len(values["taylor"]) != values.get("order", -1) + 1:
                raise ValueError("taylor must contain order + 1 coefficients")
            return values


def series_from_document(data: Any, source: str = "<series>") -> PowerSeries:
    """
    Builds a series from a parsed JSON document.

    Raises:
        InvalidSeriesDocument: If the document does not follow the schema.
    """
    document = parse_document(SeriesDocument, data, source)
    try:
        return PowerSeries.from_taylor([Fraction(value) for value in document.taylor], document.order)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidSeriesDocument(source, str(exc)) from exc


def series_to_document(f: PowerSeries) -> Dict[str, Any]:
    return get_model_dump(SeriesDocument(order=f.order, taylor=[str(value) for value in f.taylor_coefficients()]))


def load_series(path: str) -> PowerSeries:
    """
    Reads a series document from disk.

    Raises:
        InvalidSeriesDocument: If the file does not exist or is not a valid document.
    """
    logger.debug("Loading series from %s", path)
    if not os.path.exists(path):
        raise InvalidSeriesDocument(path, "file does not exist")

    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise InvalidSeriesDocument(path, str(exc)) from exc

    return series_from_document(data, path)
