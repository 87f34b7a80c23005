"""
Helpers for validating documents and dumping models under both Pydantic V1 and V2.
"""

# pyright: reportUnboundVariable=false

import json
from typing import Any, List, Type, TypeVar, Union

import pydantic
from pydantic import BaseModel

from pystirling.exceptions import InvalidSeriesDocument

IS_PYDANTIC_V2 = int(pydantic.VERSION.split(".", maxsplit=1)[0]) >= 2

if IS_PYDANTIC_V2:
    from pydantic import TypeAdapter
else:
    from pydantic import parse_obj_as

M = TypeVar("M", bound=BaseModel)
RawDocument = Union[str, bytes, Any]


def parse_model(model_type: Type[M], data: Any) -> M:
    if IS_PYDANTIC_V2:
        return model_type.model_validate(data)
    else:
        return model_type.parse_obj(data)


def _decode(data: RawDocument, source: str) -> Any:
    if not isinstance(data, (str, bytes)):
        return data

    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise InvalidSeriesDocument(source, str(exc)) from exc


def parse_document(model_type: Type[M], data: RawDocument, source: str = "<document>") -> M:
    """
    Validates a single JSON document, given either as text or already decoded.

    Raises:
        InvalidSeriesDocument: If the text is not JSON or does not match the model.
    """
    try:
        return parse_model(model_type, _decode(data, source))
    except pydantic.ValidationError as exc:
        raise InvalidSeriesDocument(source, str(exc)) from exc


def parse_documents(model_type: Type[M], data: RawDocument, source: str = "<document>") -> List[M]:
    """
    Validates a JSON array of documents of the same model.

    Raises:
        InvalidSeriesDocument: If the text is not JSON or some entry does not match the model.
    """
    decoded = _decode(data, source)
    try:
        if IS_PYDANTIC_V2:
            return TypeAdapter(List[model_type]).validate_python(decoded)
        else:
            return parse_obj_as(List[model_type], decoded)
    except pydantic.ValidationError as exc:
        raise InvalidSeriesDocument(source, str(exc)) from exc


def get_model_dump(model: BaseModel, *args, **kwargs):
    if IS_PYDANTIC_V2:
        return model.model_dump(*args, **kwargs)
    else:
        return model.dict(*args, **kwargs)


def get_model_dump_json(model: BaseModel, *args, **kwargs):
    if IS_PYDANTIC_V2:
        return model.model_dump_json(*args, **kwargs)
    else:
        return model.json(*args, **kwargs)
