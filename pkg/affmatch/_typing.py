# coding:utf-8
import logging
from typing import (Any, Callable, Iterable, Tuple, TypedDict,
                    TypeVar, Union)


# Perfect matching: employer index per applicant index.
Matching = Tuple[int, ...]

# Agents may be addressed by roster label or by roster index.
Agent = Union[str, int]


class _SearchDetails(TypedDict):
    matching: Matching
    nodes: int
    cuts: int
    elapsed: float


class SearchDetails(_SearchDetails, total=False):
    cost: int  # present in the on_incumbent case
    cut: Any  # present in the on_cut case, the StabilityCut added
    status: str  # present in the on_finish case


class ClassifiedDetails(TypedDict):
    notion: str
    index: int
    matching: Matching
    stable: bool


T = TypeVar("T")

_Handler = Callable[[Any], None]
_Handlers = Union[_Handler, Iterable[_Handler], None]
_MaybeCallable = Union[T, Callable[[], T]]
_MaybeLogger = Union[str, logging.Logger, None]
