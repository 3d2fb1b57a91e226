# coding:utf-8
from ._typing import Agent, ClassifiedDetails, Matching, SearchDetails

__all__ = [
    'Agent',
    'ClassifiedDetails',
    'Matching',
    'SearchDetails',
]
