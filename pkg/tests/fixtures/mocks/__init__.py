from .CriterionStub import CriterionStub

__all__ = [
    "CriterionStub"
]
