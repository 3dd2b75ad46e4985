"""Distribution families: the compounded Burr model and its baselines."""

from .base import DiscreteDistribution, Distribution, Logistic
from .burr import Burr, CBurr
from .competitors import (
    BurrMO,
    DiscretePareto,
    DiscretePowerLaw,
    ExponentiatedBurr,
    LogNormal,
    Lomax,
    PoissonDist,
    PowerLawCutoff,
)

#: Family tag -> evaluator class. Tags double as CLI model names.
FAMILIES = {
    "cburr": CBurr,
    "burr": Burr,
    "power-law": DiscretePowerLaw,
    "pareto": DiscretePareto,
    "log-normal": LogNormal,
    "poisson": PoissonDist,
    "power-law-cutoff": PowerLawCutoff,
    "lomax": Lomax,
    "exponentiated-burr": ExponentiatedBurr,
    "burr-mo": BurrMO,
}

COMPETITOR_FAMILIES = tuple(tag for tag in FAMILIES if tag != "cburr")

__all__ = [
    "Distribution",
    "DiscreteDistribution",
    "Logistic",
    "Burr",
    "CBurr",
    "DiscretePowerLaw",
    "DiscretePareto",
    "LogNormal",
    "PoissonDist",
    "PowerLawCutoff",
    "Lomax",
    "ExponentiatedBurr",
    "BurrMO",
    "FAMILIES",
    "COMPETITOR_FAMILIES",
]
