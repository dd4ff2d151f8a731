"""
Enumerations shared across the relmaj sub-packages.
"""

import enum


class Relation(str, enum.Enum):
    le = "<="
    eq = "="
    ge = ">="


class Sense(str, enum.Enum):
    maximize = "maximize"
    minimize = "minimize"


class Status(str, enum.Enum):
    optimal = "optimal"
    infeasible = "infeasible"
    unbounded = "unbounded"


class StochasticClass(str, enum.Enum):
    stochastic = "stochastic"
    substochastic = "substochastic"


class Method(str, enum.Enum):
    lp = "lp"
    geometric = "geometric"


class Verdict(str, enum.Enum):
    yes = "yes"
    no = "no"

    @classmethod
    def of(cls, flag: bool) -> "Verdict":
        return cls.yes if flag else cls.no


class OutputFormat(str, enum.Enum):
    json = "json"
    csv = "csv"
