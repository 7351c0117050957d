from .base import Suite
from .symmetrization import SymmetrizationSuite
from .duflo import DufloSuite
from .exponential import ExpmapSuite

suites = {
    "symmetrization": SymmetrizationSuite,
    "duflo": DufloSuite,
    "expmap": ExpmapSuite,
}
