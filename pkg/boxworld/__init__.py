from __future__ import absolute_import

version = '1.0.0'

from .box import Scenario, Box  # NOQA
from .polytope import VertexSet  # NOQA
from .ensembles import Ensemble, minimal_ensembles  # NOQA
