"""
Exact SLOCC classification and class counting for pure 2×M×N tripartite states.
"""

from . import utils, validation
from .exactnum import *
from .counting import *
from .pencil import *
from .nonlocal_params import *
from .catalog import *
from .storage import *

__version__ = "1.0.0"
