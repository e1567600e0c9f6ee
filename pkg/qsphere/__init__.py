"""qsphere: exact computation in the quantum sphere algebras"""

import logging
from logging import NullHandler

from qsphere.coeffq import GaussianRational, QMode, QRat
from qsphere.ncpoly import Letter, NCPoly
from qsphere.rewrite import build_rules, get_rules, normalize
from qsphere.suq2 import BasisVector


__all__ = ['BasisVector', 'GaussianRational', 'Letter', 'NCPoly', 'QMode',
           'QRat', 'build_rules', 'get_rules', 'normalize']
__version__ = "1.0.0"

# Applications must attach their own handlers in order to see messages.
# See qsphere/qs/main.py for an example.
log = logging.getLogger(__name__)
log.addHandler(NullHandler())
