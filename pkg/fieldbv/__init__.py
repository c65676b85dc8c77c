from ._constants import __version__
from ._settings import *
from .errors import *
from .term import *
from .oracle import *
from .range_analysis import *
from .translate import *
from .bitblast import *
from .frontend import *
from .benchgen import *
from .plot import *
