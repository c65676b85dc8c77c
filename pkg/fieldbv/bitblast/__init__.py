from .circuit import *
from .sat import *
from .dimacs import *
from .lower import *
from .lift import *
