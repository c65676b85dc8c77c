from .problem import *
from .parser import *
from .pipeline import *
from .report import *
from .cli import main
