from .sort import *
from .term import *
from .rewrite import *
from .printer import *
from .context import *
