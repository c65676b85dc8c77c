from .jolt import *
from .fuzz import *
from .benchgen import *
