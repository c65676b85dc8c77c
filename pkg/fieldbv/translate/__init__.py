from .ff2nat import *
from .nat2bv import *
