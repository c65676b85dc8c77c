from .oracle import *
