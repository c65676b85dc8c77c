# importing everything under the hood of the
# fieldbv.plot package
from ._plot import *
