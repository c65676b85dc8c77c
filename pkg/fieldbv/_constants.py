__version__ = '0.1b'

# names given to the four pipeline stages, in execution order
STAGES = ('to_nat', 'range_analysis', 'to_bv', 'bitblast')

# prefix of placeholder variables introduced by range analysis;
# the parser rejects user identifiers starting with it
PLACEHOLDER_PREFIX = '?w'

# suffix of the canonical bit-vector variables created for atoms
ATOM_SUFFIX = '#bv'
