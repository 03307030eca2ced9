"""Version information for pseudodyn.

This module provides version information that is accessible at runtime via
`pseudodyn.__version__` and is also used by the build system.
"""

__version__ = "0.3.0"
