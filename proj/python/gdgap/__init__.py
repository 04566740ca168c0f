"""Exact-arithmetic tetrahedron construction and inequality-gap certificates.

All values are exact field elements (rationals or a + b*sqrt(k)); convert
with str() for the canonical literal or float() for a diagnostic preview.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc
except ImportError:  # build-tree layout used by the ctest smoke tests
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
