# __init__.py - hardysn python package
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

"""Two-sided s-number estimates for weighted Hardy operators.

The heavy lifting lives in the compiled extension ``hardysn._core``;
this package re-exports its full surface.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "0.1.0"
