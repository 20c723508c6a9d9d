"""Exact list-colouring toolkit.

Thin wrapper over the `_listcol` extension: graphs, list-colouring solvers,
choosability search, and the hardness-gadget builders with their verifiable
certificates.
"""

try:
    # Installed layout: the extension lives inside the package.
    from ._listcol import *  # noqa: F401,F403
    from ._listcol import __doc__ as _core_doc  # noqa: F401
except ImportError:
    # Build-tree layout: the extension sits on PYTHONPATH next to us.
    from _listcol import *  # noqa: F401,F403
