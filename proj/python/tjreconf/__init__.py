"""Token Jumping reconfiguration toolkit."""

try:
    from ._tjcore import *  # noqa: F401,F403
except ImportError:  # build-tree layout: extension next to the package dir
    from _tjcore import *  # noqa: F401,F403
