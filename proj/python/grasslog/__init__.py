from ._grasslog import *  # noqa: F401,F403
