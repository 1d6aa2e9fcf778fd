from ._tempcert import *  # noqa: F401,F403
from ._tempcert import __version__  # noqa: F401
