"""Equivariant classes of jet schemes, contact loci and toric group rings."""

from .algebra import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .series import *  # noqa: F401,F403
from .parsing import *  # noqa: F401,F403
from .groebner import *  # noqa: F401,F403
from .multidegree import *  # noqa: F401,F403
from .jets import *  # noqa: F401,F403
from .toric import *  # noqa: F401,F403
from .gln import *  # noqa: F401,F403
from .reproduce import *  # noqa: F401,F403

__version__ = "0.1.0"
