"""zdrigid - command-line front end of the zd-rigidity engine."""

__version__ = "0.1.0"
__all__ = ["__version__"]
