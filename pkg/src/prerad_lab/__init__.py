"""prerad-lab - exact preradical computations over finite rings."""

__version__ = "1.0.0"
