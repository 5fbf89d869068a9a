"""Proposition checks, one module per section; importing registers them."""
from . import section1, section2, section3, section4, section5  # noqa: F401
