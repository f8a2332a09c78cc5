"""
Core computation package for the Q-index verification toolkit.
"""

__version__ = "1.0.0"
