"""Command-line interface of the Q-index verification toolkit."""
