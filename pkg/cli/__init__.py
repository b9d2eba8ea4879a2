
"""Command-line front end for the identity verifier."""
