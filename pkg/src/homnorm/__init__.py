"""
homnorm - homotopy normality of finite group maps

A library and CLI for deciding whether a homomorphism N -> G carries a
crossed-module structure, and for the simplicial constructions around it:
bar constructions and nerves, power constructions, the simplicial group of a
crossed module with its Moore homotopy groups, and rigidification of
discrete homotopy actions.
"""

__version__ = "0.1.0"
