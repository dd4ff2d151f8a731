"""
relmaj: relative (sub)majorization toolkit.
Decides orderings between weighted vector pairs and computes the transformation
calculus for thermodynamic resources and pure-state entanglement.
"""

__version__ = "1.0.0"
