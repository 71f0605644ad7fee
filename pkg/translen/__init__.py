"""
Translen - certified upper and lower bounds on the asymptotic translation
length of Penner-construction mapping classes acting on the curve graph.
"""

__version__ = "0.1.0"
