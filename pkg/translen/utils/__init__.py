"""
Utility modules for the translen package.
"""
