"""
Auxiliary data distributed with the package.
"""
