"""
Utility modules for grouptype.
"""
