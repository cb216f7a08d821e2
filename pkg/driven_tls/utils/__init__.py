"""
Utility modules for the driven two-level-system package.
"""
