"""
Test package for driven_tls.
"""
