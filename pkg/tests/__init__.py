"""
Test suite for curvaudit.
"""
