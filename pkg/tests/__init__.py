"""
Test suite for weilgroups.
"""
