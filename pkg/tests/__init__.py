"""
Test suite for poset-metrics
"""
