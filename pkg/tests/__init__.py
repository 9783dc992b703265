"""
OrbitLens test suite
"""
