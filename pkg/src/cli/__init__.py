"""
Interface de linha de comando do Orbit Pattern Lab.
"""
