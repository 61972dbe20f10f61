"""Exact verification toolkit for quotients of E^n by the alternating group."""
__version__ = "0.1.0"
