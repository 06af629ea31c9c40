"""Characteristic numbers of smooth cubic surfaces via complete cubics."""

__version__ = "0.1.0"
