"""Hierarchical discourse segmentation of expository text."""

__version__ = "0.1.0"
