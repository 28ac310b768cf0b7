"""Utility modules for ThomSeries."""
