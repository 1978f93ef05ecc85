"""Spiking-network foraging simulator."""

__version__ = "0.1.0"
