"""Baseband waveform toolbox: modulators, channels, metrics, and a
scenario-driven comparison harness."""

__version__ = "0.1.0"
