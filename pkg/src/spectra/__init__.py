"""First-order spectra workbench."""

__version__ = "0.1.0"
