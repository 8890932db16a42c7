"""Tests for the spectra workbench."""
