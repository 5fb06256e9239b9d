"""Packaged scenario presets (TOML)."""
