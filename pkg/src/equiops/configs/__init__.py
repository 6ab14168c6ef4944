"""Packaged Moebius-group configuration files."""
