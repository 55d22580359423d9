"""Test package for nonresultant."""
