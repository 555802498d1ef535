"""Integration tests for czsim packages."""
