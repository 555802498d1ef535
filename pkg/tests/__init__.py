"""czsim tests."""
