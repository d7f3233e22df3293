"""Shared pytest configuration (keeps tests/ importable for helpers)."""
