"""Tests for chf-cli."""
