"""Tests unitaires pour nlfm."""
