"""Tests unitaires pour les commandes nlfm."""
