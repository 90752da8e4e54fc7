"""Tests unitaires pour la logique de calcul - NLFM"""
