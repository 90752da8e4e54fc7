"""Tests unitaires pour les briques transverses - NLFM"""
