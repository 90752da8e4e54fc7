"""Tests unitaires pour le module synthesis - NLFM"""
