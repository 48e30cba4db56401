"""Exact structure-constant algebra over Q(params)."""
