"""Тесты для cisgraphs."""
