"""Текстовые форматы и генераторы игровых графов."""
