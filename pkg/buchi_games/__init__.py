"""Пакет решателей игр Бюхи и разложения на максимальные концевые компоненты."""

__all__ = []
