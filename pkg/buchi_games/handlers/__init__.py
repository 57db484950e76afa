"""Шаги команд CLI в виде цепочки обработчиков."""
