"""
Основной функциональный пакет приложения.

Содержит исключения, модели данных и вспомогательные функции,
используемые во всем приложении.
"""
