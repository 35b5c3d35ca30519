"""
Тесты wk_necklace
"""
