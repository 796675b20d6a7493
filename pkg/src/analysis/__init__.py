"""
Pacote de tabelas de saída do Orbit Pattern Lab.
"""
