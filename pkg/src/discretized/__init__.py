"""
Pacote de mapas discretizados: grade j/N, ciclos e bacias.
"""
