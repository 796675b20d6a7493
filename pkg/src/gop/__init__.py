"""
Pacote de álgebra de gops: tipo Gop, ordem total, enumeração, posto e funções limiar.
"""
