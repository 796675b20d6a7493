"""
Pacote de contagem: cardinalidades exatas das classes de gop.
"""
