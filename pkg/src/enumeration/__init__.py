"""
Pacote de censos exaustivos de famílias de funções.
"""
