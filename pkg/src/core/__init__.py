"""
Pacote de dinâmica sobre X_N: endofunções, órbitas, componentes e gop.
"""
