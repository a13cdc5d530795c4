"""
Modelos del dominio: torre de cuerpos, códigos de Gabidulin y matrices (q,s)-Cauchy.
"""
