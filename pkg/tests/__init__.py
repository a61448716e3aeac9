"""
Suites de pruebas del workbench (pytest + hypothesis)

Cada módulo de core/ tiene su archivo test_<módulo>.py y la CLI tiene
test_cli.py. Las leyes algebraicas se comprueban con propiedades de
hypothesis sobre al menos 500 casos aleatorios.

Alcance: los resultados de dimensión infinita (Hahn–Banach, aplicación
abierta, completitud de los espacios de funciones) no son reproducibles a
escala de escritorio. Solo quedan cubiertos por las suites de propiedades
sobre instancias finitas: axiomas de cuerpo y de grupo, leyes del anillo
de intervalos, leyes de seminorma del funcional de Minkowski, identidades
de diferencias y de módulos de continuidad en mallas, y la ley de
composición de dilatación-traslación.
"""
