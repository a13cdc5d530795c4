# Archivo vacío para hacer que tests sea un paquete Python