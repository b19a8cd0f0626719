# Spectral Census - Library Package