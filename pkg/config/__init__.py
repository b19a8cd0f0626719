# Spectral Census - Config Package