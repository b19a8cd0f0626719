# Spectral Census - Source Package