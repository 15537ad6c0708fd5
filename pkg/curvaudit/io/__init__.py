# This package hosts file-format helpers (arrangement classes, line files, the YAML catalog, reports).
