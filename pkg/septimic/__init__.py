import sys

# Determine app version from packaging.
if sys.version_info >= (3, 8):
    from importlib import metadata
else:
    import importlib_metadata as metadata

try:
    __version__ = metadata.version('septimic')
except metadata.PackageNotFoundError:
    __version__ = '0.0.0+local'
