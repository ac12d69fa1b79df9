""" JSON-on-disk cache of evaluated semitransvectants.
"""

import json
import os
from pathlib import Path


def _stable_dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(',', ':'))


def default_cache_dir():
    """ $SEPTIMIC_CACHE when set, otherwise ./.cache.
    """
    return os.environ.get('SEPTIMIC_CACHE') or '.cache'


class SimpleCache:
    """ One JSON file per key under a root directory.

    Files are written to a temporary name and renamed, so a reader never
    sees a partial entry.
    """
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, key):
        return self.root / key[:2] / '{}.json'.format(key)

    def read(self, key):
        path = self._path(key)
        if not path.exists():
            return None
        return json.loads(path.read_text(encoding='utf-8'))

    def write(self, key, data):
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix('.tmp')
        tmp.write_text(_stable_dumps(data), encoding='utf-8')
        os.replace(tmp, path)


def open_cache(root):
    """ A SimpleCache at root, or None when root is "off".
    """
    if not root or root == 'off':
        return None
    return SimpleCache(root)
