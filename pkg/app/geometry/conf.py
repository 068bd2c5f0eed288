"""
Settings access for the geometry app.
"""
import json
from functools import lru_cache

from django.conf import settings

from geometry.exceptions import InvalidModulusError

DEFAULTS = {
    'MODULI_FILE': None,
    'CENSUS_DIR': 'censuses',
    'SLOW_SUITE': False,
    'SHARDS': 1,
    'PROGRESS': False,
    'SEED': 20240601,
}


def geometry_setting(name):
    """Return a GEOMETRY setting, falling back to the defaults."""
    if not settings.configured:
        return DEFAULTS[name]
    return getattr(settings, 'GEOMETRY', {}).get(name, DEFAULTS[name])


@lru_cache(maxsize=None)
def moduli_overrides():
    """Load the h -> modulus table from the configured JSON file."""
    path = geometry_setting('MODULI_FILE')
    if not path:
        return {}
    with open(path, encoding='utf-8') as fh:
        raw = json.load(fh)

    overrides = {}
    for key, bits in raw.items():
        try:
            overrides[int(key)] = int(str(bits), 2)
        except ValueError as exc:
            raise InvalidModulusError(
                f'bad modulus entry {key!r}: {bits!r}'
            ) from exc
    return overrides
