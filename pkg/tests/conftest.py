from fractions import Fraction

import pytest

from sphere_kissing.surface import SurfaceParams, build


@pytest.fixture(scope="session")
def models():
    cache = {}

    def get(n, r=None, strict=True):
        key = (n, r, strict)
        if key not in cache:
            cache[key] = build(SurfaceParams(n, r), strict=strict)
        return cache[key]

    return get


BENT_RADIUS = Fraction(2, 5)
