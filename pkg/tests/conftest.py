"""Shared pytest configuration: a hypothesis profile without deadlines.

Quadrature-backed properties can take tens of milliseconds per example,
which trips hypothesis' default 200ms deadline on slow CI machines; the
suite budgets by example count instead.
"""

from hypothesis import settings

settings.register_profile("nigcdf", deadline=None, max_examples=60)
settings.load_profile("nigcdf")
