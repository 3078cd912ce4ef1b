"""Allow ``python -m nigcdf`` as an alias for the console script."""

from .cli import run

run()
