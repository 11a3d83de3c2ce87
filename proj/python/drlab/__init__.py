"""Spherical analysis and multiplier verification toolkit."""

import json as _json

try:
    # installed layout: the extension sits inside the package
    from ._drlab import (  # noqa: F401
        GroupParams,
        __version__,
        density,
        make_group,
        phi,
        preset,
        preset_names,
        radius,
        region_contains,
        verify,
    )
except ImportError:
    # build-tree layout: the extension is on sys.path next to the build dir
    from _drlab import (  # noqa: F401
        GroupParams,
        __version__,
        density,
        make_group,
        phi,
        preset,
        preset_names,
        radius,
        region_contains,
        verify,
    )


def verify_report(suite="geometry", **kwargs):
    """Run a suite and return the report as a dict."""
    return _json.loads(verify(suite, **kwargs))
