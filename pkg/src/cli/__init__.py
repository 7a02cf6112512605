"""src.cli package

Arrangement files, the verification battery, SVG pictures, interpolation and the
command-line entry point (python -m src.cli.main).
"""

__all__ = [
    "spec_file",
    "verify_battery",
    "render_svg",
    "interpolate",
    "main",
]
