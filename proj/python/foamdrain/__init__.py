"""Semi-analytic series solutions of the foam drainage equation."""

try:
    from ._foamdrain import exact_u, solve, spectrum_values, timing
except ImportError:  # flat layout during development builds
    from _foamdrain import exact_u, solve, spectrum_values, timing

__all__ = ["exact_u", "solve", "spectrum_values", "timing"]
