"""Integer SNF kernel selection: compiled if available, else interpreted."""

try:
    from adic_smith._snf_cy import snf_int

    BACKEND = "compiled"
except ImportError:  # extension not built; semantics identical either way
    from adic_smith._snf_py import snf_int

    BACKEND = "python"

__all__ = ["snf_int", "BACKEND"]
