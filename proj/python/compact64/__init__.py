"""Table-compacted 32-bit storage for binary64 subsets.

Thin re-export of the compiled extension: scheme design and codecs, the
decimal baseline, bit-reproducible streaming kernels, the adaptive vector,
and catalogue verification.
"""

try:
    from ._compact64 import *  # noqa: F401,F403  (installed package layout)
    from ._compact64 import __doc__ as _ext_doc
except ImportError:  # build-tree layout: extension on sys.path, not in-package
    from _compact64 import *  # noqa: F401,F403
    from _compact64 import __doc__ as _ext_doc

__all__ = [
    "Error",
    "PatternError",
    "ConflictError",
    "TooManyDistinctError",
    "TableTooLargeError",
    "TableFormatError",
    "EncodeError",
    "Scheme",
    "NumericVector",
    "AdaptiveVector",
    "na_value",
    "is_na",
    "bits_of",
    "value_of",
    "upper32",
    "lower32",
    "recompose",
    "builtin_names",
    "builtin_scheme",
    "design",
    "search_min_m",
    "load_scheme",
    "save_scheme",
    "dec_encode",
    "dec_decode",
    "copy",
    "sum",
    "scale",
    "add",
    "lincomb",
    "gen_data",
    "bench",
    "verify_tables",
    "verify_ok",
    "verify_report",
    "DEC_NA_WORD",
    "SCALE_FACTOR",
    "LIN_COEF",
]
