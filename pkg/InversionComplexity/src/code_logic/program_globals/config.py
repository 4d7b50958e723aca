"""Configuration constants for the Inversion Complexity toolkit.

This module exposes user-tweakable constants that change the behaviour of
the toolkit. Each entry below lists the variable name, its default value, the
expected type, and a short description including valid/optional values and
practical notes on when to change it.

Groups:
    - Resource caps: arity and pattern limits for the exhaustive algorithms.
    - Exact search: arity and depth guards for the inversion complexity search.
    - Defaults: the basis used when no basis file is provided.

Key variables (summary):

    ARITY_CAP (int)
        - Default: 12
        - Type: int
        - Purpose: Largest arity accepted by the decrease computations (and by
            exhaustive circuit evaluation). The covering-edge dynamic program
            costs O(n * 2^n) per system member.

    CHAIN_ENUMERATION_CAP (int)
        - Default: 4
        - Type: int
        - Purpose: Largest arity for which every increasing chain may be
            listed literally. The number of chains explodes quickly.

    ORACLE_CHAIN_CHECK_ARITY (int)
        - Default: 3
        - Type: int
        - Purpose: Up to this arity the comparability-DAG oracle is also
            checked against the literal enumeration of all chains.

    PATTERN_LIMIT (int)
        - Default: 16
        - Type: int
        - Purpose: Maximum number of distinct signal patterns for which the
            monotone feed functions of a pattern pool are enumerated.

    EXACT_ARITY_LIMIT / EXACT_T_MAX_LIMIT (ints)
        - Defaults: 4, 4
        - Type: int
        - Purpose: Hard guards of the exact search (arity of the system and
            number of weighted gates tried).

    DEFAULT_BASIS_TEXT (str)
        - Default: a single NOT generator
        - Type: str (basis file content)
        - Purpose: Basis used when the command line does not name one, so bare
            commands reproduce the classical NOT-only setting.
"""

# ARITY_CAP
# Default: 12
# Type: int
# Purpose: Maximum arity for decrease, profile and exhaustive evaluation.
# Can be overridden with the ARITY_CAP environment variable.
ARITY_CAP: int = 12

# CHAIN_ENUMERATION_CAP
# Default: 4
# Type: int
# Purpose: Maximum arity for the literal enumeration of increasing chains.
CHAIN_ENUMERATION_CAP: int = 4

# ORACLE_CHAIN_CHECK_ARITY
# Default: 3
# Type: int
# Purpose: The oracle cross-checks against literal enumeration up to here.
ORACLE_CHAIN_CHECK_ARITY: int = 3

# PATTERN_LIMIT
# Default: 16
# Type: int
# Purpose: Maximum number of distinct patterns in a pattern pool before the
# monotone signal enumeration refuses to run. Can be overridden with the
# PATTERN_LIMIT environment variable.
PATTERN_LIMIT: int = 16

# EXACT_ARITY_LIMIT
# Default: 4
# Type: int
# Purpose: Largest system arity accepted by the exact search.
EXACT_ARITY_LIMIT: int = 4

# EXACT_T_MAX_LIMIT
# Default: 4
# Type: int
# Purpose: Largest number of weighted gates the exact search will try.
EXACT_T_MAX_LIMIT: int = 4

# DEFAULT_BASIS_TEXT
# Default: one generator, the NOT function of one variable (bits 10)
# Type: str
# Purpose: Basis file content used when no --basis path is supplied.
DEFAULT_BASIS_TEXT: str = "not 1 0x1\n"
