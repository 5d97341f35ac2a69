import os

DEFAULT_BRUTE_BOUND = 6
DEFAULT_NESTED_BOUND = 9
DEFAULT_WORDS_BOUND = 20


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def brute_bound() -> int:
    """Largest rank scanned exhaustively by the brute-force oracles."""
    return _env_int("ATOMKIT_BRUTE_BOUND", DEFAULT_BRUTE_BOUND)


def nested_bound() -> int:
    """Longest word accepted by the nested descent graph builder."""
    return _env_int("ATOMKIT_NESTED_BOUND", DEFAULT_NESTED_BOUND)


def words_bound() -> int:
    """Longest Coxeter length for which reduced words are listed explicitly."""
    return _env_int("ATOMKIT_WORDS_BOUND", DEFAULT_WORDS_BOUND)
