import os

DEFAULT_TABLE_CAP = 4096


def table_cap() -> int:
    """Largest carrier size for which operation tables are materialized."""
    raw = os.environ.get("MGRKIT_TABLE_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_TABLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"MGRKIT_TABLE_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("MGRKIT_TABLE_CAP must be positive")
    return cap


def check_size(n: int, what: str) -> None:
    from .errors import InvalidParameter

    cap = table_cap()
    if n > cap:
        raise InvalidParameter(
            f"{what} has {n} elements, above the table cap {cap} (set MGRKIT_TABLE_CAP to raise it)"
        )
