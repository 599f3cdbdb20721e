"""Data memory: named cells holding unbounded integers.

The table API (``dic_empty``, ``dic_get``, ``dic_replace``) updates in place
and returns the table, so callers may use it either functionally or not.
"""


class NotFound(KeyError):
    pass


class Memory(dict):
    """Mapping from memory names to Python ints."""

    def __repr__(self):
        return f"Memory({dict.__repr__(self)})"


def dic_empty() -> Memory:
    return Memory()


def dic_get(mem: Memory, key: str) -> int:
    try:
        return mem[key]
    except KeyError:
        raise NotFound(key) from None


def dic_replace(mem: Memory, key: str, value: int) -> Memory:
    mem[key] = value
    return mem
