"""Utility helper functions."""
from typing import Any, Iterable, List, Tuple


def safe_get(data: dict, *keys: str, default: Any = None) -> Any:
    """Safely get nested dictionary values."""
    for key in keys:
        try:
            data = data[key]
        except (KeyError, TypeError, IndexError):
            return default
    return data


def free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    """Cancel adjacent equal letters (s s = e) until none remain."""
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def parse_index_list(text: str) -> Tuple[int, ...]:
    """Parse "1 2 3", "1,2,3" or "[1, 2, 3]" into a tuple of ints."""
    cleaned = text.replace(",", " ").replace("[", " ").replace("]", " ")
    try:
        return tuple(int(token) for token in cleaned.split())
    except ValueError as e:
        raise ValueError(f"not a list of integers: {text!r}") from e
