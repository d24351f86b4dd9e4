"""Hand-transcribed reference data for the bundled nine-element algebra.

Everything here was copied from the printed tables, not computed, so the
tests that compare against it are independent of the library code.
"""

ELEMENTS = ("0", "a", "b", "c", "d", "e", "f", "g", "1")

# one orientation per unordered pair, zero row omitted
SUM_ENTRIES = [
    ("a", "b", "e"),
    ("a", "c", "f"),
    ("a", "g", "1"),
    ("b", "b", "d"),
    ("b", "c", "g"),
    ("b", "d", "f"),
    ("b", "f", "1"),
    ("c", "e", "1"),
    ("d", "d", "1"),
]

COMPLEMENTS = {
    "0": "1", "a": "g", "b": "f", "c": "e", "d": "d",
    "e": "c", "f": "b", "g": "a", "1": "0",
}

# the full 81-cell implication table, row label -> column label -> cell
IMPLICATION = {
    "0": {y: {"1"} for y in ELEMENTS},
    "a": {
        "0": {"g"}, "a": {"g", "1"}, "b": {"g"}, "c": {"g"}, "d": {"g"},
        "e": {"g", "1"}, "f": {"g", "1"}, "g": {"g"}, "1": {"g", "1"},
    },
    "b": {
        "0": {"f"}, "a": {"f"}, "b": {"f", "1"}, "c": {"f"}, "d": {"f", "1"},
        "e": {"f", "1"}, "f": {"f", "1"}, "g": {"f", "1"}, "1": {"f", "1"},
    },
    "c": {
        "0": {"e"}, "a": {"e"}, "b": {"e"}, "c": {"e", "1"}, "d": {"e"},
        "e": {"e"}, "f": {"e", "1"}, "g": {"e", "1"}, "1": {"e", "1"},
    },
    "d": {
        "0": {"d"}, "a": {"d"}, "b": {"d", "f"}, "c": {"d"},
        "d": {"d", "f", "1"}, "e": {"d", "f"}, "f": {"d", "f", "1"},
        "g": {"d", "f"}, "1": {"d", "f", "1"},
    },
    "e": {
        "0": {"c"}, "a": {"c", "f"}, "b": {"c", "g"}, "c": {"c"},
        "d": {"c", "g"}, "e": {"c", "f", "g", "1"}, "f": {"c", "f", "g"},
        "g": {"c", "g"}, "1": {"c", "f", "g", "1"},
    },
    "f": {
        "0": {"b"}, "a": {"b", "e"}, "b": {"b", "d"}, "c": {"b", "g"},
        "d": {"b", "d", "f"}, "e": {"b", "d", "e"},
        "f": {"b", "d", "e", "f", "g", "1"}, "g": {"b", "d", "g"},
        "1": {"b", "d", "e", "f", "g", "1"},
    },
    "g": {
        "0": {"a"}, "a": {"a"}, "b": {"a", "e"}, "c": {"a", "f"},
        "d": {"a", "e"}, "e": {"a", "e"}, "f": {"a", "e", "f"},
        "g": {"a", "e", "f", "1"}, "1": {"a", "e", "f", "1"},
    },
    "1": {
        "0": {"0"}, "a": {"0", "a"}, "b": {"0", "b"}, "c": {"0", "c"},
        "d": {"0", "b", "d"}, "e": {"0", "a", "b", "e"},
        "f": {"0", "a", "b", "c", "d", "f"}, "g": {"0", "b", "c", "g"},
        "1": set(ELEMENTS),
    },
}

# covering pairs read off the printed diagram
HASSE = {
    ("0", "a"), ("0", "b"), ("0", "c"),
    ("a", "e"), ("a", "f"),
    ("b", "d"), ("b", "e"), ("b", "g"),
    ("c", "f"), ("c", "g"),
    ("d", "f"),
    ("e", "1"), ("f", "1"), ("g", "1"),
}
