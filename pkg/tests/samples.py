"""Small hand-built inputs shared by several test modules."""

from actionoperad.freecat import FiniteCategory


def arrow_category():
    """Objects a, b; b carries an involution u; two arrows a -> b."""
    homs = {("a", "a"): ["1a"], ("b", "b"): ["1b", "u"], ("a", "b"): ["f", "uf"]}
    compose = {("1a", "1a"): "1a", ("1b", "1b"): "1b", ("1b", "u"): "u", ("u", "1b"): "u", ("u", "u"): "1b",
               ("f", "1a"): "f", ("uf", "1a"): "uf", ("1b", "f"): "f", ("1b", "uf"): "uf",
               ("u", "f"): "uf", ("u", "uf"): "f"}
    return FiniteCategory(["a", "b"], homs, compose, {"a": "1a", "b": "1b"}, "arrow")
