"""
    Example games and automata shipped with the package.
"""
import os

EXAMPLES_DIR = os.path.join(os.path.dirname(__file__), "examples")


def example_path(name: str) -> str:
    """Absolute path of a bundled example such as `fig1.spg`."""
    path = os.path.join(EXAMPLES_DIR, name)
    if not os.path.exists(path):
        raise FileNotFoundError(f"No bundled example named '{name}'")
    return path


def list_examples():
    return sorted(os.listdir(EXAMPLES_DIR))
