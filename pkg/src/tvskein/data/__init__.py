"""Bundled slice-word and planar-diagram inputs."""

from importlib import resources

from ..diagram import SliceWord


def _load(name):
    ref = resources.files(__package__).joinpath(name)
    if not ref.is_file():
        return None
    return ref.read_text()


def example45_word():
    """The four-strand reference tangle, or None if not bundled."""
    text = _load("example45.sw")
    if text is None or "PENDING" in text:
        return None
    return SliceWord.parse(text)
