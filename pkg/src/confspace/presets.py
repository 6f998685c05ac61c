"""Bundled compactly-supported cohomology tables for common open manifolds.

Each preset is a JSON document in the algebra schema of ce.load_algebra;
scripts/gen_presets.py regenerates them.  Closed surfaces use ordinary
cohomology with the intersection-form product.
"""

from __future__ import annotations

import json
from importlib import resources

from .ce import load_algebra


class PresetError(Exception):
    pass


def list_presets():
    """Sorted names of all bundled presets."""
    root = resources.files(__package__) / "presets"
    names = []
    for entry in root.iterdir():
        if entry.name.endswith(".json"):
            names.append(entry.name[:-len(".json")])
    return sorted(names)


def preset_document(name):
    """The raw JSON document of a preset."""
    path = resources.files(__package__) / "presets" / (name + ".json")
    try:
        text = path.read_text()
    except (FileNotFoundError, OSError):
        raise PresetError(
            "unknown preset %r; available: %s" % (name, ", ".join(list_presets())))
    return json.loads(text)

def load_preset(name):
    """Validated CAlgebra for a bundled preset."""
    return load_algebra(preset_document(name))
