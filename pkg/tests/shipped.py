"""Raw strings from the bundled data files, read independently of the loader."""

import shlex
from importlib import resources


def data_files():
    root = resources.files("irrlat.data")
    return sorted((p for p in root.iterdir() if p.name.endswith(".isl")), key=lambda p: p.name)


def fields(key):
    """Every ``key=value`` occurrence in the data files, as (file, value)."""
    out = []
    for path in data_files():
        for line in path.read_text().splitlines():
            try:
                toks = shlex.split(line, comments=True)
            except ValueError:
                continue
            for t in toks[1:]:
                k, eq, v = t.partition("=")
                if eq and k == key:
                    out.append((path.name, v))
    return out
