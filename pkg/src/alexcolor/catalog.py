"""Built-in diagrams shipped as ``catalog/*.link`` data files.

Each file may carry ``# expect:`` comment lines recording invariants the
transcription must reproduce, e.g. ``# expect: j0 ring=GF3 phi=2 value=2``.
"""

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import parse_diagram
from .errors import AlexColorError

KEYS = ("unknot0", "unknot1", "trefoil", "knot6_1", "knot9_46", "torus2_8", "whitehead", "turaev_T")


@dataclass(frozen=True)
class Expectation:
    kind: str
    ring: str
    phi: str
    value: int


class UnknownCatalogKey(AlexColorError, KeyError):
    pass


def catalog_text(key):
    if key not in KEYS:
        raise UnknownCatalogKey(f"unknown catalog entry {key!r}; choose from {', '.join(KEYS)}")
    return resources.files(__package__).joinpath("catalog", f"{key}.link").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def catalog_get(key):
    return parse_diagram(catalog_text(key))


def expectations(key):
    out = []
    for line in catalog_text(key).splitlines():
        line = line.strip()
        if not line.startswith("# expect:"):
            continue
        kind, *pairs = line[len("# expect:"):].split()
        fields = dict(p.split("=", 1) for p in pairs)
        out.append(Expectation(kind, fields["ring"], fields["phi"], int(fields["value"])))
    return out
