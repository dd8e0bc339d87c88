"""Oriented link diagrams given by arcs, components and crossing triples.

A crossing is recorded as ``(over, under_right, under_left)``: the right/left
under-arcs are as seen by an observer walking forward along the over-arc.
The text format is line oriented::

    link trefoil
    component 1 : a b c
    crossing a b c
    crossing b c a
    crossing c a b
"""

import re
import warnings
from collections import Counter
from dataclasses import dataclass, field, replace

from .errors import DiagramError, ParseError

ARC_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


class AdjacencyWarning(UserWarning):
    """The two under-arcs of a crossing are not consecutive along their component."""


@dataclass(frozen=True)
class Crossing:
    over: str
    under_right: str
    under_left: str

    def arcs(self):
        return (self.over, self.under_right, self.under_left)

    def inverted(self):
        return Crossing(self.over, self.under_left, self.under_right)


@dataclass(frozen=True)
class Diagram:
    name: str
    components: tuple
    crossings: tuple
    warnings: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(tuple(c) for c in self.components))
        object.__setattr__(self, "crossings", tuple(self.crossings))

    @property
    def mu(self):
        return len(self.components)

    @property
    def arcs(self):
        return tuple(a for comp in self.components for a in comp)

    @property
    def kappa(self):
        """Map arc name -> 1-based component index."""
        return {a: i for i, comp in enumerate(self.components, start=1) for a in comp}

    def arc_index(self):
        return {a: k for k, a in enumerate(self.arcs)}

    def summary(self):
        return {"name": self.name, "arcs": len(self.arcs), "crossings": len(self.crossings), "mu": self.mu}


def validate(d, lines=None):
    """Check the structural invariants; returns the list of adjacency warnings.

    ``lines`` optionally maps crossing ordinals and component ordinals to
    source line numbers for error reporting.
    """
    lines = lines or {}
    if not d.components:
        raise DiagramError("a diagram needs at least one component")
    seen = {}
    for ci, comp in enumerate(d.components, start=1):
        where = lines.get(("component", ci))
        if not comp:
            raise DiagramError(f"component {ci} has no arcs", line=where)
        for a in comp:
            if not ARC_NAME.match(a):
                raise DiagramError(f"invalid arc name {a!r}", line=where)
            if a in seen:
                raise DiagramError(f"arc {a!r} declared in components {seen[a]} and {ci}", line=where)
            seen[a] = ci
    kappa = seen
    under_count = Counter()
    for k, c in enumerate(d.crossings):
        where = lines.get(("crossing", k))
        for a in c.arcs():
            if a not in kappa:
                raise DiagramError(f"crossing references undeclared arc {a!r}", line=where)
        if kappa[c.under_right] != kappa[c.under_left]:
            raise DiagramError(
                f"under-arcs {c.under_right!r} and {c.under_left!r} lie on different components", line=where)
        under_count[c.under_right] += 1
        under_count[c.under_left] += 1
    for ci, comp in enumerate(d.components, start=1):
        counts = [under_count[a] for a in comp]
        if all(n == 0 for n in counts) and len(comp) == 1:
            continue
        bad = [a for a, n in zip(comp, counts) if n != 2]
        if bad:
            raise DiagramError(
                f"component {ci}: arcs {bad} do not end at exactly two under-crossing slots",
                line=lines.get(("component", ci)))
    notes = []
    for k, c in enumerate(d.crossings):
        comp = d.components[kappa[c.under_right] - 1]
        i, j = comp.index(c.under_right), comp.index(c.under_left)
        n = len(comp)
        if n > 1 and (j - i) % n not in (1, n - 1):
            notes.append(f"crossing {k + 1}: under-arcs {c.under_right!r}, {c.under_left!r} are not adjacent")
        elif n == 1 and c.under_right != c.under_left:
            notes.append(f"crossing {k + 1}: under-arcs differ on a one-arc component")
    return notes


def make_diagram(name, components, crossings, warn=True):
    """Build and validate a diagram from plain sequences."""
    crossings = tuple(c if isinstance(c, Crossing) else Crossing(*c) for c in crossings)
    d = Diagram(name, tuple(tuple(c) for c in components), crossings)
    notes = validate(d)
    if warn:
        for note in notes:
            warnings.warn(note, AdjacencyWarning, stacklevel=2)
    return replace(d, warnings=tuple(notes))


def parse_diagram(text, warn=True):
    name = None
    components = {}
    crossings = []
    lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1
        words = body.split()
        head = words[0]
        if head == "link":
            if name is not None:
                raise ParseError("duplicate 'link' line", lineno, col)
            if len(words) != 2:
                raise ParseError("expected 'link <name>'", lineno, col)
            name = words[1]
        elif head == "component":
            m = re.match(r"\s*component\s+(\d+)\s*:(.*)$", body)
            if not m:
                raise ParseError("expected 'component <index> : <arc> ...'", lineno, col)
            idx = int(m.group(1))
            if idx in components:
                raise ParseError(f"component {idx} declared twice", lineno, col)
            arcs = m.group(2).split()
            for a in arcs:
                if not ARC_NAME.match(a):
                    raise ParseError(f"invalid arc name {a!r}", lineno, body.index(a, m.start(2)) + 1)
            components[idx] = arcs
            lines[("component", idx)] = lineno
        elif head == "crossing":
            if len(words) != 4:
                raise ParseError("expected 'crossing <over> <right-under> <left-under>'", lineno, col)
            for a in words[1:]:
                if not ARC_NAME.match(a):
                    raise ParseError(f"invalid arc name {a!r}", lineno, body.index(a) + 1)
            lines[("crossing", len(crossings))] = lineno
            crossings.append(Crossing(*words[1:]))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, col)
    if name is None:
        raise ParseError("missing 'link <name>' line")
    if sorted(components) != list(range(1, len(components) + 1)):
        raise ParseError(f"component indices must be 1..n, got {sorted(components)}")
    d = Diagram(name, tuple(tuple(components[i]) for i in sorted(components)), tuple(crossings))
    notes = validate(d, lines)
    if warn:
        for note in notes:
            warnings.warn(f"{name}: {note}", AdjacencyWarning, stacklevel=2)
    return replace(d, warnings=tuple(notes))


def render_diagram(d):
    out = [f"link {d.name}"]
    for i, comp in enumerate(d.components, start=1):
        out.append(f"component {i} : " + " ".join(comp))
    for c in d.crossings:
        out.append(f"crossing {c.over} {c.under_right} {c.under_left}")
    return "\n".join(out) + "\n"


def invert_diagram(d):
    """Reverse every component: swaps the under-arcs at each crossing.

    Components keep their declared arc order so column indices are unchanged.
    """
    name = d.name[:-4] if d.name.endswith("_inv") else d.name + "_inv"
    return replace(d, name=name, crossings=tuple(c.inverted() for c in d.crossings))


def rename(d, name):
    return replace(d, name=name)
