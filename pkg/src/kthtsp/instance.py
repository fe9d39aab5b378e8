"""Weighted undirected instances with exact fixed-point weights.

Weights are stored as integers scaled by ``SCALE`` (10**6), so ``"1.25"``
becomes ``1250000``. All sums stay exact; values that would not fit in a
signed 64-bit word raise :class:`WeightOverflow`.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, TextIO

from .errors import (
    DuplicateEdge,
    InvalidParameter,
    ParseError,
    SelfLoop,
    UnknownEdge,
    VertexOutOfRange,
    WeightOverflow,
)

SCALE = 10**6
FRACTION_DIGITS = 6
INT64_MAX = 2**63 - 1

Edge = tuple[int, int]

_WEIGHT_RE = re.compile(r"^([+-]?)(\d+)(?:\.(\d{1,6}))?$")


def edge(u: int, v: int) -> Edge:
    """Canonical edge id with the smaller endpoint first."""
    if u == v:
        raise SelfLoop(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


def check_int64(value: int, what: str = "weight") -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise WeightOverflow(f"{what} {value} does not fit in 64 bits")
    return value


def parse_weight(text: str, line: int | None = None) -> int:
    m = _WEIGHT_RE.match(text.strip())
    if m is None:
        raise ParseError(f"malformed weight {text!r}", line)
    sign, whole, frac = m.groups()
    frac = (frac or "").ljust(FRACTION_DIGITS, "0")
    value = int(whole) * SCALE + int(frac)
    if sign == "-":
        value = -value
    try:
        return check_int64(value)
    except WeightOverflow as exc:
        raise WeightOverflow(str(exc), line) from None


def format_weight(value: int) -> str:
    """Exact decimal rendering of a scaled weight, trailing zeros trimmed."""
    sign = "-" if value < 0 else ""
    whole, frac = divmod(abs(value), SCALE)
    if frac == 0:
        return f"{sign}{whole}"
    digits = f"{frac:0{FRACTION_DIGITS}d}".rstrip("0")
    return f"{sign}{whole}.{digits}"


def scaled(value: int) -> int:
    """Scale a whole-number weight into fixed point."""
    return check_int64(value * SCALE)


@dataclass(frozen=True)
class WeightedInstance:
    """A simple undirected graph on vertices ``0..n-1`` with scaled weights.

    ``artificial`` marks edges added by :func:`embed_complete`; they are
    real members of ``weights`` but infeasible in the original graph.
    """

    n: int
    weights: Mapping[Edge, int]
    artificial: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParameter(f"need at least 2 vertices, got {self.n}")
        checked: dict[Edge, int] = {}
        for (u, v), w in self.weights.items():
            if u == v:
                raise SelfLoop(f"self-loop on vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            e = edge(u, v)
            if e in checked:
                raise DuplicateEdge(f"duplicate edge {e}")
            checked[e] = check_int64(w)
        biggest = max((abs(w) for w in checked.values()), default=0)
        # any solution has at most n edges
        check_int64(biggest * self.n, "n * max|weight|")
        art = frozenset(self.artificial)
        if not art <= checked.keys():
            raise UnknownEdge("artificial edges must be instance edges")
        object.__setattr__(self, "weights", MappingProxyType(dict(sorted(checked.items()))))
        object.__setattr__(self, "artificial", art)

    @property
    def edges(self) -> list[Edge]:
        return list(self.weights)

    @property
    def is_complete(self) -> bool:
        return len(self.weights) == self.n * (self.n - 1) // 2

    @cached_property
    def matrix(self) -> list[list[int | None]]:
        """Dense symmetric weight lookup; ``None`` marks a missing edge."""
        mat: list[list[int | None]] = [[None] * self.n for _ in range(self.n)]
        for (u, v), w in self.weights.items():
            mat[u][v] = mat[v][u] = w
        return mat

    def weight(self, u: int, v: int) -> int:
        try:
            return self.weights[edge(u, v)]
        except KeyError:
            raise UnknownEdge(f"edge {edge(u, v)} not in instance") from None

    def negated(self) -> WeightedInstance:
        return WeightedInstance(
            self.n, {e: -w for e, w in self.weights.items()}, self.artificial
        )


def solution_weight(inst: WeightedInstance, edges: Iterable[Edge]) -> int:
    total = 0
    for u, v in edges:
        total += inst.weight(u, v)
    return check_int64(total, "solution weight")


def parse_instance(text: str | TextIO) -> WeightedInstance:
    if not isinstance(text, str):
        text = text.read()
    n: int | None = None
    weights: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise ParseError("'n' given more than once", lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"expected 'n <count>', got {line!r}", lineno)
            n = int(parts[1])
            if n < 2:
                raise ParseError(f"vertex count must be at least 2, got {n}", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("'n' must precede edges", lineno)
            if len(parts) != 4:
                raise ParseError(f"expected 'e <u> <v> <w>', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed vertex in {line!r}", lineno) from None
            if u == v:
                raise SelfLoop(f"self-loop on vertex {u}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}", lineno)
            e = edge(u, v)
            if e in weights:
                raise DuplicateEdge(f"duplicate edge {e}", lineno)
            weights[e] = parse_weight(parts[3], lineno)
        else:
            raise ParseError(f"unknown directive {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'n' line")
    try:
        return WeightedInstance(n, weights)
    except WeightOverflow as exc:
        raise WeightOverflow(str(exc)) from None


def format_instance(inst: WeightedInstance) -> str:
    lines = [f"n {inst.n}"]
    lines.extend(f"e {u} {v} {format_weight(w)}" for (u, v), w in inst.weights.items())
    return "\n".join(lines) + "\n"


def embed_complete(
    inst: WeightedInstance, objective: str = "min"
) -> tuple[WeightedInstance, int]:
    """Complete ``inst`` to K_n with heavy artificial edges.

    Every missing edge gets ``M = sum|c(e)| + 1`` (``-M`` when maximizing).
    Any tour through an artificial edge then weighs at least
    ``sum(positive c) + 1`` while every real tour weighs at most
    ``sum(positive c)``, so real tours always rank first.
    """
    big_m = check_int64(sum(abs(w) for w in inst.weights.values()) + SCALE, "big-M")
    check_int64(big_m * inst.n, "big-M * n")
    if inst.is_complete:
        return inst, big_m
    fill = big_m if objective == "min" else -big_m
    weights = dict(inst.weights)
    added = set(inst.artificial)
    for u in range(inst.n):
        for v in range(u + 1, inst.n):
            if (u, v) not in weights:
                weights[(u, v)] = fill
                added.add((u, v))
    return WeightedInstance(inst.n, weights, frozenset(added)), big_m


def random_instance(
    n: int,
    wmin: int,
    wmax: int,
    seed: int,
    density: float = 1.0,
) -> WeightedInstance:
    """Seeded random instance with whole-number weights drawn from [wmin, wmax].

    With ``density < 1`` exactly ``round(density * n(n-1)/2)`` edges are kept.
    """
    if n < 3:
        raise InvalidParameter(f"n must be at least 3, got {n}")
    if wmin > wmax:
        raise InvalidParameter(f"weight range [{wmin}, {wmax}] is empty")
    if not 0 < density <= 1:
        raise InvalidParameter(f"density must be in (0, 1], got {density}")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if density < 1:
        keep = max(1, round(density * len(pairs)))
        pairs = sorted(rng.sample(pairs, keep))
    return WeightedInstance(n, {e: scaled(rng.randint(wmin, wmax)) for e in pairs})
