"""Fiberwise Morse presentations of a surface mapping torus.

A presentation is purely combinatorial: the critical loci of each index, the
Morse boundary maps of the basepoint fiber, the word of graphic events met in
one turn around the circle, and the closure bijections that glue the fiber at
parameter 1 back to the fiber at parameter 0.

Source format (``.mt``, TOML syntax)::

    [surface]
    index0 = ["m"]
    index1 = ["p2", "p1"]          # ascending critical value at parameter 0
    index2 = ["M"]

    [boundary]                     # omitted entries are 0
    # M = { p1 = 1 }               # d2 of an index-2 locus
    # p1 = { m = 0 }               # d1 of an index-1 locus

    [monodromy]
    events = [
      { slide = { mover = "p1", over = "p2", sign = 1 } },
      { exchange = ["p1", "p2"] },
    ]
    closure1 = { p1 = "p1", p2 = "p2" }   # omitted closures are the identity

A ``Slide(p over q, s)`` acts on the index-1 chain group by ``p -> p + s q``.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, NamedTuple, Sequence, Union

from .errors import (
    BadClosure,
    BadHomologyShape,
    BettiNotOne,
    IdentityViolated,
    IllegalExchange,
    IllegalSlide,
    NotAChainComplex,
    NotAChainMap,
    OrientationReversing,
    PresentationError,
    PresentationSyntaxError,
    UnknownLocus,
)
from .linalg import (
    MatrixQ,
    det_one_minus_tA,
    image_basis,
    induced_quotient_map,
    kernel_basis,
    quotient_representatives,
    rank,
)
from .ring import LaurentPolynomial, RationalFunction, T, rf_log_derivative_t
from .zeta import GradedAction, zeta_log_derivative

try:  # Python >= 3.11
    import tomllib
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

__all__ = [
    "Exchange",
    "Slide",
    "Event",
    "MorsePresentation",
    "TransferMatrices",
    "HomologyAction",
    "GenusShift",
    "parse",
    "parse_file",
    "build_presentation",
    "transfer_matrices",
    "homology_action",
    "betti1",
    "alexander",
    "lescop_coefficient",
    "propagator_boundary_h",
    "genus_shift_identity",
]

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$")


@dataclass(frozen=True)
class Exchange:
    """Level exchange of two index-1 loci with adjacent critical values."""

    a: str
    b: str


@dataclass(frozen=True)
class Slide:
    """1/1-intersection: ``mover`` slides over the lower locus ``over``."""

    mover: str
    over: str
    sign: int


Event = Union[Exchange, Slide]


@dataclass(frozen=True)
class MorsePresentation:
    """A validated presentation.  Build one with :func:`parse` or
    :func:`build_presentation`; the constructor does not validate."""

    loci0: tuple[str, ...]
    loci1: tuple[str, ...]
    loci2: tuple[str, ...]
    d1: MatrixQ  # C1 -> C0, shape (n0, n1)
    d2: MatrixQ  # C2 -> C1, shape (n1, n2)
    events: tuple[Event, ...]
    closure0: tuple[str, ...]  # closure0[i] is the image of loci0[i]
    closure1: tuple[str, ...]
    closure2: tuple[str, ...]

    @property
    def initial_order1(self) -> tuple[str, ...]:
        return self.loci1

    def loci(self, index: int) -> tuple[str, ...]:
        return (self.loci0, self.loci1, self.loci2)[index]

    def closure(self, index: int) -> dict[str, str]:
        images = (self.closure0, self.closure1, self.closure2)[index]
        return dict(zip(self.loci(index), images))

    @property
    def euler_characteristic(self) -> int:
        return len(self.loci0) - len(self.loci1) + len(self.loci2)

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    # -- serialization ------------------------------------------------------

    def normal_form(self) -> dict[str, Any]:
        """JSON-ready canonical description (exact integers only)."""

        def boundary(d: MatrixQ, src: Sequence[str], dst: Sequence[str]) -> dict[str, dict[str, int]]:
            out = {}
            for j, name in enumerate(src):
                entries = {dst[i]: _as_int(d[i, j]) for i in range(len(dst)) if d[i, j]}
                if entries:
                    out[name] = entries
            return out

        return {
            "index0": list(self.loci0),
            "index1": list(self.loci1),
            "index2": list(self.loci2),
            "d2": boundary(self.d2, self.loci2, self.loci1),
            "d1": boundary(self.d1, self.loci1, self.loci0),
            "events": [_event_json(e) for e in self.events],
            "closure0": self.closure(0),
            "closure1": self.closure(1),
            "closure2": self.closure(2),
        }

    def digest(self) -> str:
        blob = json.dumps(self.normal_form(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()

    def to_text(self) -> str:
        """Render as ``.mt`` source; ``parse(p.to_text()) == p``."""
        nf = self.normal_form()

        def names(xs):
            return "[" + ", ".join(json.dumps(x) for x in xs) + "]"

        def table(m: Mapping[str, Any]) -> str:
            if not m:
                return "{}"
            return "{ " + ", ".join(f"{k} = {json.dumps(v)}" for k, v in m.items()) + " }"

        lines = [
            "[surface]",
            f"index0 = {names(self.loci0)}",
            f"index1 = {names(self.loci1)}",
            f"index2 = {names(self.loci2)}",
            "",
            "[boundary]",
        ]
        for name, entries in [*nf["d2"].items(), *nf["d1"].items()]:
            lines.append(f"{name} = {table(entries)}")
        lines += ["", "[monodromy]"]
        if self.events:
            lines.append("events = [")
            for e in self.events:
                if isinstance(e, Exchange):
                    lines.append(f"  {{ exchange = {names([e.a, e.b])} }},")
                else:
                    lines.append(
                        f'  {{ slide = {{ mover = "{e.mover}", over = "{e.over}", sign = {e.sign} }} }},'
                    )
            lines.append("]")
        else:
            lines.append("events = []")
        for i in range(3):
            lines.append(f"closure{i} = {table(nf[f'closure{i}'])}")
        return "\n".join(lines) + "\n"


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"non-integer boundary coefficient {x}")
    return x.numerator


def _event_json(e: Event) -> dict[str, Any]:
    if isinstance(e, Exchange):
        return {"exchange": [e.a, e.b]}
    return {"slide": {"mover": e.mover, "over": e.over, "sign": e.sign}}


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


class _Locator:
    """Best-effort source positions for semantic diagnostics."""

    def __init__(self, text: str | None):
        self.lines = [] if text is None else [ln.split("#", 1)[0] for ln in text.splitlines()]

    def _section_range(self, section: str) -> tuple[int, int]:
        start = None
        for i, ln in enumerate(self.lines):
            s = ln.strip()
            if s == f"[{section}]":
                start = i
            elif start is not None and s.startswith("[") and s.endswith("]") and "=" not in s:
                return start, i
        return (0, len(self.lines)) if start is None else (start, len(self.lines))

    def find(self, token: str, section: str | None = None, nth: int = 0) -> tuple[int | None, int | None]:
        if not self.lines:
            return None, None
        lo, hi = self._section_range(section) if section else (0, len(self.lines))
        pat = re.compile(r"(?<![A-Za-z0-9_\-])" + re.escape(token) + r"(?![A-Za-z0-9_\-])")
        seen = 0
        for i in range(lo, hi):
            m = pat.search(self.lines[i])
            if m:
                if seen == nth:
                    return i + 1, m.start() + 1
                seen += 1
        return None, None

    def event(self, n: int) -> tuple[int | None, int | None]:
        if not self.lines:
            return None, None
        lo, hi = self._section_range("monodromy")
        pat = re.compile(r"\b(exchange|slide)\b")
        seen = 0
        for i in range(lo, hi):
            for m in pat.finditer(self.lines[i]):
                if seen == n:
                    return i + 1, m.start() + 1
                seen += 1
        return None, None


def _err(cls, msg: str, where: tuple[int | None, int | None] = (None, None)):
    return cls(msg, *where)


_TOML_POS = re.compile(r"\(at line (\d+), column (\d+)\)")


def parse(text: str) -> MorsePresentation:
    """Parse and fully validate ``.mt`` source."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        msg = str(exc)
        m = _TOML_POS.search(msg)
        if m:
            line, col = int(m.group(1)), int(m.group(2))
        elif "end of document" in msg:
            lines = text.splitlines() or [""]
            line, col = len(lines), len(lines[-1]) + 1
        else:
            line = col = None
        msg = _TOML_POS.sub("", msg).replace("(at end of document)", "at end of input").strip()
        raise PresentationSyntaxError(msg, line, col) from None
    return build_presentation(data, _source=text)


def parse_file(path) -> MorsePresentation:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _check_keys(obj: Mapping, allowed: Sequence[str], where: str, loc: _Locator) -> None:
    for key in obj:
        if key not in allowed:
            raise _err(PresentationSyntaxError, f"unknown key {key!r} in {where}", loc.find(key))


def _name_list(value, key: str, loc: _Locator) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise _err(PresentationSyntaxError, f"{key} must be a list of names", loc.find(key, "surface"))
    for x in value:
        if not _NAME.match(x):
            raise _err(PresentationSyntaxError, f"invalid locus name {x!r}", loc.find(key, "surface"))
    return tuple(value)


def build_presentation(data: Mapping[str, Any], *, _source: str | None = None) -> MorsePresentation:
    """Build and validate a presentation from its decoded mapping form.

    Accepts the structure produced by parsing ``.mt`` source (sections
    ``surface``, ``boundary``, ``monodromy``).
    """
    loc = _Locator(_source)
    if not isinstance(data, Mapping):
        raise PresentationSyntaxError("presentation must be a table")
    _check_keys(data, ("surface", "boundary", "monodromy"), "top level", loc)
    surface = data.get("surface")
    if not isinstance(surface, Mapping):
        raise PresentationSyntaxError("missing [surface] section")
    _check_keys(surface, ("index0", "index1", "index2"), "[surface]", loc)
    for key in ("index0", "index1", "index2"):
        if key not in surface:
            raise PresentationSyntaxError(f"[surface] is missing {key}")
    loci = [_name_list(surface[f"index{i}"], f"index{i}", loc) for i in range(3)]
    seen: dict[str, int] = {}
    for i, names in enumerate(loci):
        for n in names:
            if n in seen:
                raise _err(PresentationSyntaxError, f"duplicate locus name {n!r}", loc.find(n, "surface", 1))
            seen[n] = i
    index_of = seen
    pos = [{n: k for k, n in enumerate(names)} for names in loci]

    # boundary maps
    n0, n1, n2 = (len(x) for x in loci)
    d1 = [[0] * n1 for _ in range(n0)]
    d2 = [[0] * n2 for _ in range(n1)]
    boundary = data.get("boundary", {})
    if not isinstance(boundary, Mapping):
        raise PresentationSyntaxError("[boundary] must be a table")
    for src, entries in boundary.items():
        if src not in index_of:
            raise _err(UnknownLocus, f"unknown locus {src!r} in [boundary]", loc.find(src, "boundary"))
        idx = index_of[src]
        if idx == 0:
            raise _err(
                PresentationSyntaxError,
                f"index-0 locus {src!r} has no boundary",
                loc.find(src, "boundary"),
            )
        if not isinstance(entries, Mapping):
            raise _err(PresentationSyntaxError, f"boundary of {src!r} must be a table", loc.find(src, "boundary"))
        for dst, c in entries.items():
            if index_of.get(dst) != idx - 1:
                raise _err(
                    UnknownLocus,
                    f"boundary of index-{idx} locus {src!r} names {dst!r}, not an index-{idx - 1} locus",
                    loc.find(dst, "boundary"),
                )
            if not isinstance(c, int) or isinstance(c, bool):
                raise _err(
                    PresentationSyntaxError,
                    f"boundary coefficient {src}->{dst} must be an integer",
                    loc.find(src, "boundary"),
                )
            if idx == 2:
                d2[pos[1][dst]][pos[2][src]] = c
            else:
                d1[pos[0][dst]][pos[1][src]] = c
    D1 = MatrixQ(d1, rows=n0, cols=n1)
    D2 = MatrixQ(d2, rows=n1, cols=n2)

    # monodromy
    mono = data.get("monodromy", {})
    if not isinstance(mono, Mapping):
        raise PresentationSyntaxError("[monodromy] must be a table")
    _check_keys(mono, ("events", "closure0", "closure1", "closure2"), "[monodromy]", loc)
    raw_events = mono.get("events", [])
    if not isinstance(raw_events, list):
        raise _err(PresentationSyntaxError, "events must be a list", loc.find("events", "monodromy"))
    events: list[Event] = []
    for k, ev in enumerate(raw_events):
        where = loc.event(k)
        if not isinstance(ev, Mapping) or len(ev) != 1:
            raise _err(PresentationSyntaxError, f"event {k + 1} must have exactly one of exchange/slide", where)
        (kind, body), = ev.items()
        if kind == "exchange":
            if not (isinstance(body, list) and len(body) == 2 and all(isinstance(x, str) for x in body)):
                raise _err(PresentationSyntaxError, f"event {k + 1}: exchange takes two names", where)
            names = body
            events.append(Exchange(body[0], body[1]))
        elif kind == "slide":
            if not isinstance(body, Mapping):
                raise _err(PresentationSyntaxError, f"event {k + 1}: slide must be a table", where)
            _check_keys(body, ("mover", "over", "sign"), f"slide event {k + 1}", loc)
            missing = [x for x in ("mover", "over", "sign") if x not in body]
            if missing:
                raise _err(PresentationSyntaxError, f"event {k + 1}: slide is missing {', '.join(missing)}", where)
            sign = body["sign"]
            if isinstance(sign, bool) or sign not in (1, -1):
                raise _err(PresentationSyntaxError, f"event {k + 1}: slide sign must be +1 or -1", where)
            if not isinstance(body["mover"], str) or not isinstance(body["over"], str):
                raise _err(PresentationSyntaxError, f"event {k + 1}: mover and over must be names", where)
            names = [body["mover"], body["over"]]
            events.append(Slide(body["mover"], body["over"], int(sign)))
        else:
            raise _err(PresentationSyntaxError, f"event {k + 1}: unknown event kind {kind!r}", where)
        for n in names:
            if index_of.get(n) != 1:
                raise _err(UnknownLocus, f"event {k + 1} names {n!r}, not an index-1 locus", where)
        if names[0] == names[1]:
            raise _err(PresentationSyntaxError, f"event {k + 1} names the same locus twice", where)

    closures = []
    for i in range(3):
        key = f"closure{i}"
        raw = mono.get(key)
        if raw is None:
            closures.append(loci[i])
            continue
        where = loc.find(key, "monodromy")
        if not isinstance(raw, Mapping) or not all(isinstance(v, str) for v in raw.values()):
            raise _err(PresentationSyntaxError, f"{key} must map names to names", where)
        if set(raw) != set(loci[i]) or sorted(raw.values()) != sorted(loci[i]):
            raise _err(BadClosure, f"{key} is not a bijection of the index-{i} loci", where)
        closures.append(tuple(raw[n] for n in loci[i]))

    pres = MorsePresentation(
        loci0=loci[0],
        loci1=loci[1],
        loci2=loci[2],
        d1=D1,
        d2=D2,
        events=tuple(events),
        closure0=closures[0],
        closure1=closures[1],
        closure2=closures[2],
    )
    validate(pres, _locator=loc)
    return pres


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _fmt_vec(v: Sequence[Fraction], names: Sequence[str]) -> str:
    parts = [f"{c}*{n}" for c, n in zip(v, names) if c]
    return " + ".join(parts) if parts else "0"


def validate(p: MorsePresentation, *, _locator: _Locator | None = None) -> None:
    """Check every presentation invariant; raise the matching error."""
    loc = _locator or _Locator(None)
    n0, n1, n2 = len(p.loci0), len(p.loci1), len(p.loci2)

    dd = p.d1 @ p.d2
    for j, w in enumerate(p.loci2):
        col = dd.column(j)
        if any(col):
            raise _err(
                NotAChainComplex,
                f"d1(d2({w})) = {_fmt_vec(col, p.loci0)} is not zero",
                loc.find(w, "boundary"),
            )

    h0 = n0 - rank(p.d1)
    h2 = n2 - rank(p.d2)
    if h0 != 1 or h2 != 1:
        raise BadHomologyShape(
            f"a closed connected surface needs dim H0 = dim H2 = 1, got dim H0 = {h0}, dim H2 = {h2}"
        )
    chi = n0 - n1 + n2
    if chi > 2 or chi % 2:
        raise BadHomologyShape(f"Euler characteristic {chi} is not 2 - 2g for a genus g >= 0")

    order = list(p.loci1)
    for k, e in enumerate(p.events):
        if isinstance(e, Exchange):
            i, j = order.index(e.a), order.index(e.b)
            if abs(i - j) != 1:
                raise _err(
                    IllegalExchange,
                    f"event {k + 1}: {e.a} and {e.b} are not adjacent in the value order {order}",
                    loc.event(k),
                )
            order[i], order[j] = order[j], order[i]
        else:
            if order.index(e.mover) <= order.index(e.over):
                raise _err(
                    IllegalSlide,
                    f"event {k + 1}: {e.mover} must lie above {e.over} in the value order {order}",
                    loc.event(k),
                )

    for i in range(3):
        images = (p.closure0, p.closure1, p.closure2)[i]
        if sorted(images) != sorted(p.loci(i)):
            raise BadClosure(f"closure{i} is not a bijection of the index-{i} loci")

    th = transfer_matrices(p)
    for lhs, rhs, names, what in (
        (p.d1 @ th.theta1, th.theta0 @ p.d1, p.loci1, "d1 . theta1 != theta0 . d1"),
        (th.theta1 @ p.d2, p.d2 @ th.theta2, p.loci2, "theta1 . d2 != d2 . theta2"),
    ):
        bad = [n for j, n in enumerate(names) if lhs.column(j) != rhs.column(j)]
        if bad:
            raise NotAChainMap(
                f"{what} on {', '.join(bad)}: the closed-up monodromy is not a chain map"
            )
    homology_action(p)


# ---------------------------------------------------------------------------
# chain-level and homology-level monodromy
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransferMatrices:
    """Chain-level monodromy ``theta_i`` on ``C_i`` (column convention)."""

    theta0: MatrixQ
    theta1: MatrixQ
    theta2: MatrixQ

    def __getitem__(self, i: int) -> MatrixQ:
        return (self.theta0, self.theta1, self.theta2)[i]

    def as_graded(self) -> GradedAction:
        return GradedAction((self.theta0, self.theta1, self.theta2))


def _closure_matrix(p: MorsePresentation, index: int) -> MatrixQ:
    names = p.loci(index)
    where = {n: k for k, n in enumerate(names)}
    images = (p.closure0, p.closure1, p.closure2)[index]
    return MatrixQ.permutation([where[x] for x in images])


def slide_matrix(p: MorsePresentation, e: Slide) -> MatrixQ:
    """Elementary matrix of ``mover -> mover + sign * over`` on ``C_1``."""
    n = len(p.loci1)
    i, j = p.loci1.index(e.mover), p.loci1.index(e.over)
    rows = MatrixQ.identity(n).to_lists()
    rows[j][i] = Fraction(e.sign)
    return MatrixQ(rows, rows=n, cols=n)


def transfer_matrices(p: MorsePresentation) -> TransferMatrices:
    """``theta1 = C1 . E_m ... E_1``; ``theta0`` and ``theta2`` are closures."""
    n = len(p.loci1)
    acc = MatrixQ.identity(n)
    for e in p.events:
        if isinstance(e, Slide):
            acc = slide_matrix(p, e) @ acc
    return TransferMatrices(
        theta0=_closure_matrix(p, 0),
        theta1=_closure_matrix(p, 1) @ acc,
        theta2=_closure_matrix(p, 2),
    )


@dataclass(frozen=True)
class HomologyAction:
    action: GradedAction
    genus: int
    basis_h1: tuple[tuple[Fraction, ...], ...]  # coset representatives in C1 coordinates


def homology_action(p: MorsePresentation) -> HomologyAction:
    th = transfer_matrices(p)
    n0, n1, n2 = len(p.loci0), len(p.loci1), len(p.loci2)

    e0 = [tuple(MatrixQ.identity(n0).column(j)) for j in range(n0)]
    A0 = induced_quotient_map(th.theta0, e0, image_basis(p.d1))

    ker1 = kernel_basis(p.d1)
    im2 = image_basis(p.d2)
    A1 = induced_quotient_map(th.theta1, ker1, im2)

    ker2 = kernel_basis(p.d2)
    A2 = induced_quotient_map(th.theta2, ker2, [])

    one = MatrixQ([[1]])
    if A2 != one:
        raise OrientationReversing(f"monodromy acts on H2 by {A2!r}, not by +1")
    if A0 != one:
        raise OrientationReversing(f"monodromy acts on H0 by {A0!r}, not by +1")
    g = p.genus
    if A1.rows != 2 * g:
        raise BadHomologyShape(f"dim H1 = {A1.rows} but the Euler characteristic gives genus {g}")
    # an orientation-preserving surface map is symplectic on H1, so its
    # characteristic polynomial is reciprocal
    charpoly = det_one_minus_tA(A1)
    if charpoly.substitute_inverse().shift(2 * g) != charpoly:
        raise OrientationReversing(
            f"det(1 - t phi_1) = {charpoly} is not reciprocal; the monodromy is not symplectic on H1"
        )

    reps = tuple(quotient_representatives(ker1, im2))
    return HomologyAction(GradedAction((A0, A1, A2)), g, reps)


def betti1(p: MorsePresentation) -> int:
    """``b1`` of the mapping torus: ``dim ker(phi_1 - 1) + 1``."""
    A1 = homology_action(p).action[1]
    return len(kernel_basis(A1 - MatrixQ.identity(A1.rows))) + 1


def _require_b1_one(p: MorsePresentation) -> HomologyAction:
    h = homology_action(p)
    A1 = h.action[1]
    b = len(kernel_basis(A1 - MatrixQ.identity(A1.rows))) + 1
    if b != 1:
        raise BettiNotOne(f"b1 = {b}; the Alexander polynomial normalization needs b1 = 1")
    return h


def alexander(p: MorsePresentation) -> LaurentPolynomial:
    """Alexander polynomial normalized by ``D(1) = 1`` and ``D(1/t) = D(t)``."""
    h = _require_b1_one(p)
    raw = det_one_minus_tA(h.action[1]).shift(-h.genus)
    delta = raw.scale(1 / raw.evaluate(1))
    if delta.evaluate(1) != 1 or delta.substitute_inverse() != delta:
        raise IdentityViolated(f"normalized Alexander polynomial {delta} is not symmetric")
    return delta


def propagator_boundary_h(p: MorsePresentation) -> RationalFunction:
    """``h(t) = (1+t)/(1-t) + t D'/D``."""
    delta = RationalFunction(alexander(p))
    return RationalFunction(1 + T, 1 - T) + rf_log_derivative_t(delta)


def lescop_coefficient(p: MorsePresentation) -> RationalFunction:
    """Boundary coefficient ``-h(t)`` of the equivariant propagator."""
    h = propagator_boundary_h(p)
    if h.substitute_inverse() + h != 0:
        raise IdentityViolated(f"h(1/t) != -h(t) for h = {h}")
    return -h


class GenusShift(NamedTuple):
    log_derivative: RationalFunction  # t zeta'/zeta
    alexander_side: RationalFunction  # g + t D'/D + 2t/(1-t)
    genus: int


def genus_shift_identity(p: MorsePresentation) -> GenusShift:
    """Check ``t zeta'/zeta = g + t D'/D + 2t/(1-t)``."""
    h = _require_b1_one(p)
    lhs = zeta_log_derivative(h.action)
    delta = RationalFunction(alexander(p))
    rhs = rf_log_derivative_t(delta) + RationalFunction(2 * T, 1 - T) + h.genus
    if lhs != rhs:
        raise IdentityViolated(f"t zeta'/zeta = {lhs} but g + t D'/D + 2t/(1-t) = {rhs}")
    return GenusShift(lhs, rhs, h.genus)
