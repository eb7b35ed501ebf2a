"""Line-oriented text format for algebras, pairs, modules, finite groups,
foliation profiles and period groups.

A document is a sequence of sections, each opened by a header line::

    algebra <name>
    pair <name> over <algebra>
    module <name> over <pair>
    group <name>
    profile <name>
    periods <name>

Tokens are whitespace separated, ``#`` starts a comment, rationals are
written ``p/q`` or as integers.  A vector is a comma list ``0,1,-1`` or a
basis name; a matrix is a sequence of row vectors ``1,0 0,1``.  Sections
may only refer to sections defined above them.  See :func:`serialize` for
the canonical layout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .algebra import (
    LieAlgebra,
    ReductivePair,
    find_reductive_complement,
    lie_algebra,
    validate_reductive_pair,
)
from .errors import ParseError, UnknownName, ValidationError
from .groups import GroupData, GroupElementAd, group_data, group_element, validate_group
from .linalg import Matrix, format_scalar, unit_vector
from .relative import GKModule, validate_gk_module
from .tischler import FLAG_NAMES, FoliationProfile, PeriodGroup, format_combination, period_group

_NUMBER = re.compile(r"-?\d+(?:/-?\d+)?$")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_./'-]*$")

KINDS = ("algebra", "pair", "module", "group", "profile", "periods")


@dataclass
class Document:
    """Parsed sections in file order; ``elements`` holds the Ad matrices
    listed under algebra and pair sections."""

    sections: dict = field(default_factory=dict)
    elements: dict = field(default_factory=dict)

    def get(self, name: str, kind: str | None = None):
        if name not in self.sections:
            raise UnknownName(f"no section named {name!r}")
        payload = self.sections[name]
        if kind is not None and kind_of(payload) != kind:
            raise ValidationError(f"{name!r} is a {kind_of(payload)}, expected a {kind}")
        return payload

    def add(self, name: str, payload, elements: Iterable[GroupElementAd] = ()):
        self.sections[name] = payload
        els = tuple(elements)
        if els:
            self.elements[name] = els

    def name_of(self, payload) -> str:
        for k, v in self.sections.items():
            if v is payload:
                return k
        for k, v in self.sections.items():
            if v == payload and kind_of(v) == kind_of(payload):
                return k
        raise UnknownName("payload is not part of this document")


def kind_of(payload) -> str:
    for cls, kind in (
        (LieAlgebra, "algebra"),
        (ReductivePair, "pair"),
        (GKModule, "module"),
        (GroupData, "group"),
        (FoliationProfile, "profile"),
        (PeriodGroup, "periods"),
    ):
        if isinstance(payload, cls):
            return kind
    raise TypeError(f"not a document payload: {type(payload).__name__}")


# --- tokens ----------------------------------------------------------------


def parse_scalar(tok: str, line: int) -> Fraction:
    if not _NUMBER.match(tok):
        raise ParseError(line, f"expected a rational number, got {tok!r}")
    if "/" in tok:
        num, den = tok.split("/")
        if int(den) == 0:
            raise ParseError(line, f"zero denominator in {tok!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(tok))


def parse_vector(tok: str, line: int, basis: tuple = (), dim: int | None = None) -> tuple:
    if tok in basis:
        return unit_vector(len(basis), basis.index(tok))
    v = tuple(parse_scalar(x, line) for x in tok.split(","))
    if dim is not None and len(v) != dim:
        raise ParseError(line, f"vector {tok!r} has length {len(v)}, expected {dim}")
    return v


def parse_matrix(tokens: list[str], line: int, n: int) -> Matrix:
    if len(tokens) != n:
        raise ParseError(line, f"expected {n} matrix rows, got {len(tokens)}")
    return Matrix([parse_vector(t, line, dim=n) for t in tokens], ncols=n)


def _name(tok: str, line: int) -> str:
    if not _NAME.match(tok):
        raise ParseError(line, f"invalid name {tok!r}")
    return tok


def _int(tok: str, line: int) -> int:
    if not re.fullmatch(r"\d+", tok):
        raise ParseError(line, f"expected a non-negative integer, got {tok!r}")
    return int(tok)


def _bool(tok: str, line: int) -> bool:
    if tok not in ("true", "false"):
        raise ParseError(line, f"expected true or false, got {tok!r}")
    return tok == "true"


# --- parsing ---------------------------------------------------------------


def _lines(text: str):
    for no, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def parse(text: str) -> Document:
    doc = Document()
    current = None
    for no, toks in _lines(text):
        if toks[0] in KINDS:
            if current:
                _finish(doc, *current)
            current = (no, toks, [])
        else:
            if current is None:
                raise ParseError(no, f"{toks[0]!r} outside of any section")
            current[2].append((no, toks))
    if current:
        _finish(doc, *current)
    return doc


def _finish(doc: Document, line: int, header: list[str], body: list):
    kind = header[0]
    if kind in ("algebra", "group", "profile", "periods"):
        if len(header) != 2:
            raise ParseError(line, f"expected '{kind} <name>'")
    elif len(header) != 4 or header[2] != "over":
        raise ParseError(line, f"expected '{kind} <name> over <name>'")
    name = _name(header[1], line)
    if name in doc.sections:
        raise ParseError(line, f"section {name!r} defined twice")
    parser = {
        "algebra": _parse_algebra,
        "pair": _parse_pair,
        "module": _parse_module,
        "group": _parse_group,
        "profile": _parse_profile,
        "periods": _parse_periods,
    }[kind]
    parser(doc, line, name, header, body)


def _expect_once(seen: set, key: str, no: int):
    if key in seen:
        raise ParseError(no, f"{key!r} given twice")
    seen.add(key)


def _ref(doc: Document, name: str, kind: str, line: int):
    if name not in doc.sections:
        raise ParseError(line, f"unknown {kind} {name!r} (sections must be defined before use)")
    payload = doc.sections[name]
    if kind_of(payload) != kind:
        raise ParseError(line, f"{name!r} is a {kind_of(payload)}, expected a {kind}")
    return payload


def _parse_algebra(doc, line, name, header, body):
    dim, basis, brackets, element_lines = None, None, {}, []
    seen = set()
    for no, toks in body:
        key = toks[0]
        if key == "dim":
            _expect_once(seen, key, no)
            if len(toks) != 2:
                raise ParseError(no, "expected 'dim <n>'")
            dim = _int(toks[1], no)
        elif key == "basis":
            _expect_once(seen, key, no)
            basis = tuple(_name(t, no) for t in toks[1:])
        elif key == "bracket":
            brackets_line = toks[1:]
            if len(brackets_line) < 4 or brackets_line[2] != "=":
                raise ParseError(no, "expected 'bracket <a> <b> = <terms>'")
            a, b = brackets_line[0], brackets_line[1]
            pair = frozenset((a, b))
            if pair in {frozenset(k) for k in brackets}:
                raise ParseError(no, f"bracket [{a},{b}] listed twice")
            brackets[(a, b)] = (no, brackets_line[3:])
        elif key == "element":
            element_lines.append((no, toks))
        else:
            raise ParseError(no, f"unexpected {key!r} in algebra section")
    if dim is None:
        if basis is None:
            raise ParseError(line, "algebra section needs 'dim' or 'basis'")
        dim = len(basis)
    if basis is None:
        basis = tuple(f"e{i + 1}" for i in range(dim))
    if len(basis) != dim:
        raise ParseError(line, f"basis has {len(basis)} names, dim is {dim}")
    if len(set(basis)) != dim:
        raise ParseError(line, "basis names must be distinct")
    table = {}
    for (a, b), (no, terms) in brackets.items():
        for t in (a, b):
            if t not in basis:
                raise ParseError(no, f"unknown basis element {t!r}")
        table[(a, b)] = _parse_terms(terms, no, basis)
    g = lie_algebra(name, basis, table)
    elements = [_parse_element(toks, no, g) for no, toks in element_lines]
    doc.add(name, g, elements)


def _parse_terms(terms: list[str], no: int, basis: tuple) -> dict:
    """``2 Y + -1/3 Z - X`` -> {"Y": 2, "Z": -1/3, "X": -1}."""
    out: dict = {}
    sign = 1
    i = 0
    expect_term = True
    while i < len(terms):
        tok = terms[i]
        if tok in ("+", "-"):
            if expect_term and out:
                raise ParseError(no, f"unexpected {tok!r}")
            sign = -1 if tok == "-" else 1
            expect_term = True
            i += 1
            continue
        if not expect_term:
            raise ParseError(no, f"expected '+' or '-' before {tok!r}")
        if tok in basis:
            coeff, target = Fraction(1), tok
            i += 1
        else:
            coeff = parse_scalar(tok, no)
            if i + 1 >= len(terms) or terms[i + 1] not in basis:
                raise ParseError(no, f"coefficient {tok!r} must be followed by a basis name")
            target = terms[i + 1]
            i += 2
        out[target] = out.get(target, Fraction(0)) + sign * coeff
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError(no, "bracket has no terms")
    return out


def _parse_element(toks: list[str], no: int, g: LieAlgebra) -> GroupElementAd:
    if len(toks) < 2:
        raise ParseError(no, "expected 'element <label> <rows>'")
    return group_element(_name(toks[1], no), parse_matrix(toks[2:], no, g.dim), g)


def _parse_pair(doc, line, name, header, body):
    g = _ref(doc, header[3], "algebra", line)
    k_basis, p_basis, generators, element_lines = [], None, [], []
    seen = set()
    for no, toks in body:
        key = toks[0]
        if key == "subalgebra":
            _expect_once(seen, key, no)
            k_basis = [parse_vector(t, no, g.basis, g.dim) for t in toks[1:]]
        elif key == "complement":
            _expect_once(seen, key, no)
            p_basis = [parse_vector(t, no, g.basis, g.dim) for t in toks[1:]]
        elif key == "generator":
            generators.append(parse_matrix(toks[1:], no, g.dim))
        elif key == "element":
            element_lines.append((no, toks))
        else:
            raise ParseError(no, f"unexpected {key!r} in pair section")
    if p_basis is None:
        p_basis = find_reductive_complement(g, k_basis, generators)
    pair = validate_reductive_pair(g, k_basis, p_basis, generators, name)
    elements = [_parse_element(toks, no, g) for no, toks in element_lines]
    doc.add(name, pair, elements)


def _parse_module(doc, line, name, header, body):
    pair = _ref(doc, header[3], "pair", line)
    g = pair.algebra
    dim, rho, alpha = None, {}, {}
    for no, toks in body:
        key = toks[0]
        if key == "dim":
            if dim is not None or len(toks) != 2:
                raise ParseError(no, "expected a single 'dim <m>'")
            dim = _int(toks[1], no)
        elif key in ("rho", "alpha"):
            if dim is None:
                raise ParseError(no, f"'{key}' before 'dim'")
            if len(toks) < 2:
                raise ParseError(no, f"expected '{key} <index> <rows>'")
            if key == "rho":
                if toks[1] not in g.basis:
                    raise ParseError(no, f"unknown basis element {toks[1]!r}")
                idx, target = g.basis.index(toks[1]), rho
            else:
                idx, target = _int(toks[1], no), alpha
                if idx >= len(pair.generators):
                    raise ParseError(no, f"pair has no generator {idx}")
            if idx in target:
                raise ParseError(no, f"{key} {toks[1]} given twice")
            target[idx] = parse_matrix(toks[2:], no, dim)
        else:
            raise ParseError(no, f"unexpected {key!r} in module section")
    if dim is None:
        raise ParseError(line, "module section needs 'dim'")
    rhos = [rho.get(i, Matrix.zeros(dim, dim)) for i in range(g.dim)]
    alphas = [alpha.get(i, Matrix.identity(dim)) for i in range(len(pair.generators))]
    doc.add(name, validate_gk_module(pair, rhos, alphas))


def _parse_group(doc, line, name, header, body):
    order, labels, rows, subgroup, actions, algebra = None, (), [], (), {}, None
    seen = set()
    for no, toks in body:
        key = toks[0]
        if key == "order":
            _expect_once(seen, key, no)
            order = _int(toks[1], no) if len(toks) == 2 else None
            if order is None:
                raise ParseError(no, "expected 'order <n>'")
        elif key == "elements":
            _expect_once(seen, key, no)
            labels = tuple(toks[1:])
        elif key == "table":
            rows.append([_int(t, no) for t in toks[1:]])
        elif key == "subgroup":
            _expect_once(seen, key, no)
            subgroup = tuple(_int(t, no) for t in toks[1:])
        elif key == "action":
            if len(toks) < 3:
                raise ParseError(no, "expected 'action <element> <rows>'")
            idx = _int(toks[1], no)
            if idx in actions:
                raise ParseError(no, f"action {idx} given twice")
            actions[idx] = parse_matrix(toks[2:], no, len(toks) - 2)
        elif key == "acts-on":
            _expect_once(seen, key, no)
            if len(toks) != 2:
                raise ParseError(no, "expected 'acts-on <algebra>'")
            algebra = _ref(doc, toks[1], "algebra", no)
        else:
            raise ParseError(no, f"unexpected {key!r} in group section")
    if order is None:
        raise ParseError(line, "group section needs 'order'")
    if len(rows) != order:
        raise ParseError(line, f"{len(rows)} table rows for order {order}")
    g = validate_group(rows, labels, name)
    action = ()
    if actions:
        if sorted(actions) != list(range(order)):
            raise ParseError(line, "an action matrix is needed for every element")
        action = tuple(actions[i] for i in range(order))
    doc.add(name, group_data(g, subgroup, action, algebra))


def _parse_profile(doc, line, name, header, body):
    flags, periods = {}, None
    for no, toks in body:
        key = toks[0]
        if key in FLAG_NAMES:
            if key in flags or len(toks) != 2:
                raise ParseError(no, f"expected a single '{key} true|false'")
            flags[key] = _bool(toks[1], no)
        elif key == "period-group":
            if periods is not None or len(toks) != 2:
                raise ParseError(no, "expected a single 'period-group <name>'")
            periods = _ref(doc, toks[1], "periods", no)
        else:
            raise ParseError(no, f"unexpected {key!r} in profile section")
    missing = [f for f in FLAG_NAMES if f not in flags]
    if missing:
        raise ParseError(line, f"profile is missing {', '.join(missing)}")
    doc.add(name, FoliationProfile(**flags, periods=periods, name=name))


def _parse_periods(doc, line, name, header, body):
    constants, periods = None, []
    for no, toks in body:
        key = toks[0]
        if key == "constants":
            if constants is not None:
                raise ParseError(no, "'constants' given twice")
            constants = tuple(_name(t, no) if t != "1" else t for t in toks[1:])
        elif key == "period":
            if constants is None:
                raise ParseError(no, "'period' before 'constants'")
            if len(toks) < 3 or toks[1] != "=":
                raise ParseError(no, "expected 'period = <combination>'")
            periods.append(_parse_combination("".join(toks[2:]), no, constants))
        else:
            raise ParseError(no, f"unexpected {key!r} in periods section")
    if not constants:
        raise ParseError(line, "periods section needs 'constants'")
    doc.add(name, period_group(constants, periods))


def _parse_combination(expr: str, no: int, constants: tuple) -> tuple:
    out = [Fraction(0)] * len(constants)
    terms = re.findall(r"[+-]?[^+-]+", expr)
    if "".join(terms) != expr:
        raise ParseError(no, f"cannot read {expr!r}")
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        if "*" in body:
            coef, const = body.split("*", 1)
            c = parse_scalar(coef, no)
        elif _NUMBER.match(body):
            c, const = parse_scalar(body, no), "1"
            if c == 0:
                continue
        else:
            c, const = Fraction(1), body
        if const not in constants:
            raise ParseError(no, f"unknown constant {const!r}")
        out[constants.index(const)] += sign * c
    return tuple(out)


# --- serialization ---------------------------------------------------------


def _vec(v) -> str:
    return ",".join(format_scalar(x) for x in v)


def _mat(m: Matrix) -> str:
    return " ".join(_vec(r) for r in m.rows)


def _terms(coeffs: list[tuple[Fraction, str]]) -> str:
    parts = []
    for c, name in coeffs:
        if not parts:
            parts.append(f"{format_scalar(c)} {name}")
        elif c < 0:
            parts.append(f"- {format_scalar(-c)} {name}")
        else:
            parts.append(f"+ {format_scalar(c)} {name}")
    return " ".join(parts)


def serialize_section(name: str, payload, doc: Document | None = None, elements=()) -> str:
    kind = kind_of(payload)
    lines = []
    if kind == "algebra":
        g = payload
        lines += [f"algebra {name}", f"dim {g.dim}", "basis " + " ".join(g.basis)]
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                coeffs = [(c, g.basis[k]) for k, c in enumerate(g.structure[i][j]) if c]
                if coeffs:
                    lines.append(f"bracket {g.basis[i]} {g.basis[j]} = {_terms(coeffs)}")
    elif kind == "pair":
        p = payload
        lines.append(f"pair {name} over {_dep_name(doc, p.algebra)}")
        if p.k_basis:
            lines.append("subalgebra " + " ".join(_vec(v) for v in p.k_basis))
        lines.append("complement " + " ".join(_vec(v) for v in p.p_basis))
        lines += [f"generator {_mat(m)}" for m in p.generators]
    elif kind == "module":
        v = payload
        g = v.pair.algebra
        lines += [f"module {name} over {_dep_name(doc, v.pair)}", f"dim {v.dim}"]
        lines += [f"rho {b} {_mat(m)}" for b, m in zip(g.basis, v.coefficient.rho)]
        lines += [f"alpha {i} {_mat(m)}" for i, m in enumerate(v.component_action)]
    elif kind == "group":
        gd = payload
        g = gd.group
        lines += [f"group {name}", f"order {g.order}"]
        if g.labels:
            lines.append("elements " + " ".join(g.labels))
        lines += ["table " + " ".join(str(x) for x in row) for row in g.table]
        if gd.subgroup:
            lines.append("subgroup " + " ".join(str(x) for x in gd.subgroup))
        lines += [f"action {i} {_mat(m)}" for i, m in enumerate(gd.action)]
        if gd.algebra is not None:
            lines.append(f"acts-on {_dep_name(doc, gd.algebra)}")
    elif kind == "profile":
        p = payload
        lines.append(f"profile {name}")
        lines += [f"{f} {'true' if getattr(p, f) else 'false'}" for f in FLAG_NAMES]
        if p.periods is not None:
            lines.append(f"period-group {_dep_name(doc, p.periods)}")
    elif kind == "periods":
        p = payload
        lines += [f"periods {name}", "constants " + " ".join(p.constants)]
        lines += [f"period = {format_combination(v, p.constants)}" for v in p.generators]
    lines += [f"element {e.label} {_mat(e.matrix)}" for e in elements]
    return "\n".join(lines) + "\n"


def _dep_name(doc: Document | None, payload) -> str:
    if doc is None:
        raise ValidationError("a document is needed to name dependencies")
    return doc.name_of(payload)


def serialize(doc: Document) -> str:
    return "\n".join(
        serialize_section(name, payload, doc, doc.elements.get(name, ())) for name, payload in doc.sections.items()
    )


def document_for(name: str, payload, elements=(), dependency_names: dict | None = None) -> Document:
    """A self-contained document holding ``payload`` after the sections it
    refers to.  Dependencies are named by their own ``name`` attribute when
    they have one, else by ``dependency_names`` or a derived name."""
    doc = Document()
    dependency_names = dependency_names or {}

    def dep(obj, fallback: str):
        for existing_name, existing in doc.sections.items():
            if existing is obj:
                return existing_name
        nm = getattr(obj, "name", "") or dependency_names.get(kind_of(obj)) or fallback
        add(nm, obj)
        return nm

    def add(nm, obj, els=()):
        kind = kind_of(obj)
        if kind == "pair":
            dep(obj.algebra, f"{nm}_algebra")
        elif kind == "module":
            dep(obj.pair, f"{nm}_pair")
        elif kind == "group" and obj.algebra is not None:
            dep(obj.algebra, f"{nm}_algebra")
        elif kind == "profile" and obj.periods is not None:
            dep(obj.periods, f"{nm}_periods")
        doc.add(nm, obj, els)

    add(name, payload, elements)
    return doc
