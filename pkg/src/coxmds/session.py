"""Script-driven sessions: load, execute, and report.

A session script is a JSON document — key/value maps with nested arrays —
with two top-level fields:

* ``params``: optional map from parameter names to rational values (integers
  or strings such as ``"2"``, ``"-1/3"``); scripts may use these names inside
  polynomial and coordinate expressions.
* ``commands``: the ordered list of commands; each command is an object whose
  ``op`` field selects the operation.

Integer matrices are written row-major as arrays of arrays, polynomials as
strings in the shared grammar (``T(1)^2*T(2) - 3*T(4)``), fans as arrays of
maximal cones, each cone the array of its 1-based ray indices (the rays are
the columns of the ray matrix).  Variable indices appearing in commands are
1-based, matching the variable names.  The full grammar is documented in
``docs/session-format.md``.

Running a script produces a deterministic textual report (one summary line
per command, plus the blocks requested by ``print``) and a namespace binding
names to presentations and ideals.  Three error classes map to the process
exit codes of the command-line front end: :class:`SessionParseError` for
malformed input (exit 2), :class:`AssertionFailure` for a failed in-script
assertion (exit 1), and any other exception for internal errors (exit 3).

A golden case file is a JSON document wrapping a script together with the
expected outcome; see :func:`load_case` and :func:`check_case`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .cemds import (
    CEMDS,
    blowup_cemds,
    blowup_cemds_points,
    compress_cemds,
    contract_cemds,
    create_cemds,
    cyclic_cover_cox,
    modify_cemds,
    orbit_closure_ideal,
    permute_cemds,
    stretch_cemds,
)
from .fans import Fan, stellar_subdivision
from .groebner import (
    equal_ideals,
    graded_monomial_basis,
    groebner_basis,
    minimal_generators,
    rees_component_new_generators,
    ring_map_kernel,
)
from .intlinalg import row_lattices_equal
from .polyring import ParseError, PolynomialRing


class SessionParseError(Exception):
    """Malformed script or case file: structure, syntax, or name errors."""


class AssertionFailure(Exception):
    """A script assertion failed; the message carries a witness."""


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")
_SCALAR_RING = PolynomialRing(1)


# ---------------------------------------------------------------------------
# scripts and cases


@dataclass(frozen=True)
class SessionScript:
    """Parameter bindings plus the ordered command list."""

    params: dict
    commands: tuple
    path: str = None


@dataclass(frozen=True)
class GoldenCase:
    """A script with its expected outcome.

    ``expected`` may carry: ``relations`` (polynomial strings generating the
    expected ideal), ``degree_matrix`` (rows; free rows first, then one row
    per torsion factor), ``torsion`` (list of torsion orders), ``nvars``,
    ``weak``, ``minimal_relations`` and ``equivalence`` — either
    ``"ideal-equality"`` (the default; relations must generate the same
    ideal) or ``"degree-lattice"`` (only the grading data is compared).
    """

    id: str
    source: str
    tier: int
    params: dict
    script: SessionScript
    result: str
    expected: dict
    path: str = None


def _fail(message: str) -> None:
    raise SessionParseError(message)


def _as_map(value, what: str) -> dict:
    if not isinstance(value, dict):
        _fail(f"{what} must be an object")
    return value


def _as_list(value, what: str) -> list:
    if not isinstance(value, list):
        _fail(f"{what} must be an array")
    return value


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"{what} must be an integer")
    return value


def _as_bool(value, what: str) -> bool:
    if not isinstance(value, bool):
        _fail(f"{what} must be true or false")
    return value


def _as_str(value, what: str) -> str:
    if not isinstance(value, str):
        _fail(f"{what} must be a string")
    return value


def _as_name(value, what: str) -> str:
    value = _as_str(value, what)
    if not _NAME_RE.match(value):
        _fail(f"{what} must be an identifier, got {value!r}")
    return value


def _int_matrix(value, what: str) -> list:
    rows = _as_list(value, what)
    if not rows:
        _fail(f"{what} must have at least one row")
    out = []
    width = None
    for i, row in enumerate(rows):
        row = _as_list(row, f"{what} row {i + 1}")
        if width is None:
            width = len(row)
        elif len(row) != width:
            _fail(f"{what} rows differ in length")
        out.append([_as_int(v, f"{what} entry") for v in row])
    if width == 0:
        _fail(f"{what} must have at least one column")
    return out


def _scalar(value, params: dict, what: str) -> Fraction:
    """A rational constant: an integer, or a string expression over params."""
    if isinstance(value, bool):
        _fail(f"{what} must be a number or string, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            poly = _SCALAR_RING.parse(value, params)
        except ParseError as exc:
            _fail(f"{what}: {exc}")
        if poly.total_degree() > 0:
            _fail(f"{what} must be constant, got {value!r}")
        return poly.coeffs.get((0,), Fraction(0))
    _fail(f"{what} must be a number or string")


def _parse_params(value, what: str) -> dict:
    params = {}
    for name, raw in _as_map(value, what).items():
        _as_name(name, f"{what} key")
        params[name] = _scalar(raw, params, f"{what} {name!r}")
    return params


def parse_script(doc, path: str = None) -> SessionScript:
    """Build a script from an already-decoded JSON document."""
    doc = _as_map(doc, "script document")
    unknown = set(doc) - {"params", "commands", "comment"}
    if unknown:
        _fail(f"unknown script fields: {sorted(unknown)}")
    params = _parse_params(doc.get("params", {}), "params")
    commands = _as_list(doc.get("commands", []), "commands")
    for i, cmd in enumerate(commands):
        cmd = _as_map(cmd, f"command {i + 1}")
        op = cmd.get("op")
        if op not in _HANDLERS:
            _fail(f"command {i + 1}: unknown op {op!r}")
    return SessionScript(params=params, commands=tuple(commands), path=path)


def load_script(path: str) -> SessionScript:
    """Read and validate a session script file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror or exc}")
    except json.JSONDecodeError as exc:
        _fail(f"{path}: invalid JSON ({exc})")
    return parse_script(doc, path=path)


_EQUIVALENCE_MODES = ("ideal-equality", "degree-lattice")

_EXPECTED_FIELDS = {
    "relations",
    "degree_matrix",
    "torsion",
    "nvars",
    "weak",
    "minimal_relations",
    "equivalence",
}


def load_case(path: str) -> GoldenCase:
    """Read and validate a golden case file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror or exc}")
    except json.JSONDecodeError as exc:
        _fail(f"{path}: invalid JSON ({exc})")
    doc = _as_map(doc, "case document")
    unknown = set(doc) - {
        "id",
        "source",
        "tier",
        "params",
        "script",
        "result",
        "expected",
        "comment",
    }
    if unknown:
        _fail(f"{path}: unknown case fields: {sorted(unknown)}")
    case_id = _as_str(doc.get("id"), "case id")
    source = _as_str(doc.get("source"), "case source")
    tier = _as_int(doc.get("tier", 1), "case tier")
    params = _parse_params(doc.get("params", {}), "case params")
    script = parse_script(
        {"params": doc.get("params", {}), "commands": doc.get("script", [])},
        path=path,
    )
    result = _as_name(doc.get("result"), "case result")
    expected = _as_map(doc.get("expected", {}), "case expected")
    unknown = set(expected) - _EXPECTED_FIELDS
    if unknown:
        _fail(f"{path}: unknown expected fields: {sorted(unknown)}")
    mode = expected.get("equivalence", "ideal-equality")
    if mode not in _EQUIVALENCE_MODES:
        _fail(f"{path}: unknown equivalence mode {mode!r}")
    if mode == "ideal-equality" and "relations" not in expected:
        _fail(f"{path}: ideal-equality cases must list expected relations")
    return GoldenCase(
        id=case_id,
        source=source,
        tier=tier,
        params=params,
        script=script,
        result=result,
        expected=expected,
        path=path,
    )


# ---------------------------------------------------------------------------
# execution environment


@dataclass
class Session:
    """Mutable state while a script runs: bindings and report lines."""

    params: dict
    no_fan: bool = False
    bindings: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)

    def emit(self, text: str) -> None:
        self.lines.append(text)

    def report(self) -> str:
        return "".join(line + "\n" for line in self.lines)

    def bind(self, name: str, value) -> None:
        self.bindings[name] = value

    def get(self, name: str):
        name = _as_name(name, "name")
        if name not in self.bindings:
            _fail(f"unknown name {name!r}")
        return self.bindings[name]

    def get_cemds(self, name: str) -> CEMDS:
        value = self.get(name)
        if not isinstance(value, CEMDS):
            _fail(f"{name!r} is not a presentation")
        return value

    def get_ideal(self, name: str) -> list:
        value = self.get(name)
        if isinstance(value, CEMDS):
            return list(value.gens)
        if isinstance(value, list):
            return value
        _fail(f"{name!r} is neither a presentation nor an ideal")


def _parse_polys(ring: PolynomialRing, texts, params: dict, what: str) -> list:
    texts = _as_list(texts, what)
    out = []
    for i, text in enumerate(texts):
        text = _as_str(text, f"{what}[{i + 1}]")
        try:
            out.append(ring.parse(text, params))
        except ParseError as exc:
            _fail(f"{what}[{i + 1}]: {exc}")
    return out


def _parse_fan(cones, ncols: int, p_rows: list, what: str) -> Fan:
    cones = _as_list(cones, what)
    maximal = []
    for i, cone in enumerate(cones):
        cone = _as_list(cone, f"{what} cone {i + 1}")
        idx = []
        for v in cone:
            v = _as_int(v, f"{what} cone {i + 1} entry")
            if not 1 <= v <= ncols:
                _fail(f"{what} cone {i + 1}: ray index {v} outside 1..{ncols}")
            idx.append(v - 1)
        maximal.append(tuple(sorted(idx)))
    rays = [[row[j] for row in p_rows] for j in range(ncols)]
    return Fan(len(p_rows), rays, maximal)


def _indices(value, nvars: int, what: str) -> list:
    """1-based variable indices from the script, returned 0-based."""
    out = []
    for v in _as_list(value, what):
        v = _as_int(v, f"{what} entry")
        if not 1 <= v <= nvars:
            _fail(f"{what}: variable index {v} outside 1..{nvars}")
        out.append(v - 1)
    return out


def _fmt_vec(values) -> str:
    return " ".join(str(v) for v in values)


def _fmt_indices_1based(indices) -> str:
    return " ".join(str(i + 1) for i in indices)


def _witness(first: list, second: list):
    """(side, generator) for a generator not contained in the other ideal."""
    gb_second = groebner_basis(second) if second else None
    for g in first:
        if g.is_zero():
            continue
        nf = gb_second.normal_form(g) if gb_second else g
        if not nf.is_zero():
            return "first", g
    gb_first = groebner_basis(first) if first else None
    for h in second:
        if h.is_zero():
            continue
        nf = gb_first.normal_form(h) if gb_first else h
        if not nf.is_zero():
            return "second", h
    return None


def _check_degree_matrix(X: CEMDS, expected_rows, expected_torsion, what: str):
    """Compare grading data: row lattices of the free parts must agree, the
    torsion orders must match, and torsion rows must agree entrywise modulo
    their orders.  Returns an error message or None."""
    torsion = [int(v) for v in expected_torsion]
    if list(X.group.torsion) != torsion:
        return (
            f"{what}: torsion {list(X.group.torsion)} differs from"
            f" expected {torsion}"
        )
    rows = _int_matrix(expected_rows, what)
    a = X.group.rank
    if len(rows) != a + len(torsion):
        return (
            f"{what}: expected {len(rows)} rows but the grading has"
            f" {a + len(torsion)}"
        )
    if rows and len(rows[0]) != X.nvars:
        return (
            f"{what}: expected {len(rows[0])} columns but the ring has"
            f" {X.nvars} variables"
        )
    got = X.q_rows
    if a:
        if not row_lattices_equal([r[:] for r in got[:a]], rows[:a]):
            return f"{what}: free parts span different row lattices"
    for k, order in enumerate(torsion):
        got_row = [v % order for v in got[a + k]]
        want_row = [v % order for v in rows[a + k]]
        if got_row != want_row:
            return (
                f"{what}: torsion row {k + 1} is {_fmt_vec(got_row)}"
                f" but {_fmt_vec(want_row)} was expected (mod {order})"
            )
    return None


# ---------------------------------------------------------------------------
# command handlers


def _out_name(cmd: dict) -> str:
    return _as_name(cmd.get("out"), "'out'")


def _in_name(cmd: dict) -> str:
    return _as_name(cmd.get("in"), "'in'")


def _check_fields(cmd: dict, allowed: set) -> None:
    unknown = set(cmd) - allowed - {"op", "comment"}
    if unknown:
        _fail(f"unknown fields: {sorted(unknown)}")


def _op_create(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "p", "cones", "gens", "weak"})
    out = _out_name(cmd)
    p_rows = _int_matrix(cmd.get("p"), "'p'")
    nvars = len(p_rows[0])
    fan = None
    if "cones" in cmd and not sess.no_fan:
        fan = _parse_fan(cmd["cones"], nvars, p_rows, "'cones'")
    ring = PolynomialRing(nvars)
    gens = _parse_polys(ring, cmd.get("gens", []), sess.params, "'gens'")
    weak = _as_bool(cmd.get("weak", False), "'weak'")
    X = create_cemds(p_rows, fan=fan, gens=gens, ring=ring, weak=weak)
    sess.bind(out, X)
    sess.emit(
        f"create {out}: {X.nvars} variables, grading {X.group.describe()},"
        f" {len(X.gens)} relations"
    )


def _op_stretch(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "gens", "fan"})
    out = _out_name(cmd)
    X = sess.get_cemds(_in_name(cmd))
    gens = _parse_polys(X.ring, cmd.get("gens"), sess.params, "'gens'")
    compute_fan = _as_bool(cmd.get("fan", False), "'fan'") and not sess.no_fan
    Y = stretch_cemds(X, gens, compute_fan=compute_fan)
    sess.bind(out, Y)
    sess.emit(f"stretch {out}: {Y.nvars} variables, {len(Y.gens)} relations")


def _op_compress(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in"})
    out = _out_name(cmd)
    X = sess.get_cemds(_in_name(cmd))
    Y, survivors = compress_cemds(X)
    sess.bind(out, Y)
    sess.emit(
        f"compress {out}: {Y.nvars} variables,"
        f" survivors {_fmt_indices_1based(survivors)}"
    )


def _op_contract(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "keep", "drop"})
    out = _out_name(cmd)
    X = sess.get_cemds(_in_name(cmd))
    if ("keep" in cmd) == ("drop" in cmd):
        _fail("exactly one of 'keep' and 'drop' is required")
    if "keep" in cmd:
        keep = [_as_int(v, "'keep' entry") for v in _as_list(cmd["keep"], "'keep'")]
        if len(keep) != X.nvars or any(v not in (0, 1) for v in keep):
            _fail(f"'keep' must list 0 or 1 once per variable (ring has {X.nvars})")
    else:
        dropped = set(_indices(cmd["drop"], X.nvars, "'drop'"))
        keep = [0 if i in dropped else 1 for i in range(X.nvars)]
    Y = contract_cemds(X, keep)
    sess.bind(out, Y)
    sess.emit(
        f"contract {out}: {Y.nvars} variables, grading {Y.group.describe()},"
        f" {len(Y.gens)} relations"
    )


def _op_modify(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "p", "cones", "subdivide", "verify", "combination"})
    out = _out_name(cmd)
    X = sess.get_cemds(_in_name(cmd))
    p_rows = _int_matrix(cmd.get("p"), "'p'")
    if "cones" in cmd and "subdivide" in cmd:
        _fail("'cones' and 'subdivide' are mutually exclusive")
    fan2 = None
    if "cones" in cmd and not sess.no_fan:
        fan2 = _parse_fan(cmd["cones"], len(p_rows[0]), p_rows, "'cones'")
    elif _as_bool(cmd.get("subdivide", False), "'subdivide'") and not sess.no_fan:
        if X.fan is None:
            _fail("'subdivide' needs a fan on the input presentation")
        v = [row[-1] for row in p_rows]
        fan2 = stellar_subdivision(X.fan, v)
    verify = _as_bool(cmd.get("verify", True), "'verify'")
    combination = None
    if "combination" in cmd:
        combination = [
            _as_int(v, "'combination' entry")
            for v in _as_list(cmd["combination"], "'combination'")
        ]
    Y, report = modify_cemds(X, p_rows, fan2=fan2, verify=verify, combination=combination)
    sess.bind(out, Y)
    status = {True: "verified", False: "NOT verified", None: "unverified"}
    sess.emit(
        f"modify {out}: {Y.nvars} variables, {len(Y.gens)} relations,"
        f" {status[report.get('verified')]}"
    )


def _op_blowup(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "center", "multiplicities", "nu", "test", "fan"})
    out = _out_name(cmd)
    X = sess.get_cemds(_in_name(cmd))
    center = _parse_polys(X.ring, cmd.get("center"), sess.params, "'center'")
    mults = None
    if "multiplicities" in cmd:
        mults = [
            _as_int(v, "'multiplicities' entry")
            for v in _as_list(cmd["multiplicities"], "'multiplicities'")
        ]
    nu = None
    if "nu" in cmd:
        nu = _indices(cmd["nu"], X.nvars + len(center) + 1, "'nu'")
    run_test = _as_bool(cmd.get("test", True), "'test'")
    compute_fan = _as_bool(cmd.get("fan", False), "'fan'") and not sess.no_fan
    Y, report = blowup_cemds(
        X,
        center,
        multiplicities=mults,
        compute_fan=compute_fan,
        nu_indices=nu,
        run_test=run_test,
    )
    sess.bind(out, Y)
    if report["dims"] is None:
        test = "dimension test skipped"
    else:
        dims = report["dims"]
        verdict = "passed" if report["test_passed"] else "FAILED"
        test = f"dimension test {verdict} ({dims[0]} > {dims[1]})"
    sess.emit(
        f"blowup {out}: {Y.nvars} variables, {len(Y.gens)} relations, {test},"
        f" survivors {_fmt_indices_1based(report['survivors'])}"
    )


def _op_blowup_points(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "points", "test", "fan"})
    out = _out_name(cmd)
    X = sess.get_cemds(_in_name(cmd))
    rows = _as_list(cmd.get("points"), "'points'")
    points = []
    for i, row in enumerate(rows):
        row = _as_list(row, f"'points'[{i + 1}]")
        if len(row) != X.nvars:
            _fail(
                f"'points'[{i + 1}] has {len(row)} coordinates,"
                f" the ring has {X.nvars} variables"
            )
        points.append(
            [_scalar(v, sess.params, f"'points'[{i + 1}] entry") for v in row]
        )
    run_test = _as_bool(cmd.get("test", False), "'test'")
    compute_fan = _as_bool(cmd.get("fan", False), "'fan'") and not sess.no_fan
    Y = blowup_cemds_points(X, points, compute_fan=compute_fan, run_test=run_test)
    sess.bind(out, Y)
    sess.emit(
        f"blowup-points {out}: {len(points)} points, {Y.nvars} variables,"
        f" {len(Y.gens)} relations"
    )


def _op_cover(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "n", "f"})
    out = _out_name(cmd)
    X = sess.get_cemds(_in_name(cmd))
    n = _as_int(cmd.get("n"), "'n'")
    f = _parse_polys(X.ring, [cmd.get("f")], sess.params, "'f'")[0]
    Y = cyclic_cover_cox(X, n, f)
    sess.bind(out, Y)
    sess.emit(
        f"cover {out}: degree {n}, {Y.nvars} variables,"
        f" grading {Y.group.describe()}, {len(Y.gens)} relations"
    )


def _op_rees_scan(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "center", "degree", "lower"})
    X = sess.get_cemds(_in_name(cmd))
    center = _parse_polys(X.ring, cmd.get("center"), sess.params, "'center'")
    if not center:
        _fail("'center' must be nonempty")
    d = _as_int(cmd.get("degree"), "'degree'")
    if d < 1:
        _fail("'degree' must be positive")
    if "lower" in cmd:
        lower = _parse_polys(X.ring, cmd["lower"], sess.params, "'lower'")
    else:
        from itertools import combinations_with_replacement

        lower = []
        for combo in combinations_with_replacement(center, d):
            p = combo[0]
            for q in combo[1:]:
                p = p * q
            lower.append(p)
    j_gens = [X.ring.variable(i) for i in range(X.nvars)]
    new = rees_component_new_generators(
        center, list(X.gens), j_gens, d, lower, weights=X.positive_weights()
    )
    if "out" in cmd:
        sess.bind(_out_name(cmd), new)
    sess.emit(f"rees-scan degree {d}: {len(new)} new generators")
    for g in new:
        sess.emit(f"  {g}")


def _op_graded_basis(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "degree"})
    X = sess.get_cemds(_in_name(cmd))
    degree = [_as_int(v, "'degree' entry") for v in _as_list(cmd.get("degree"), "'degree'")]
    if len(degree) != X.group.length:
        _fail(
            f"'degree' has {len(degree)} components, the grading group"
            f" has {X.group.length}"
        )
    target = X.group.reduce(degree)
    monos = graded_monomial_basis(
        list(X.gens), X.var_degrees, X.group, target, ring=X.ring
    )
    if "out" in cmd:
        sess.bind(_out_name(cmd), monos)
    sess.emit(f"graded-basis degree {_fmt_vec(degree)}: {len(monos)} monomials")
    for m in monos:
        sess.emit(f"  {m}")


def _op_image_ideal(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "images", "vars"})
    out = _out_name(cmd)
    if ("in" in cmd) == ("vars" in cmd):
        _fail("exactly one of 'in' and 'vars' is required")
    if "in" in cmd:
        X = sess.get_cemds(_in_name(cmd))
        target_ring, target_gens = X.ring, list(X.gens)
    else:
        nvars = _as_int(cmd["vars"], "'vars'")
        if nvars < 1:
            _fail("'vars' must be positive")
        target_ring, target_gens = PolynomialRing(nvars), []
    images = _parse_polys(target_ring, cmd.get("images"), sess.params, "'images'")
    if not images:
        _fail("'images' must be nonempty")
    source_ring = PolynomialRing(len(images))
    kernel = ring_map_kernel(source_ring, images, target_gens)
    sess.bind(out, kernel)
    sess.emit(f"image-ideal {out}: {len(kernel)} generators")
    for g in kernel:
        sess.emit(f"  {g}")


def _op_minimize(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in"})
    out = _out_name(cmd)
    name = _in_name(cmd)
    value = sess.get(name)
    if isinstance(value, CEMDS):
        gens = minimal_generators(list(value.gens))
        sess.bind(out, replace(value, gens=tuple(gens)))
    elif isinstance(value, list):
        gens = minimal_generators(value)
        sess.bind(out, gens)
    else:
        _fail(f"{name!r} is neither a presentation nor an ideal")
    sess.emit(f"minimize {out}: {len(gens)} generators")


def _op_orbit_ideal(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "point"})
    out = _out_name(cmd)
    X = sess.get_cemds(_in_name(cmd))
    row = _as_list(cmd.get("point"), "'point'")
    if len(row) != X.nvars:
        _fail(
            f"'point' has {len(row)} coordinates, the ring has"
            f" {X.nvars} variables"
        )
    point = [_scalar(v, sess.params, "'point' entry") for v in row]
    gens = orbit_closure_ideal(X, point)
    sess.bind(out, gens)
    sess.emit(f"orbit-ideal {out}: {len(gens)} generators")
    for g in gens:
        sess.emit(f"  {g}")


def _op_permute(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"out", "in", "perm", "signs"})
    out = _out_name(cmd)
    name = _in_name(cmd)
    value = sess.get(name)
    if isinstance(value, CEMDS):
        nvars, ring = value.nvars, value.ring
    elif isinstance(value, list):
        if not value:
            _fail(f"{name!r} is empty, nothing to permute")
        nvars, ring = value[0].ring.nvars, value[0].ring
    else:
        _fail(f"{name!r} is neither a presentation nor an ideal")
    perm = _indices(cmd.get("perm"), nvars, "'perm'")
    if sorted(perm) != list(range(nvars)):
        _fail("'perm' must be a permutation of 1..nvars")
    signs = None
    if "signs" in cmd:
        signs = [_as_int(v, "'signs' entry") for v in _as_list(cmd["signs"], "'signs'")]
        if len(signs) != nvars or any(s not in (-1, 1) for s in signs):
            _fail("'signs' must list +1 or -1 once per variable")
    if isinstance(value, CEMDS):
        sess.bind(out, permute_cemds(value, perm, signs=signs))
    else:
        gens = [g.permute(perm) for g in value]
        if signs:
            flip = {i: -ring.variable(i) for i, s in enumerate(signs) if s == -1}
            if flip:
                gens = [g.substitute(flip) for g in gens]
        sess.bind(out, gens)
    sess.emit(f"permute {out}: variables relabeled")


def _op_print(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"in", "show"})
    name = _in_name(cmd)
    value = sess.get(name)
    sess.emit(f"== {name} ==")
    if isinstance(value, list):
        sess.emit(f"generators ({len(value)}):")
        for g in value:
            sess.emit(f"  {g}")
        return
    if not isinstance(value, CEMDS):
        _fail(f"{name!r} is neither a presentation nor an ideal")
    show = cmd.get("show", ["summary", "degree-matrix", "relations"])
    show = [_as_str(v, "'show' entry") for v in _as_list(show, "'show'")]
    known = {"summary", "degree-matrix", "relations", "p", "fan"}
    for section in show:
        if section not in known:
            _fail(f"unknown 'show' section {section!r}")
    X = value
    if "summary" in show:
        sess.emit(f"variables: {X.nvars}")
        sess.emit(f"grading: {X.group.describe()}")
        sess.emit(f"weak: {'yes' if X.weak else 'no'}")
    if "degree-matrix" in show:
        sess.emit("degree matrix:")
        for row in X.q_rows:
            sess.emit(f"  {_fmt_vec(row)}")
    if "relations" in show:
        sess.emit(f"relations ({len(X.gens)}):")
        for g in X.gens:
            sess.emit(f"  {g}")
    if "p" in show:
        if X.P is None:
            sess.emit("ray matrix: absent")
        else:
            sess.emit("ray matrix:")
            for row in X.p_rows:
                sess.emit(f"  {_fmt_vec(row)}")
    if "fan" in show:
        if X.fan is None:
            sess.emit("fan: absent")
        else:
            sess.emit(f"fan ({len(X.fan.maximal)} maximal cones):")
            for cone in X.fan.maximal:
                sess.emit(f"  {_fmt_indices_1based(cone)}")


def _ideal_ring(sess: Session, name: str):
    """(generators, ring-or-None) for a bound presentation or ideal."""
    value = sess.get(name)
    if isinstance(value, CEMDS):
        return list(value.gens), value.ring
    if isinstance(value, list):
        return value, (value[0].ring if value else None)
    _fail(f"{name!r} is neither a presentation nor an ideal")


def _raise_ideal_mismatch(got, want, name, label):
    witness = _witness(got, want)
    if witness is None:
        raise AssertionFailure("ideals differ")
    side, g = witness
    if side == "first":
        detail = f"generator {g} of {name} is not in the {label} ideal"
    else:
        detail = f"{label} generator {g} is not in the ideal of {name}"
    raise AssertionFailure(f"ideals differ: {detail}")


def _op_assert_equal_ideal(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"in", "expected", "other"})
    name = _in_name(cmd)
    got, ring = _ideal_ring(sess, name)
    if ("expected" in cmd) == ("other" in cmd):
        _fail("exactly one of 'expected' and 'other' is required")
    if "expected" in cmd:
        texts = _as_list(cmd["expected"], "'expected'")
        if ring is None and texts:
            raise AssertionFailure(
                f"the ideal of {name} is zero but {len(texts)} generators"
                " were expected"
            )
        want = _parse_polys(ring, texts, sess.params, "'expected'") if texts else []
        label = "expected"
    else:
        want = sess.get_ideal(_as_name(cmd["other"], "'other'"))
        label = _as_name(cmd["other"], "'other'")
    if got and want and got[0].ring.nvars != want[0].ring.nvars:
        raise AssertionFailure(
            f"ideals live in rings with {got[0].ring.nvars} and"
            f" {want[0].ring.nvars} variables"
        )
    if not equal_ideals(got, want):
        _raise_ideal_mismatch(got, want, name, label)
    sess.emit(f"assert-equal-ideal {name}: ok ({len(want)} generators)")


def _op_assert_degree_matrix(sess: Session, cmd: dict) -> None:
    _check_fields(cmd, {"in", "expected", "torsion"})
    name = _in_name(cmd)
    X = sess.get_cemds(name)
    error = _check_degree_matrix(
        X, cmd.get("expected"), cmd.get("torsion", []), "degree matrix"
    )
    if error:
        raise AssertionFailure(error)
    sess.emit(f"assert-degree-matrix {name}: ok")


_HANDLERS = {
    "create": _op_create,
    "stretch": _op_stretch,
    "compress": _op_compress,
    "contract": _op_contract,
    "modify": _op_modify,
    "blowup": _op_blowup,
    "blowup-points": _op_blowup_points,
    "cover": _op_cover,
    "orbit-ideal": _op_orbit_ideal,
    "rees-scan": _op_rees_scan,
    "graded-basis": _op_graded_basis,
    "image-ideal": _op_image_ideal,
    "minimize": _op_minimize,
    "permute": _op_permute,
    "print": _op_print,
    "assert-equal-ideal": _op_assert_equal_ideal,
    "assert-degree-matrix": _op_assert_degree_matrix,
}


def run_script(script: SessionScript, overrides: dict = None, no_fan: bool = False) -> Session:
    """Execute a script and return the finished session.

    ``overrides`` replaces individual parameter bindings.  On an assertion
    failure the raised :class:`AssertionFailure` carries the report lines
    produced so far in its ``lines`` attribute.
    """
    params = dict(script.params)
    if overrides:
        for name, value in overrides.items():
            params[_as_name(name, "parameter name")] = value
    sess = Session(params=params, no_fan=no_fan)
    for k, cmd in enumerate(script.commands):
        op = cmd["op"]
        try:
            _HANDLERS[op](sess, cmd)
        except SessionParseError as exc:
            raise SessionParseError(f"command {k + 1} ({op}): {exc}") from None
        except AssertionFailure as exc:
            failure = AssertionFailure(f"command {k + 1} ({op}): {exc}")
            failure.lines = list(sess.lines)
            raise failure from None
    return sess


# ---------------------------------------------------------------------------
# golden cases


def check_case(case: GoldenCase, no_fan: bool = False) -> str:
    """Run a golden case and compare against its expected outcome.

    Returns a short human-readable detail string on success; raises
    :class:`AssertionFailure` when an expectation is violated, and lets
    script-level errors propagate.
    """
    sess = run_script(case.script, no_fan=no_fan)
    if case.result not in sess.bindings:
        _fail(f"case result {case.result!r} was never bound by the script")
    X = sess.bindings[case.result]
    expected = case.expected
    details = []
    if isinstance(X, CEMDS):
        got_gens = list(X.gens)
    elif isinstance(X, list):
        got_gens = X
    else:
        _fail(f"case result {case.result!r} is neither a presentation nor an ideal")

    if "nvars" in expected:
        want = _as_int(expected["nvars"], "expected nvars")
        if not isinstance(X, CEMDS):
            _fail("expected nvars requires a presentation result")
        if X.nvars != want:
            raise AssertionFailure(f"{X.nvars} generators, expected {want}")
        details.append(f"{want} generators")

    mode = expected.get("equivalence", "ideal-equality")
    if mode == "ideal-equality":
        texts = _as_list(expected["relations"], "expected relations")
        if got_gens:
            ring = got_gens[0].ring
        elif isinstance(X, CEMDS):
            ring = X.ring
        elif texts:
            raise AssertionFailure(
                f"the result is the zero ideal but {len(texts)} relations"
                " were expected"
            )
        want_gens = (
            _parse_polys(ring, texts, sess.params, "expected relations")
            if texts
            else []
        )
        if not equal_ideals(got_gens, want_gens):
            _raise_ideal_mismatch(got_gens, want_gens, "the result", "expected")
        details.append(f"{len(texts)} relations")

    if "minimal_relations" in expected:
        want = _as_int(expected["minimal_relations"], "expected minimal_relations")
        got = len(minimal_generators(got_gens))
        if got != want:
            raise AssertionFailure(
                f"{got} minimal relations, expected {want}"
            )
        if mode != "ideal-equality":
            details.append(f"{want} relations")

    if "degree_matrix" in expected:
        if not isinstance(X, CEMDS):
            _fail("expected degree_matrix requires a presentation result")
        error = _check_degree_matrix(
            X, expected["degree_matrix"], expected.get("torsion", []), "degree matrix"
        )
        if error:
            raise AssertionFailure(error)
        details.append("degree matrix ok")

    if "weak" in expected:
        want = _as_bool(expected["weak"], "expected weak")
        if not isinstance(X, CEMDS):
            _fail("expected weak requires a presentation result")
        if X.weak != want:
            raise AssertionFailure(
                f"weak flag is {X.weak}, expected {want}"
            )

    return ", ".join(details) if details else "ok"
