"""Parser for the line-oriented problem file format.

A problem file declares at most one quadratic field and up to five
sections.  Keys take ``name: value`` form, vectors are comma-separated
scalars in the usual text format, ``#`` starts a comment::

    sqrt: 7                 # optional field extension, once, before sections

    [lattice]
    basis: H, E
    gram: 1, 0
    gram: 0, -1
    ample: 2, -1
    cone: curves            # or: quadric (then give polarization: ...)
    curve E: 0, 1
    curve C: 1, -1
    generator: 0, 1
    generator: 1, -1

    [classes]
    omega: 2, -1

    [sigma]
    valuation C: 1

    [flag]
    basis: h, Z
    gram: 4, 6
    gram: 6, 2
    polarization: 1, 0
    omega_restr: 1, 0
    z_restr: 0, 1

    [curve]
    degree: 3
    point p: 1
    point q: 1/2

Unknown sections or keys are rejected.  Syntax problems raise
:class:`ParseError` (CLI exit status 2); semantically invalid data raises
the corresponding engine error when the objects are built.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curvecase import CurveSigma
from .errors import ParseError
from .flagcone import FlagConfiguration
from .green import RealDivisorialValuation, SigmaSet
from .lattice import CurveCone, DivisorClass, QuadricCone, SurfaceLattice
from .scalars import Scalar, parse_scalar

_SECTIONS = ("lattice", "classes", "sigma", "flag", "curve")


@dataclass
class ProblemFile:
    field_d: int = 0
    lattice: SurfaceLattice | None = None
    classes: dict[str, DivisorClass] = field(default_factory=dict)
    sigma: SigmaSet | None = None
    flag: FlagConfiguration | None = None
    curve: CurveSigma | None = None


def _scalar(token: str, field_d: int, lineno: int) -> Scalar:
    s = parse_scalar(token)
    if s.d not in (0, field_d):
        raise ParseError(
            f"line {lineno}: scalar uses sqrt({s.d}) but the file declares "
            f"{'no extension' if field_d == 0 else f'sqrt({field_d})'}")
    return s


def _vector(value: str, field_d: int, lineno: int) -> list[Scalar]:
    parts = value.split(",")
    return [_scalar(p, field_d, lineno) for p in parts]


def _split_key(line: str, lineno: int) -> tuple[str, str]:
    if ":" not in line:
        raise ParseError(f"line {lineno}: expected 'key: value'")
    key, value = line.split(":", 1)
    key, value = key.strip(), value.strip()
    if not key or not value:
        raise ParseError(f"line {lineno}: expected 'key: value'")
    return key, value


def _build_lattice(entries, field_d: int) -> SurfaceLattice:
    data = {"basis": None, "ample": None, "cone": None, "polarization": None}
    gram_rows, curves, generators = [], [], []
    for lineno, key, value in entries:
        if key == "basis":
            data["basis"] = [p.strip() for p in value.split(",")]
        elif key == "gram":
            gram_rows.append(_vector(value, field_d, lineno))
        elif key == "ample":
            data["ample"] = _vector(value, field_d, lineno)
        elif key == "cone":
            if value not in ("curves", "quadric"):
                raise ParseError(f"line {lineno}: cone must be 'curves' or 'quadric'")
            data["cone"] = value
        elif key == "polarization":
            data["polarization"] = _vector(value, field_d, lineno)
        elif key == "generator":
            generators.append(_vector(value, field_d, lineno))
        elif key.startswith("curve "):
            curves.append((key[6:].strip(), _vector(value, field_d, lineno)))
        else:
            raise ParseError(f"line {lineno}: unknown lattice key {key!r}")
    for want in ("basis", "ample", "cone"):
        if data[want] is None:
            raise ParseError(f"lattice section is missing {want!r}")
    if data["cone"] == "quadric":
        if data["polarization"] is None:
            raise ParseError("quadric cone needs a polarization")
        if curves or generators:
            raise ParseError("quadric cone takes no curves or generators")
        cone = QuadricCone(DivisorClass(data["polarization"]))
    else:
        if data["polarization"] is not None:
            raise ParseError("curves cone takes no polarization")
        cone = CurveCone(
            tuple(DivisorClass(v) for v in generators),
            tuple(DivisorClass(v, label=lab) for lab, v in curves))
    return SurfaceLattice(data["basis"], gram_rows, cone, DivisorClass(data["ample"]))


def _build_flag(entries, field_d: int) -> FlagConfiguration:
    basis, gram_rows = None, []
    vectors: dict[str, list[Scalar]] = {}
    for lineno, key, value in entries:
        if key == "basis":
            basis = [p.strip() for p in value.split(",")]
        elif key == "gram":
            gram_rows.append(_vector(value, field_d, lineno))
        elif key in ("polarization", "omega_restr", "z_restr", "s_restr"):
            if key in vectors:
                raise ParseError(f"line {lineno}: duplicate flag key {key!r}")
            vectors[key] = _vector(value, field_d, lineno)
        else:
            raise ParseError(f"line {lineno}: unknown flag key {key!r}")
    if basis is None or not gram_rows:
        raise ParseError("flag section needs basis and gram")
    for want in ("polarization", "omega_restr", "z_restr"):
        if want not in vectors:
            raise ParseError(f"flag section is missing {want!r}")
    omega = DivisorClass(vectors["omega_restr"])
    s_lat = SurfaceLattice(basis, gram_rows,
                           QuadricCone(DivisorClass(vectors["polarization"])),
                           omega)
    s_restr = DivisorClass(vectors["s_restr"]) if "s_restr" in vectors else None
    return FlagConfiguration(s_lat, omega, DivisorClass(vectors["z_restr"]),
                             s_restr=s_restr)


def parse_problem(text: str) -> ProblemFile:
    field_d = 0
    sections: dict[str, list] = {}
    current: str | None = None
    seen_any_section = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in _SECTIONS:
                raise ParseError(f"line {lineno}: unknown section [{name}]")
            if name in sections:
                raise ParseError(f"line {lineno}: duplicate section [{name}]")
            sections[name] = []
            current = name
            seen_any_section = True
            continue
        key, value = _split_key(line, lineno)
        if current is None:
            if key != "sqrt":
                raise ParseError(f"line {lineno}: only 'sqrt: D' may precede sections")
            if seen_any_section or field_d:
                raise ParseError(f"line {lineno}: 'sqrt' must appear once, first")
            try:
                field_d = int(value)
            except ValueError:
                raise ParseError(f"line {lineno}: invalid field declaration") from None
            if field_d <= 1:
                raise ParseError(f"line {lineno}: sqrt needs an integer above 1")
            # normalize to the square-free part so scalars match structurally
            field_d = Scalar(0, 1, field_d).d
            continue
        sections[current].append((lineno, key, value))

    pf = ProblemFile(field_d=field_d)
    if "lattice" in sections:
        pf.lattice = _build_lattice(sections["lattice"], field_d)
    if "classes" in sections:
        for lineno, key, value in sections["classes"]:
            if key in pf.classes:
                raise ParseError(f"line {lineno}: duplicate class {key!r}")
            pf.classes[key] = DivisorClass(_vector(value, field_d, lineno), label=key)
    if "sigma" in sections:
        vals = []
        for lineno, key, value in sections["sigma"]:
            if not key.startswith("valuation "):
                raise ParseError(f"line {lineno}: unknown sigma key {key!r}")
            vals.append(RealDivisorialValuation(key[10:].strip(),
                                                _scalar(value, field_d, lineno)))
        pf.sigma = SigmaSet(vals)
    if "flag" in sections:
        pf.flag = _build_flag(sections["flag"], field_d)
    if "curve" in sections:
        degree, points = None, []
        for lineno, key, value in sections["curve"]:
            if key == "degree":
                degree = _scalar(value, field_d, lineno)
            elif key.startswith("point "):
                points.append((key[6:].strip(), _scalar(value, field_d, lineno)))
            else:
                raise ParseError(f"line {lineno}: unknown curve key {key!r}")
        if degree is None:
            raise ParseError("curve section needs a degree")
        pf.curve = CurveSigma(degree, points)
    return pf


def load_problem(path: str) -> ProblemFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_problem(text)
