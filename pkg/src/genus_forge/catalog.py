"""Manifold catalog persistence: canonical JSON files, validation that names
each offending entry and rule, and name resolution with builtin fallback.

Partition keys serialize as descending comma-joined integers ("2,1,1");
rationals as "num/den" strings. Serialization is canonical, so saving a loaded
catalog reproduces the file byte for byte.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import CatalogError, GenusForgeError, UnknownManifold
from .manifolds import (
    GenusKind,
    ManifoldData,
    builtin,
    connected_sum,
    cp,
    hp2,
    k3,
    product,
    sphere,
    torus,
)

__all__ = [
    "SCHEMA_VERSION",
    "ENV_CATALOG_PATH",
    "CatalogFile",
    "entry_to_dict",
    "entry_from_dict",
    "dumps_catalog",
    "loads_catalog",
    "load_catalog",
    "save_catalog",
    "build_default_catalog",
    "load_default_catalog",
    "resolve",
]

SCHEMA_VERSION = 1
ENV_CATALOG_PATH = "GENUS_FORGE_CATALOG"

_ENTRY_FIELDS = (
    "name",
    "real_dim",
    "complex_dim",
    "chern_numbers",
    "pontryagin_numbers",
    "spin",
    "string",
    "asserted",
)
_REQUIRED_FIELDS = ("name", "real_dim", "spin", "string")
_GENUS_ORDER = tuple(kind.value for kind in GenusKind)


@dataclass(frozen=True)
class CatalogFile:
    entries: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def names(self):
        return [entry.name for entry in self.entries]

    def get(self, name: str) -> ManifoldData | None:
        for entry in self.entries:
            if entry.name == name:
                return entry
        return None


def _partition_key(partition) -> str:
    return ",".join(str(part) for part in partition)


def _parse_partition(key, entry_name):
    try:
        partition = tuple(int(piece) for piece in key.split(","))
    except ValueError:
        raise CatalogError(f"entry {entry_name!r}: malformed partition key {key!r}") from None
    if not partition or any(part < 1 for part in partition):
        raise CatalogError(f"entry {entry_name!r}: partition parts must be positive in {key!r}")
    return partition


def _numbers_to_json(numbers):
    # descending partition order keeps the file canonical and diff-friendly
    return {_partition_key(part): numbers[part] for part in sorted(numbers, reverse=True)}


def entry_to_dict(entry: ManifoldData) -> dict:
    """Canonical JSON object for one entry; absent optional fields are omitted."""
    out = {"name": entry.name, "real_dim": entry.real_dim}
    if entry.complex_dim is not None:
        out["complex_dim"] = entry.complex_dim
    if entry.chern_numbers is not None:
        out["chern_numbers"] = _numbers_to_json(entry.chern_numbers)
    if entry.pontryagin_numbers is not None:
        out["pontryagin_numbers"] = _numbers_to_json(entry.pontryagin_numbers)
    out["spin"] = entry.spin
    out["string"] = entry.string
    if entry.asserted_genera:
        out["asserted"] = {
            kind: str(entry.asserted_genera[kind])
            for kind in _GENUS_ORDER
            if kind in entry.asserted_genera
        }
    return out


def _checked(raw, entry_name, fld, types, required=False):
    if fld not in raw:
        if required:
            raise CatalogError(f"entry {entry_name!r}: missing required field {fld!r}")
        return None
    value = raw[fld]
    if isinstance(value, bool) and bool not in types:
        raise CatalogError(f"entry {entry_name!r}: field {fld!r} has wrong type {type(value).__name__}")
    if not isinstance(value, types):
        raise CatalogError(f"entry {entry_name!r}: field {fld!r} has wrong type {type(value).__name__}")
    return value


def _parse_numbers(raw_numbers, entry_name, fld):
    numbers = {}
    for key, value in raw_numbers.items():
        if not isinstance(key, str):
            raise CatalogError(f"entry {entry_name!r}: {fld} keys must be strings")
        partition = _parse_partition(key, entry_name)
        if isinstance(value, bool) or not isinstance(value, int):
            raise CatalogError(f"entry {entry_name!r}: {fld}[{key!r}] must be an integer")
        if partition in numbers:
            raise CatalogError(f"entry {entry_name!r}: duplicate partition {key!r} in {fld}")
        numbers[partition] = value
    return numbers


def entry_from_dict(raw) -> ManifoldData:
    """Validate one JSON entry object and construct the manifold data."""
    if not isinstance(raw, dict):
        raise CatalogError(f"catalog entry must be an object, got {type(raw).__name__}")
    entry_name = raw.get("name", "<unnamed>")
    unknown = set(raw) - set(_ENTRY_FIELDS)
    if unknown:
        raise CatalogError(f"entry {entry_name!r}: unknown field(s) {sorted(unknown)}")
    for fld in _REQUIRED_FIELDS:
        if fld not in raw:
            raise CatalogError(f"entry {entry_name!r}: missing required field {fld!r}")

    name = _checked(raw, entry_name, "name", (str,), required=True)
    real_dim = _checked(raw, entry_name, "real_dim", (int,), required=True)
    complex_dim = _checked(raw, entry_name, "complex_dim", (int,))
    spin = _checked(raw, entry_name, "spin", (bool,), required=True)
    string = _checked(raw, entry_name, "string", (bool,), required=True)

    chern = _checked(raw, entry_name, "chern_numbers", (dict,))
    if chern is not None:
        chern = _parse_numbers(chern, entry_name, "chern_numbers")
    pont = _checked(raw, entry_name, "pontryagin_numbers", (dict,))
    if pont is not None:
        pont = _parse_numbers(pont, entry_name, "pontryagin_numbers")

    asserted = _checked(raw, entry_name, "asserted", (dict,))
    if asserted is not None:
        parsed = {}
        for kind, text in asserted.items():
            if kind not in _GENUS_ORDER:
                raise CatalogError(f"entry {entry_name!r}: unknown asserted genus {kind!r}")
            if not isinstance(text, str):
                raise CatalogError(f"entry {entry_name!r}: asserted[{kind!r}] must be a 'num/den' string")
            try:
                parsed[kind] = Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise CatalogError(f"entry {entry_name!r}: bad rational {text!r} for {kind!r}") from None
        asserted = parsed

    try:
        return ManifoldData(
            name=name,
            real_dim=real_dim,
            pontryagin_numbers=pont,
            chern_numbers=chern,
            complex_dim=complex_dim,
            spin=spin,
            string=string,
            asserted_genera=asserted,
        )
    except GenusForgeError as exc:
        raise CatalogError(f"entry {entry_name!r}: {exc}") from exc


def dumps_catalog(catalog: CatalogFile) -> str:
    payload = {
        "schema_version": catalog.schema_version,
        "entries": [entry_to_dict(entry) for entry in catalog.entries],
    }
    return json.dumps(payload, indent=2) + "\n"


def loads_catalog(text: str, source: str = "<string>") -> CatalogFile:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(
            f"invalid JSON in {source} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(raw, dict):
        raise CatalogError(f"{source}: top level must be an object")
    unknown = set(raw) - {"schema_version", "entries"}
    if unknown:
        raise CatalogError(f"{source}: unknown top-level field(s) {sorted(unknown)}")
    version = raw.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CatalogError(f"{source}: unsupported schema_version {version!r} (expected {SCHEMA_VERSION})")
    entries_raw = raw.get("entries")
    if not isinstance(entries_raw, list):
        raise CatalogError(f"{source}: 'entries' must be a list")
    entries = [entry_from_dict(item) for item in entries_raw]
    seen = set()
    for entry in entries:
        if entry.name in seen:
            raise CatalogError(f"duplicate entry name {entry.name!r}")
        seen.add(entry.name)
    return CatalogFile(entries=entries, schema_version=version)


def load_catalog(path) -> CatalogFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from exc
    return loads_catalog(text, source=str(path))


def save_catalog(catalog: CatalogFile, path) -> None:
    Path(path).write_text(dumps_catalog(catalog))


def build_default_catalog() -> CatalogFile:
    """The shipped catalog, constructed from builtins and closure operations."""
    t2, t4 = torus(2), torus(4)
    s4, s6 = sphere(4), sphere(6)
    k3_, hp2_ = k3(), hp2()
    b8 = ManifoldData(
        name="B8", real_dim=8, spin=True, asserted_genera={"ahat": Fraction(1)}
    )
    w24 = ManifoldData(
        name="W24", real_dim=24, spin=True, string=True,
        asserted_genera={"ahat": Fraction(0)},
    )
    t2xs6 = product(t2, s6)
    entries = [
        t2,
        t4,
        s4,
        s6,
        k3_,
        hp2_,
        cp(2),
        cp(3),
        cp(4),
        b8,
        w24,
        t2xs6,
        connected_sum(t2xs6, b8, name="T2xS6_sharp_B8"),
        connected_sum(t2xs6, hp2_, name="T2xS6_sharp_HP2"),
        product(k3_, k3_, name="K3xK3"),
        product(t4, k3_, name="T4xK3"),
        product(k3_, hp2_, name="K3xHP2"),
        product(hp2_, hp2_, name="HP2xHP2"),
    ]
    return CatalogFile(entries=entries)


def _packaged_catalog_text() -> str:
    return resources.files("genus_forge").joinpath("data/default_catalog.json").read_text()


def load_default_catalog() -> CatalogFile:
    """Catalog from GENUS_FORGE_CATALOG if set, else the packaged file."""
    override = os.environ.get(ENV_CATALOG_PATH)
    if override:
        return load_catalog(override)
    return loads_catalog(_packaged_catalog_text(), source="packaged default catalog")


def resolve(name: str, catalog: CatalogFile | None = None) -> ManifoldData:
    """Entry by name, falling back to the always-available builtins."""
    if catalog is None:
        catalog = load_default_catalog()
    entry = catalog.get(name)
    if entry is not None:
        return entry
    try:
        return builtin(name)
    except UnknownManifold:
        raise UnknownManifold(
            f"{name!r} is neither a catalog entry nor a builtin "
            "(builtins: CPn, Sn, Tn, K3, HP2)"
        ) from None
