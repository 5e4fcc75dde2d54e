#!/usr/bin/env python3
"""Regenerate the shipped default catalog from the in-code builder.

Run from the repository root after changing build_default_catalog(); the
serializer is canonical, so an unchanged builder reproduces the file byte
for byte.
"""

from pathlib import Path

from genus_forge.catalog import build_default_catalog, dumps_catalog

TARGET = Path(__file__).resolve().parent.parent / "src" / "genus_forge" / "data" / "default_catalog.json"


def main() -> None:
    text = dumps_catalog(build_default_catalog())
    TARGET.write_text(text)
    print(f"wrote {TARGET} ({len(text)} bytes)")


if __name__ == "__main__":
    main()
