"""
Catalog Exporter

Writes the catalog groups as group files, plus a few sample ideal files, so the
``algorithm1 --file`` and ``degree --ideal`` paths can be exercised by hand.
"""

import json
import sys
from pathlib import Path

from src.groups.catalog import SL2_CATALOG, named_group
from src.groups.matgroup import group_to_json
from src.utils.helpers import dumps_report

EXTRA_GROUPS = ["cyclic-3", "cyclic-4", "binary-dihedral-2", "binary-dihedral-3"]

SAMPLE_IDEALS = {
    "empty-in-4-vars": {"vars": ["a", "b", "c", "d"], "generators": []},
    "twisted-cubic": {
        "vars": ["x", "y", "w"],
        "order": "grevlex",
        "generators": ["y - x^2", "w - x^3"],
    },
    "fifth-roots": {"vars": ["x"], "conductor": 5, "generators": ["(x - z)*(x - z^2)"]},
}


def export_catalog(target: Path):
    """Write every group and sample ideal into ``target``."""
    target.mkdir(parents=True, exist_ok=True)

    print("Exporting groups...")
    for tag in [*SL2_CATALOG, *EXTRA_GROUPS]:
        group = named_group(tag)
        (target / f"{tag}.json").write_text(dumps_report(group_to_json(group)) + "\n")
        print(f"  {tag}: order {group.order}")

    print("Exporting sample ideals...")
    for name, data in SAMPLE_IDEALS.items():
        (target / f"{name}.json").write_text(json.dumps(data, indent=2) + "\n")
        print(f"  {name}")

    print(f"\nCatalog written to {target}")


if __name__ == "__main__":
    export_catalog(Path(sys.argv[1] if len(sys.argv) > 1 else "catalog"))
