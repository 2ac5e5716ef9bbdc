#!/usr/bin/env python3
"""Print the cuspidal shape, shift and extremal word of every real root up to a height.

    python3 scripts/cuspidal_catalogue.py --e 3 --max-height 7
    python3 scripts/cuspidal_catalogue.py --e 2 --max-height 6 --json catalogue.json
"""
import argparse
import json
from dataclasses import dataclass

from skewspecht.characters import extremal_word
from skewspecht.cuspidal import cuspidal_table
from skewspecht.preorders import PreorderSpec


@dataclass
class CatalogueConfig:
    e: int = 3
    max_height: int = 7
    json_path: str | None = None


def rows(cfg: CatalogueConfig):
    for r in cuspidal_table(PreorderSpec.erow(cfg.e), cfg.max_height):
        x = extremal_word(r.character)
        yield r, x


def main(argv=None):
    ap = argparse.ArgumentParser(description="cuspidal catalogue")
    ap.add_argument("--e", type=int, default=3)
    ap.add_argument("--max-height", type=int, default=7)
    ap.add_argument("--json", dest="json_path")
    cfg = CatalogueConfig(**vars(ap.parse_args(argv)))

    dump = []
    print(f"{'root':14s} {'case':11s} {'shift':>5s}  {'shape':44s} extremal word, dim")
    for r, x in rows(cfg):
        print(f"{r.root.spelling():14s} {r.case:11s} {r.shift:5d}  {str(r.shape):44s} {x.spelling()}, {x.dim}")
        dump.append(dict(r.to_json(), extremal=x.spelling(), extremal_dim=x.dim.to_json()))
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump(dump, fh, indent=1, sort_keys=True)


if __name__ == "__main__":
    main()
