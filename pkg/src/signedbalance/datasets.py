"""Preprocessing recipes for the reference datasets, read from a local data directory.

Nothing is downloaded. Files are looked up in ``$BALANCE_DATA_DIR`` (or an
explicit directory) under the names below, as ``<stem>.csv`` or ``<stem>.gml``.
CSV files carry a ``source,target,weight`` header, plus ``time`` for temporal
data and ``layer`` for multilayer data. GML files must already carry edge signs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .report import DatasetConfig

DATA_DIR_ENV = "BALANCE_DATA_DIR"


@dataclass(frozen=True)
class Recipe:
    stem: str
    label: str
    sign_rule: str
    symmetrize: bool = False
    mode: str = "static"


RECIPES = {
    # 58 undirected alliance/enmity pairs, stored once per pair.
    "tribes": Recipe("highland_tribes", "Highland tribes", "sign_only", symmetrize=True),
    # Ratings -4..+4; only the strongest scores (|w| >= 3) count as signed ties.
    "house_a": Recipe("house_a", "College House A", "threshold:3"),
    "house_b": Recipe("house_b", "College House B", "threshold:3"),
    "house_c": Recipe("house_c", "College House C", "threshold:3"),
    # Strengths are dropped; only signs are kept.
    "sampson": Recipe("sampson", "Sampson", "sign_only", mode="temporal"),
    # Full rankings 1..16 per rater; top 3 positive, bottom 3 negative.
    "newcomb": Recipe("newcomb", "Newcomb", "rank:3:3:17", mode="temporal"),
    # Weight 1 marks probable ties and is dropped; +-2 kept, then both layers symmetrized.
    "philosophers": Recipe("philosophers", "Philosophers", "threshold:2", symmetrize=True, mode="multilayer"),
    # Large static networks: signs only, no further preprocessing.
    "reddit": Recipe("reddit", "Reddit", "sign_only"),
    "wikipedia_election": Recipe("wikipedia_election", "Wikipedia election", "sign_only"),
    "bitcoin_otc": Recipe("bitcoin_otc", "Bitcoin OTC", "sign_only"),
    "bitcoin_alpha": Recipe("bitcoin_alpha", "Bitcoin Alpha", "sign_only"),
}

SMALL_STATIC = ("tribes", "house_a", "house_b", "house_c")
LARGE_STATIC = ("reddit", "wikipedia_election", "bitcoin_otc", "bitcoin_alpha")


class DatasetMissing(FileNotFoundError):
    pass


def data_dir(explicit=None) -> Path | None:
    raw = explicit if explicit is not None else os.environ.get(DATA_DIR_ENV)
    return Path(raw) if raw else None


def locate(name: str, directory=None) -> Path:
    recipe = RECIPES[name]
    base = data_dir(directory)
    if base is None:
        raise DatasetMissing(f"{recipe.label}: {DATA_DIR_ENV} is not set")
    for ext in ("csv", "gml"):
        path = base / f"{recipe.stem}.{ext}"
        if path.is_file():
            return path
    raise DatasetMissing(f"{recipe.label}: neither {recipe.stem}.csv nor {recipe.stem}.gml in {base}")


def dataset_config(name: str, directory=None, **overrides) -> DatasetConfig:
    """Config for a named reference dataset; raises DatasetMissing if its file is absent."""
    if name not in RECIPES:
        raise KeyError(f"unknown dataset {name!r}; known: {sorted(RECIPES)}")
    recipe = RECIPES[name]
    path = locate(name, directory)
    fmt = path.suffix[1:]
    kwargs = dict(
        label=recipe.label,
        inputs=[str(path)],
        format=fmt,
        sign_rule=recipe.sign_rule,
        # Signed GML files are already preprocessed.
        symmetrize=recipe.symmetrize and fmt == "csv",
        mode=recipe.mode,
    )
    kwargs.update(overrides)
    return DatasetConfig(**kwargs)
