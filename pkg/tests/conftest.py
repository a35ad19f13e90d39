from __future__ import annotations

import itertools

import pytest

from lexitrain import fixtures
from lexitrain.lexicon import Category, Language, Level, LevelRank, LexiconPack, TrainingItem
from lexitrain.progress import ProgressStore


@pytest.fixture
def ko_pack() -> LexiconPack:
    return fixtures.korean_canonical_pack()


@pytest.fixture
def es_pack() -> LexiconPack:
    return fixtures.spanish_minimal_pack()


def build_pack(
    basic: tuple[int, ...] = (5, 4),
    intermediate: tuple[int, ...] = (4,),
    advanced: tuple[int, ...] = (4,),
    *,
    pack_id: str = "test-pack",
) -> LexiconPack:
    """Synthetic pack with the given category sizes per level.

    Categories are named b0, b1, ... / i0, ... / a0, ...; item ids,
    english texts, and translations are all distinct pack-wide.
    """

    def level(rank: LevelRank, prefix: str, sizes: tuple[int, ...]) -> Level:
        categories = []
        for ci, size in enumerate(sizes):
            items = tuple(
                TrainingItem(
                    item_id=f"{prefix}{ci}-item{k}",
                    english=f"word {prefix}{ci}.{k}",
                    translation=f"tr-{prefix}{ci}.{k}",
                    romanization=f"rom-{prefix}{ci}.{k}",
                    mnemonic=f"mnemonic for {prefix}{ci}.{k}" if k % 2 == 0 else None,
                )
                for k in range(size)
            )
            categories.append(Category(name=f"{prefix}{ci}", items=items))
        return Level(rank=rank, categories=tuple(categories))

    return LexiconPack(
        pack_id=pack_id,
        pack_version="1.0.0",
        language=Language.SPANISH,
        levels=(
            level(LevelRank.BASIC, "b", basic),
            level(LevelRank.INTERMEDIATE, "i", intermediate),
            level(LevelRank.ADVANCED, "a", advanced),
        ),
    )


@pytest.fixture
def make_pack():
    return build_pack


@pytest.fixture
def ticking_store(tmp_path) -> ProgressStore:
    """Store with a deterministic strictly increasing clock."""
    counter = itertools.count()
    return ProgressStore(tmp_path, clock=lambda: float(next(counter)))
