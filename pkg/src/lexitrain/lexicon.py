"""Language content packs: types, parsing, validation, and lookup.

A pack is a UTF-8 JSON document describing one language's full content
tree: three ordered levels (Basic, Intermediate, Advanced), each holding
named categories, each holding ordered training items. Parsing enforces
document shape (required fields, enum values, level order); semantic
invariants such as id uniqueness are reported by :func:`validate_pack`
as findings rather than raised, so imperfect packs can still be
inspected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Iterator, Mapping

from .errors import PackSchemaError, PackSyntaxError


class Language(str, Enum):
    KOREAN = "Korean"
    MANDARIN_CHINESE = "Mandarin Chinese"
    JAPANESE = "Japanese"
    SPANISH = "Spanish"


class LevelRank(str, Enum):
    BASIC = "Basic"
    INTERMEDIATE = "Intermediate"
    ADVANCED = "Advanced"


LEVEL_ORDER: tuple[LevelRank, ...] = (
    LevelRank.BASIC,
    LevelRank.INTERMEDIATE,
    LevelRank.ADVANCED,
)

# Curriculum tracks required of a canonical pack. Third-party packs may
# define their own tracks; lenient validation only requires non-emptiness.
CANONICAL_CATEGORIES: Mapping[LevelRank, tuple[str, ...]] = {
    LevelRank.BASIC: ("alphabet", "numbering"),
    LevelRank.INTERMEDIATE: (
        "pronouns",
        "interrogatives",
        "school-supplies",
        "sports",
        "time-reading",
    ),
    LevelRank.ADVANCED: (
        "greetings",
        "introducing-oneself",
        "phone-conversation",
        "street",
        "eating",
    ),
}


@dataclass(frozen=True)
class TrainingItem:
    """One trainable word or phrase.

    ``english`` and ``translation`` are required; romanization, mnemonic,
    sample sentence, and audio reference are optional enrichments. The
    audio reference is a relative path resolved against the pack's own
    directory by whoever serves the file.
    """

    item_id: str
    english: str
    translation: str
    romanization: str | None = None
    mnemonic: str | None = None
    sample_sentence: str | None = None
    audio: str | None = None


@dataclass(frozen=True)
class Category:
    name: str
    items: tuple[TrainingItem, ...]


@dataclass(frozen=True)
class Level:
    rank: LevelRank
    categories: tuple[Category, ...]

    def category(self, name: str) -> Category | None:
        for cat in self.categories:
            if cat.name == name:
                return cat
        return None


@dataclass(frozen=True)
class LexiconPack:
    """Immutable content tree for one language.

    Safe to share between threads; all lookup indexes are derived lazily
    and cached on first use.
    """

    pack_id: str
    pack_version: str
    language: Language
    levels: tuple[Level, ...]

    @cached_property
    def _levels_by_rank(self) -> dict[LevelRank, Level]:
        return {lvl.rank: lvl for lvl in self.levels}

    @cached_property
    def _items_by_id(self) -> dict[str, TrainingItem]:
        # First occurrence wins; duplicates surface as validation findings.
        index: dict[str, TrainingItem] = {}
        for item, _, _ in self._walk():
            index.setdefault(item.item_id, item)
        return index

    @cached_property
    def _locations_by_id(self) -> dict[str, tuple[LevelRank, str]]:
        index: dict[str, tuple[LevelRank, str]] = {}
        for item, rank, cat_name in self._walk():
            index.setdefault(item.item_id, (rank, cat_name))
        return index

    def _walk(self) -> Iterator[tuple[TrainingItem, LevelRank, str]]:
        for lvl in self.levels:
            for cat in lvl.categories:
                for item in cat.items:
                    yield item, lvl.rank, cat.name

    def level(self, rank: LevelRank) -> Level:
        return self._levels_by_rank[rank]

    def item(self, item_id: str) -> TrainingItem:
        return self._items_by_id[item_id]

    def location_of(self, item_id: str) -> tuple[LevelRank, str]:
        """Return the (level rank, category name) holding an item."""
        return self._locations_by_id[item_id]

    def iter_items(self) -> Iterator[TrainingItem]:
        for item, _, _ in self._walk():
            yield item

    def distinct_translations(self) -> set[str]:
        return {item.translation for item in self.iter_items()}


class Severity(str, Enum):
    ERROR = "Error"
    WARNING = "Warning"


@dataclass(frozen=True)
class Finding:
    severity: Severity
    location: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    findings: tuple[Finding, ...]

    @classmethod
    def from_findings(cls, findings: list[Finding]) -> "ValidationReport":
        valid = not any(f.severity is Severity.ERROR for f in findings)
        return cls(valid=valid, findings=tuple(findings))


class ValidationMode(str, Enum):
    LENIENT = "Lenient"
    CANONICAL = "Canonical"


# --- parsing ----------------------------------------------------------------

def _expect_str(obj: Mapping, key: str, location: str, *, optional: bool = False) -> str | None:
    if key not in obj:
        if optional:
            return None
        raise PackSchemaError(f"missing required field '{key}'", location)
    value = obj[key]
    if not isinstance(value, str):
        raise PackSchemaError(f"field '{key}' must be a string", location)
    return value


def _expect_list(obj: Mapping, key: str, location: str) -> list:
    if key not in obj:
        raise PackSchemaError(f"missing required field '{key}'", location)
    value = obj[key]
    if not isinstance(value, list):
        raise PackSchemaError(f"field '{key}' must be an array", location)
    return value


def _parse_item(raw: object, location: str) -> TrainingItem:
    if not isinstance(raw, dict):
        raise PackSchemaError("item must be an object", location)
    return TrainingItem(
        item_id=_expect_str(raw, "id", location),
        english=_expect_str(raw, "english", location),
        translation=_expect_str(raw, "translation", location),
        romanization=_expect_str(raw, "romanization", location, optional=True),
        mnemonic=_expect_str(raw, "mnemonic", location, optional=True),
        sample_sentence=_expect_str(raw, "sampleSentence", location, optional=True),
        audio=_expect_str(raw, "audio", location, optional=True),
    )


def _parse_category(raw: object, location: str) -> Category:
    if not isinstance(raw, dict):
        raise PackSchemaError("category must be an object", location)
    name = _expect_str(raw, "name", location)
    items = tuple(
        _parse_item(entry, f"{location}.items[{i}]")
        for i, entry in enumerate(_expect_list(raw, "items", location))
    )
    return Category(name=name, items=items)


def _parse_level(raw: object, location: str) -> Level:
    if not isinstance(raw, dict):
        raise PackSchemaError("level must be an object", location)
    rank_text = _expect_str(raw, "rank", location)
    try:
        rank = LevelRank(rank_text)
    except ValueError:
        raise PackSchemaError(f"unknown level rank '{rank_text}'", location) from None
    categories = tuple(
        _parse_category(entry, f"{location}.categories[{i}]")
        for i, entry in enumerate(_expect_list(raw, "categories", location))
    )
    return Level(rank=rank, categories=categories)


def parse_pack(text: str) -> LexiconPack:
    """Parse a JSON pack document into a :class:`LexiconPack`.

    Raises :class:`PackSyntaxError` for malformed JSON (with line and
    column) and :class:`PackSchemaError` for missing fields, wrong enum
    values, or levels out of the Basic < Intermediate < Advanced order.
    Document order of levels, categories, and items is preserved.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PackSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(raw, dict):
        raise PackSchemaError("pack document must be a JSON object")

    pack_id = _expect_str(raw, "packId", "$")
    pack_version = _expect_str(raw, "packVersion", "$")
    language_text = _expect_str(raw, "language", "$")
    try:
        language = Language(language_text)
    except ValueError:
        raise PackSchemaError(f"unknown language '{language_text}'", "$") from None

    raw_levels = _expect_list(raw, "levels", "$")
    levels = tuple(
        _parse_level(entry, f"$.levels[{i}]") for i, entry in enumerate(raw_levels)
    )
    ranks = tuple(lvl.rank for lvl in levels)
    if ranks != LEVEL_ORDER:
        raise PackSchemaError(
            "levels must be exactly Basic, Intermediate, Advanced in that order; "
            f"got {[r.value for r in ranks]}",
            "$.levels",
        )
    return LexiconPack(
        pack_id=pack_id,
        pack_version=pack_version,
        language=language,
        levels=levels,
    )


def load_pack(path: str | Path) -> LexiconPack:
    return parse_pack(Path(path).read_text(encoding="utf-8"))


# --- serialization ----------------------------------------------------------

def item_to_dict(item: TrainingItem) -> dict:
    out: dict = {
        "id": item.item_id,
        "english": item.english,
        "translation": item.translation,
    }
    if item.romanization is not None:
        out["romanization"] = item.romanization
    if item.mnemonic is not None:
        out["mnemonic"] = item.mnemonic
    if item.sample_sentence is not None:
        out["sampleSentence"] = item.sample_sentence
    if item.audio is not None:
        out["audio"] = item.audio
    return out


def pack_to_dict(pack: LexiconPack) -> dict:
    return {
        "packId": pack.pack_id,
        "packVersion": pack.pack_version,
        "language": pack.language.value,
        "levels": [
            {
                "rank": lvl.rank.value,
                "categories": [
                    {"name": cat.name, "items": [item_to_dict(i) for i in cat.items]}
                    for cat in lvl.categories
                ],
            }
            for lvl in pack.levels
        ],
    }


def serialize_pack(pack: LexiconPack) -> str:
    """Render a pack back to its JSON document form.

    ``parse_pack(serialize_pack(p)) == p`` for every valid pack.
    """
    return json.dumps(pack_to_dict(pack), ensure_ascii=False, indent=2) + "\n"


# --- validation -------------------------------------------------------------

def _is_unsafe_audio_path(ref: str) -> bool:
    if ref.startswith("/") or ref.startswith("\\"):
        return True
    # Windows drive prefix also counts as absolute.
    if len(ref) >= 2 and ref[1] == ":":
        return True
    parts = ref.replace("\\", "/").split("/")
    return ".." in parts


def validate_pack(
    pack: LexiconPack,
    mode: ValidationMode = ValidationMode.LENIENT,
    *,
    base_dir: str | Path | None = None,
) -> ValidationReport:
    """Check a parsed pack against its semantic invariants.

    Lenient mode checks structural invariants only: non-empty levels and
    categories, unique category names per level, pack-wide unique item
    ids, non-empty english/translation text, and safe audio paths.
    Canonical mode additionally requires the full curriculum track list
    per level. Every finding is reported, not just the first; invalidity
    is data, so this never raises.

    When ``base_dir`` is given, audio references are resolved against it
    and missing files are reported as warnings.
    """
    findings: list[Finding] = []

    seen_ids: dict[str, str] = {}
    for li, lvl in enumerate(pack.levels):
        lvl_loc = f"$.levels[{li}]"
        if not lvl.categories:
            findings.append(Finding(Severity.ERROR, lvl_loc, f"level {lvl.rank.value} has no categories"))
        seen_names: dict[str, str] = {}
        for ci, cat in enumerate(lvl.categories):
            cat_loc = f"{lvl_loc}.categories[{ci}]"
            if cat.name in seen_names:
                findings.append(
                    Finding(
                        Severity.ERROR,
                        cat_loc,
                        f"duplicate category name '{cat.name}' in level {lvl.rank.value} "
                        f"(also at {seen_names[cat.name]})",
                    )
                )
            else:
                seen_names[cat.name] = cat_loc
            if not cat.items:
                findings.append(Finding(Severity.ERROR, cat_loc, f"category '{cat.name}' has no items"))
            for ii, item in enumerate(cat.items):
                item_loc = f"{cat_loc}.items[{ii}]"
                if item.item_id in seen_ids:
                    findings.append(
                        Finding(
                            Severity.ERROR,
                            item_loc,
                            f"duplicate item id '{item.item_id}' (also at {seen_ids[item.item_id]})",
                        )
                    )
                else:
                    seen_ids[item.item_id] = item_loc
                if not item.english.strip():
                    findings.append(Finding(Severity.ERROR, item_loc, "english text is empty"))
                if not item.translation.strip():
                    findings.append(Finding(Severity.ERROR, item_loc, "translation is empty"))
                if item.audio is not None:
                    if _is_unsafe_audio_path(item.audio):
                        findings.append(
                            Finding(
                                Severity.ERROR,
                                item_loc,
                                f"audio reference '{item.audio}' must be a relative path "
                                "without parent-directory traversal",
                            )
                        )
                    elif base_dir is not None and not (Path(base_dir) / item.audio).is_file():
                        findings.append(
                            Finding(Severity.WARNING, item_loc, f"audio file '{item.audio}' not found")
                        )

    if mode is ValidationMode.CANONICAL:
        for li, lvl in enumerate(pack.levels):
            present = {cat.name for cat in lvl.categories}
            for required in CANONICAL_CATEGORIES[lvl.rank]:
                if required not in present:
                    findings.append(
                        Finding(
                            Severity.ERROR,
                            f"$.levels[{li}]",
                            f"canonical pack is missing category '{required}' "
                            f"in level {lvl.rank.value}",
                        )
                    )

    # Quiz generation needs four distinct translations pack-wide.
    if len(pack.distinct_translations()) < 4:
        findings.append(
            Finding(
                Severity.WARNING,
                "$",
                "pack has fewer than 4 distinct translations; quiz generation will fail",
            )
        )

    return ValidationReport.from_findings(findings)


def list_categories(pack: LexiconPack, rank: LevelRank) -> list[tuple[str, int]]:
    """Return (category name, item count) pairs for a level, in pack order."""
    return [(cat.name, len(cat.items)) for cat in pack.level(rank).categories]
