from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from lexitrain.errors import PackSchemaError, PackSyntaxError
from lexitrain.lexicon import (
    CANONICAL_CATEGORIES,
    Category,
    Language,
    Level,
    LevelRank,
    LexiconPack,
    Severity,
    TrainingItem,
    ValidationMode,
    list_categories,
    parse_pack,
    serialize_pack,
    validate_pack,
)

MINIMAL_DOC = json.dumps(
    {
        "packId": "es-mini",
        "packVersion": "1",
        "language": "Spanish",
        "levels": [
            {"rank": "Basic", "categories": [
                {"name": "numbers", "items": [{"id": "n1", "english": "one", "translation": "uno"}]}]},
            {"rank": "Intermediate", "categories": [
                {"name": "pronouns", "items": [{"id": "p1", "english": "I", "translation": "yo"}]}]},
            {"rank": "Advanced", "categories": [
                {"name": "greetings", "items": [{"id": "g1", "english": "hello", "translation": "hola"}]}]},
        ],
    }
)


class TestParsePack:
    def test_minimal_pack_has_three_items(self):
        pack = parse_pack(MINIMAL_DOC)
        assert sum(1 for _ in pack.iter_items()) == 3
        assert pack.language is Language.SPANISH
        assert [lvl.rank for lvl in pack.levels] == list(LevelRank)

    def test_canonical_korean_basic_categories(self, ko_pack):
        text = serialize_pack(ko_pack)
        pack = parse_pack(text)
        names = [cat.name for cat in pack.level(LevelRank.BASIC).categories]
        assert names == ["alphabet", "numbering"]

    def test_level_order_violation_is_schema_error(self):
        doc = json.loads(MINIMAL_DOC)
        doc["levels"] = [doc["levels"][1], doc["levels"][0], doc["levels"][2]]
        with pytest.raises(PackSchemaError, match="order"):
            parse_pack(json.dumps(doc))

    def test_two_levels_is_schema_error(self):
        doc = json.loads(MINIMAL_DOC)
        doc["levels"] = doc["levels"][:2]
        with pytest.raises(PackSchemaError):
            parse_pack(json.dumps(doc))

    def test_malformed_json_reports_position(self):
        with pytest.raises(PackSyntaxError) as exc_info:
            parse_pack('{"packId": "x",')
        assert exc_info.value.line == 1
        assert exc_info.value.column is not None

    def test_missing_field_is_schema_error(self):
        doc = json.loads(MINIMAL_DOC)
        del doc["levels"][0]["categories"][0]["items"][0]["translation"]
        with pytest.raises(PackSchemaError, match="translation"):
            parse_pack(json.dumps(doc))

    def test_unknown_language_is_schema_error(self):
        doc = json.loads(MINIMAL_DOC)
        doc["language"] = "Klingon"
        with pytest.raises(PackSchemaError, match="Klingon"):
            parse_pack(json.dumps(doc))

    def test_non_string_field_is_schema_error(self):
        doc = json.loads(MINIMAL_DOC)
        doc["levels"][0]["categories"][0]["items"][0]["id"] = 7
        with pytest.raises(PackSchemaError, match="string"):
            parse_pack(json.dumps(doc))

    def test_document_order_preserved(self, make_pack):
        pack = make_pack(basic=(3, 2), intermediate=(2, 2), advanced=(2,))
        reparsed = parse_pack(serialize_pack(pack))
        assert [c.name for c in reparsed.level(LevelRank.BASIC).categories] == ["b0", "b1"]
        assert [i.item_id for i in reparsed.level(LevelRank.BASIC).categories[0].items] == [
            "b0-item0", "b0-item1", "b0-item2",
        ]


class TestValidatePack:
    def test_canonical_fixture_is_clean(self, ko_pack):
        report = validate_pack(ko_pack, ValidationMode.CANONICAL)
        assert report.valid
        assert report.findings == ()

    def test_missing_canonical_category_named(self, ko_pack):
        levels = list(ko_pack.levels)
        inter = levels[1]
        pruned = Level(
            rank=inter.rank,
            categories=tuple(c for c in inter.categories if c.name != "time-reading"),
        )
        levels[1] = pruned
        pack = LexiconPack(ko_pack.pack_id, ko_pack.pack_version, ko_pack.language, tuple(levels))
        report = validate_pack(pack, ValidationMode.CANONICAL)
        assert not report.valid
        errors = [f for f in report.findings if f.severity is Severity.ERROR]
        assert any("time-reading" in f.message for f in errors)
        # The same pack is fine in lenient mode.
        assert validate_pack(pack, ValidationMode.LENIENT).valid

    def test_duplicate_item_id_reports_both_locations(self, es_pack):
        dup = TrainingItem("es-num-1", "two", "dos")
        levels = list(es_pack.levels)
        basic = levels[0]
        cat = basic.categories[0]
        levels[0] = Level(basic.rank, (Category(cat.name, cat.items + (dup,)),))
        pack = LexiconPack(es_pack.pack_id, es_pack.pack_version, es_pack.language, tuple(levels))
        report = validate_pack(pack, ValidationMode.LENIENT)
        assert not report.valid
        finding = next(f for f in report.findings if "duplicate item id" in f.message)
        assert "es-num-1" in finding.message
        assert "items[0]" in finding.message  # first location, embedded
        assert "items[1]" in finding.location  # second location

    def test_empty_category_and_blank_text_are_errors(self):
        pack = LexiconPack(
            "p", "1", Language.JAPANESE,
            (
                Level(LevelRank.BASIC, (
                    Category("empty", ()),
                    Category("blank", (TrainingItem("x", " ", "y"),)),
                )),
                Level(LevelRank.INTERMEDIATE, (Category("i", (TrainingItem("a", "b", "c"),)),)),
                Level(LevelRank.ADVANCED, (Category("v", (TrainingItem("d", "e", "f"),)),)),
            ),
        )
        report = validate_pack(pack)
        messages = [f.message for f in report.findings if f.severity is Severity.ERROR]
        assert any("no items" in m for m in messages)
        assert any("english text is empty" in m for m in messages)

    def test_level_without_categories_is_error(self):
        pack = LexiconPack(
            "p", "1", Language.JAPANESE,
            (
                Level(LevelRank.BASIC, (Category("b", (TrainingItem("a", "b", "c"),)),)),
                Level(LevelRank.INTERMEDIATE, ()),
                Level(LevelRank.ADVANCED, (Category("v", (TrainingItem("d", "e", "f"),)),)),
            ),
        )
        report = validate_pack(pack)
        assert any("has no categories" in f.message for f in report.findings)
        assert not report.valid

    @pytest.mark.parametrize("audio", ["/abs/a.mp3", "../up.mp3", "a/../../b.mp3", "C:/x.mp3"])
    def test_unsafe_audio_paths_are_errors(self, audio):
        pack = LexiconPack(
            "p", "1", Language.KOREAN,
            (
                Level(LevelRank.BASIC, (Category("b", (TrainingItem("a", "hi", "안녕", audio=audio),)),)),
                Level(LevelRank.INTERMEDIATE, (Category("i", (TrainingItem("c", "x", "y"),)),)),
                Level(LevelRank.ADVANCED, (Category("v", (TrainingItem("d", "e", "f"),)),)),
            ),
        )
        report = validate_pack(pack)
        assert any("audio reference" in f.message for f in report.findings)
        assert not report.valid

    def test_missing_audio_file_is_warning(self, tmp_path, ko_pack):
        report = validate_pack(ko_pack, base_dir=tmp_path)
        warnings = [f for f in report.findings if f.severity is Severity.WARNING]
        assert warnings, "expected missing-audio warnings"
        assert report.valid  # warnings never invalidate

    def test_present_audio_file_is_clean(self, tmp_path, ko_pack):
        for item in ko_pack.iter_items():
            if item.audio:
                target = tmp_path / item.audio
                target.parent.mkdir(parents=True, exist_ok=True)
                target.write_bytes(b"\0")
        report = validate_pack(ko_pack, base_dir=tmp_path)
        assert report.findings == ()

    def test_small_pack_gets_translation_warning(self, es_pack):
        report = validate_pack(es_pack)
        assert report.valid
        assert any("4 distinct translations" in f.message for f in report.findings)

    def test_validation_is_pure(self, ko_pack):
        first = validate_pack(ko_pack, ValidationMode.CANONICAL)
        second = validate_pack(ko_pack, ValidationMode.CANONICAL)
        assert first == second


class TestListCategories:
    def test_basic_fixture_counts(self, ko_pack):
        assert list_categories(ko_pack, LevelRank.BASIC) == [("alphabet", 8), ("numbering", 8)]

    def test_intermediate_order_matches_curriculum(self, ko_pack):
        names = [name for name, _ in list_categories(ko_pack, LevelRank.INTERMEDIATE)]
        assert names == list(CANONICAL_CATEGORIES[LevelRank.INTERMEDIATE])

    def test_every_listed_item_retrievable_by_id(self, ko_pack):
        for rank in LevelRank:
            for name, count in list_categories(ko_pack, rank):
                category = ko_pack.level(rank).category(name)
                assert category is not None and len(category.items) == count
                for item in category.items:
                    assert ko_pack.item(item.item_id) is item


# --- round-trip property ------------------------------------------------------

_text = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",)), min_size=1, max_size=12
).map(lambda s: s.strip() or "x")


@st.composite
def packs(draw) -> LexiconPack:
    ids = iter(range(10_000))

    def draw_items(n):
        return tuple(
            TrainingItem(
                item_id=f"it{next(ids)}",
                english=draw(_text),
                translation=draw(_text),
                romanization=draw(st.none() | _text),
                mnemonic=draw(st.none() | _text),
                sample_sentence=draw(st.none() | _text),
                audio=draw(st.none() | st.just("audio/a.mp3")),
            )
            for _ in range(n)
        )

    def draw_level(rank, prefix):
        n_cats = draw(st.integers(1, 3))
        return Level(
            rank,
            tuple(
                Category(f"{prefix}{ci}", draw_items(draw(st.integers(1, 4))))
                for ci in range(n_cats)
            ),
        )

    return LexiconPack(
        pack_id=draw(_text),
        pack_version=draw(_text),
        language=draw(st.sampled_from(list(Language))),
        levels=(
            draw_level(LevelRank.BASIC, "b"),
            draw_level(LevelRank.INTERMEDIATE, "i"),
            draw_level(LevelRank.ADVANCED, "a"),
        ),
    )


@given(packs())
def test_serialize_parse_round_trip(pack):
    assert parse_pack(serialize_pack(pack)) == pack


def test_fixture_round_trips(ko_pack, es_pack):
    assert parse_pack(serialize_pack(ko_pack)) == ko_pack
    assert parse_pack(serialize_pack(es_pack)) == es_pack
