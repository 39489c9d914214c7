import io

import pytest

from taxsim.errors import IntegrityError, ParseError, StructureError
from taxsim.wordnet import (
    dump_tsv_taxonomy,
    load_frequencies,
    load_tsv_taxonomy,
    normalize_lemma,
    parse_data_noun,
    parse_index_noun,
)
from taxsim.taxonomy import build_taxonomy

from conftest import T7_TSV

# Minimal stream in the WordNet 3.0 data.noun layout: root, a two-lemma
# synset, an @i child, and a node whose extra pointers must be ignored.
DATA_NOUN = """\
  1 This is a header line and must be skipped.
  2 So is this one.
00000001 03 n 01 entity 0 000 | that which exists
00000002 03 n 02 alpha 0 first_branch 1 001 @ 00000001 n 0000 | a branch
00000003 03 n 01 beta 0 001 @i 00000001 n 0000 | an instance branch
00000004 03 n 01 gamma 0 003 @ 00000002 n 0000 ~ 00000002 n 0000 @ 00000003 v 0000 | ignores non-noun and non-hypernym pointers
"""

INDEX_NOUN = """\
  1 header
alpha n 1 1 @ 1 0 00000002
gamma n 2 2 @ ~ 2 0 00000004 00000002
beta n 1 1 @ 1 0 00000003
"""


class TestParseDataNoun:
    def test_headers_skipped_and_counts(self):
        synsets = parse_data_noun(io.StringIO(DATA_NOUN))
        assert len(synsets) == 4

    def test_root_has_no_hypernyms(self):
        synsets = parse_data_noun(io.StringIO(DATA_NOUN))
        root = synsets[0]
        assert root.id == "00000001"
        assert root.hypernyms == ()
        assert root.gloss == "that which exists"

    def test_w_cnt_hex_consumes_lemma_pairs(self):
        synsets = parse_data_noun(io.StringIO(DATA_NOUN))
        assert synsets[1].lemmas == ("alpha", "first_branch")

    def test_instance_hypernym_treated_as_hypernym(self):
        synsets = parse_data_noun(io.StringIO(DATA_NOUN))
        assert synsets[2].hypernyms == ("00000001",)

    def test_non_hypernym_and_non_noun_pointers_ignored(self):
        synsets = parse_data_noun(io.StringIO(DATA_NOUN))
        assert synsets[3].hypernyms == ("00000002",)

    def test_malformed_record_reports_line(self):
        bad = "00000001 03 n zz entity 0 000 | broken\n"
        with pytest.raises(ParseError) as exc:
            parse_data_noun(io.StringIO(bad))
        assert exc.value.line_number == 1

    def test_dangling_hypernym_caught_at_build(self):
        text = (
            "00000001 03 n 01 entity 0 000 | root\n"
            "00000002 03 n 01 thing 0 001 @ 99999999 n 0000 | dangling\n"
        )
        synsets = parse_data_noun(io.StringIO(text))
        with pytest.raises(IntegrityError):
            build_taxonomy(synsets)

    def test_builds_valid_taxonomy(self):
        t = build_taxonomy(parse_data_noun(io.StringIO(DATA_NOUN)))
        assert t.root == "00000001"
        assert t.max_nodes == 4
        assert t.depth("00000004") == 3


class TestParseIndexNoun:
    def test_sense_order_preserved(self):
        index = parse_index_noun(io.StringIO(INDEX_NOUN))
        assert index.senses("gamma") == ["00000004", "00000002"]

    def test_single_sense(self):
        index = parse_index_noun(io.StringIO(INDEX_NOUN))
        assert index.senses("alpha") == ["00000002"]

    def test_absent_lemma_is_distinguishable(self):
        index = parse_index_noun(io.StringIO(INDEX_NOUN))
        assert "zeta" not in index
        with pytest.raises(KeyError):
            index.senses("zeta")

    def test_synset_cnt_mismatch(self):
        bad = "alpha n 2 1 @ 2 0 00000002\n"
        with pytest.raises(ParseError):
            parse_index_noun(io.StringIO(bad))


class TestLoadWordnet:
    def test_loads_directory(self, tmp_path):
        from taxsim.wordnet import load_wordnet

        (tmp_path / "data.noun").write_text(DATA_NOUN, encoding="utf-8")
        (tmp_path / "index.noun").write_text(INDEX_NOUN, encoding="utf-8")
        t, index = load_wordnet(str(tmp_path))
        assert t.max_nodes == 4
        assert index.senses("gamma") == ["00000004", "00000002"]

    def test_index_referencing_unknown_synset(self, tmp_path):
        from taxsim.wordnet import load_wordnet

        (tmp_path / "data.noun").write_text(DATA_NOUN, encoding="utf-8")
        (tmp_path / "index.noun").write_text(
            "ghost n 1 1 @ 1 0 99999999\n", encoding="utf-8")
        with pytest.raises(IntegrityError):
            load_wordnet(str(tmp_path))


class TestTsvTaxonomy:
    def test_t7_loads(self):
        t, index = load_tsv_taxonomy(io.StringIO(T7_TSV))
        assert t.max_nodes == 7
        assert t.max_depth == 4
        assert t.root == "R"
        assert index.senses("x") == ["E", "D"]

    def test_self_loop_rejected(self):
        with pytest.raises(StructureError):
            load_tsv_taxonomy(io.StringIO("X\tX\n"))

    def test_duplicate_edge_warns_and_dedupes(self):
        text = "A\tR\nA\tR\nB\tR\n"
        with pytest.warns(UserWarning, match="duplicate edge"):
            t, _ = load_tsv_taxonomy(io.StringIO(text))
        assert t.max_nodes == 3

    def test_two_roots_rejected(self):
        with pytest.raises(StructureError):
            load_tsv_taxonomy(io.StringIO("A\tR1\nB\tR2\n"))

    def test_round_trip_is_isomorphic(self):
        t1, idx1 = load_tsv_taxonomy(io.StringIO(T7_TSV))
        dumped = dump_tsv_taxonomy(t1, idx1)
        t2, idx2 = load_tsv_taxonomy(io.StringIO(dumped))
        assert set(t1.ids()) == set(t2.ids())
        for sid in t1.ids():
            assert t1.ancestors(sid) == t2.ancestors(sid)
        assert idx1.entries == idx2.entries


class TestFrequencies:
    def test_single_line(self):
        f = load_frequencies(io.StringIO("dog\t10\n"))
        assert f.total == 10
        assert f.count("dog") == 10

    def test_empty_file(self):
        assert load_frequencies(io.StringIO("")).total == 0

    def test_duplicates_summed(self):
        f = load_frequencies(io.StringIO("dog\t10\ndog\t5\n"))
        assert f.count("dog") == 15

    def test_negative_count_rejected(self):
        with pytest.raises(ParseError):
            load_frequencies(io.StringIO("dog\t-1\n"))

    def test_non_numeric_rejected(self):
        with pytest.raises(ParseError):
            load_frequencies(io.StringIO("dog\tmany\n"))


def test_normalize_lemma():
    assert normalize_lemma("Sports Car") == "sports_car"
