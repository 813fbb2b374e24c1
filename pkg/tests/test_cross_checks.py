"""Internal consistency of the exceptional-set registry.

The printed lists are interdependent: every exception to the distinctness,
minimality, and monotonicity laws must be covered (up to family, subset,
associate) by the trichotomy exemption list, whose gcd(a, b) > 1 members
with four or more solutions are exactly the two special families that the
common-base classification keeps alongside the derived (6, 2, 8) family.
These checks would catch a mis-transcribed digit in either list.
"""

import itertools
from math import gcd

from pillai.catalog import catalog_entries
from pillai.equation import enumerate_solutions
from pillai.families import SolutionSet, family_key, parse_set
from pillai.search import SearchBox, run_search


def _lemma12_cover_keys(param_g_max: int = 14) -> set[str]:
    keys = set()
    for entry in catalog_entries():
        if not entry.label.startswith("Lemma12-"):
            continue
        if entry.set is not None:
            pairs = entry.set.pairs
            for size in range(3, len(pairs) + 1):
                for combo in itertools.combinations(pairs, size):
                    keys.add(family_key(SolutionSet(entry.set.inst, combo)))
        else:
            for eps in (0, 1):
                for g in range(1, param_g_max + 1):
                    if entry.param.admissible(eps, g):
                        keys.add(family_key(entry.param.instantiate(eps, g)))
    return keys


class TestTrichotomyListCoverage:
    def test_lemma_exception_lists_are_covered(self):
        cover = _lemma12_cover_keys()
        prefixes = ("Lemma2-", "Lemma4-", "Lemma6-", "Lemma7-", "Lemma11-")
        for entry in catalog_entries():
            if not entry.label.startswith(prefixes):
                continue
            if entry.set is not None:
                assert family_key(entry.set) in cover, entry.label
            else:
                # the g > 1 parametric list: small-g instantiations fall into
                # concrete entries, larger g into the parametric exemption
                for eps in (0, 1):
                    for g in range(2, 13):
                        inst_set = entry.param.instantiate(eps, g)
                        assert family_key(inst_set) in cover, (entry.label, eps, g)

    def test_minimality_exceptions_are_covered_by_reference_families(self):
        # the two minimal-x2 exceptions and the split-zero minimality
        # exception sit inside families of the big reference list
        from pillai.catalog import match_catalog

        for label in ("Lemma8-1", "Lemma8-2", "Lemma9-1"):
            entry = next(e for e in catalog_entries() if e.label == label)
            hit = match_catalog(entry.set)
            assert hit is not None and hit.label.startswith("TheoremA-"), label


class TestCommonBaseListConsistency:
    def test_lemma12_common_base_big_sets(self):
        # gcd(a, b) > 1 entries with four or more solutions in the trichotomy
        # exemption list are exactly the two families kept by the common-base
        # classification (its third family is derived in that argument, not
        # printed in the exemption list)
        big = {
            family_key(e.set)
            for e in catalog_entries()
            if e.label.startswith("Lemma12-")
            and e.set is not None
            and gcd(e.set.inst.a, e.set.inst.b) > 1
            and e.set.n_count >= 4
        }
        expected = {
            family_key(parse_set("2,2,4,1,3;0,0,1,1,3,2,4,2")),
            family_key(parse_set("2,2,3,1,1;0,1,0,2,1,0,2,0")),
        }
        assert big == expected

    def test_theorem1_families_are_enumeration_complete(self):
        for entry in catalog_entries():
            if not entry.label.startswith("Theorem1-"):
                continue
            enum = enumerate_solutions(entry.set.inst, 64, 64)
            assert enum.complete
            assert tuple((s.x, s.y) for s in enum.solutions) == entry.set.pairs


class TestEnumerationEdges:
    def test_tight_caps_fall_back_without_false_completeness(self):
        # min(x, y) cap is 3, above both caps: the plain sweep applies and
        # completeness cannot be certified
        from pillai.equation import Instance

        enum = enumerate_solutions(Instance(6, 2, 8, 1, 7), 2, 2)
        assert [(s.x, s.y) for s in enum.solutions] == [(0, 0), (1, 1), (2, 2)]
        assert not enum.complete


class TestShardedCheckpoint:
    def test_shard_runs_accept_their_own_checkpoints(self, tmp_path):
        box = SearchBox(
            a_range=(2, 5),
            b_range=(2, 5),
            r_range=(1, 4),
            s_range=(1, 4),
            c_range=(1, 15),
            exp_cap=16,
            min_n=3,
        )
        path = tmp_path / "shard.ckpt"
        partial = list(run_search(box, checkpoint=path, shard=(1, 2), block_limit=20))
        resumed = list(run_search(box, checkpoint=path, shard=(1, 2)))
        direct = list(run_search(box, shard=(1, 2)))
        assert [f.line() for f in resumed] == [f.line() for f in direct]
        assert len(partial) <= len(resumed)

    def test_checkpoint_shard_mismatch_rejected(self, tmp_path):
        import pytest

        from pillai.search import CheckpointError

        box = SearchBox(
            a_range=(2, 4),
            b_range=(2, 4),
            r_range=(1, 3),
            s_range=(1, 3),
            c_range=(1, 10),
            exp_cap=12,
            min_n=3,
        )
        path = tmp_path / "mismatch.ckpt"
        list(run_search(box, checkpoint=path, shard=(0, 2), block_limit=5))
        with pytest.raises(CheckpointError):
            list(run_search(box, checkpoint=path, shard=(1, 2)))
