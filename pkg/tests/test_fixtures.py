import json

import pytest

from riordan_moments.fixtures import MIN_PREFIX, compute, load_catalog, verify, verify_all

EXPECTED_IDS = {
    "A007318", "A000045", "A000108", "A009766", "A033184", "A053121", "A001405", "A094587", "A021009",
    "A094816", "A111596", "A111884", "A066325", "A119467", "A119879", "A155585", "A000262",
}


def test_catalog_contents():
    catalog = load_catalog()
    assert EXPECTED_IDS <= set(catalog)
    assert "identity" in catalog
    assert list(catalog) == sorted(catalog)
    assert all(f.length >= MIN_PREFIX for f in catalog.values())


@pytest.mark.parametrize("fixture_id", sorted(EXPECTED_IDS | {"identity"}))
def test_fixture_passes(fixture_id):
    result = verify(load_catalog()[fixture_id])
    assert result.passed, result.detail


def test_tampered_fixture_fails(tmp_path):
    data = json.loads(load_catalog.__globals__["default_catalog_path"]().read_text())
    for entry in data["fixtures"]:
        if entry["id"] == "A000045":
            entry["values"][6] = "14"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    results = {r.id: r for r in verify_all(load_catalog(path))}
    assert not results["A000045"].passed
    assert "term 6" in results["A000045"].detail
    assert results["A007318"].passed


def test_short_prefix_rejected(tmp_path):
    data = {"fixtures": [{"id": "T", "kind": "sequence", "construction": {"array": "series", "g": "1/(1-x)", "view": "series"}, "values": ["1", "1", "1"]}]}
    path = tmp_path / "short.json"
    path.write_text(json.dumps(data))
    (result,) = verify_all(load_catalog(path))
    assert not result.passed and "shorter" in result.detail


def test_compute_is_independent_of_stored_values():
    f = load_catalog()["A094816"]
    assert compute(f) == f.values
