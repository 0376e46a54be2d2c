import json
import re
from pathlib import Path

import pandas as pd
import pytest

from slocc_2mn.counting import build_table, export_table
from slocc_2mn.settings import SETTINGS
from slocc_2mn.storage import LocalStorage, get_storage


@pytest.fixture
def storage(tmp_path) -> LocalStorage:
    return LocalStorage(root=tmp_path)


def test_version_format(storage):
    assert re.fullmatch(r"v\d{2}-\d{2}-\d{2}", storage.version)


def test_write_document(storage, tmp_path):
    document = {"m": 2, "n": 2, "label": "Γ₁"}
    path = storage.write_document(document, name="doc", folder_path="nested")
    assert path == str(tmp_path / storage.version / "nested" / "doc.json")
    assert json.loads(Path(path).read_text(encoding="utf-8")) == document


def test_export_table(storage, tmp_path):
    table = build_table(4, 4)
    path = export_table(table, storage=storage)
    assert path == str(tmp_path / storage.version / "omega-4x4.csv")
    restored = pd.read_csv(path)
    assert list(restored.columns) == ["m", "n", "omega"]
    assert len(restored) == 9
    cells = {(m, n): omega for m, n, omega in restored.itertuples(index=False)}
    assert cells == table.cells


def test_get_storage(tmp_path, monkeypatch):
    storage = get_storage(root=tmp_path)
    assert isinstance(storage, LocalStorage)
    assert storage.root == tmp_path
    monkeypatch.setattr(SETTINGS, "export_path", None)
    with pytest.raises(KeyError):
        get_storage()
    with pytest.raises(KeyError):
        LocalStorage()
    monkeypatch.setattr(SETTINGS, "export_path", tmp_path)
    assert get_storage().root == tmp_path
