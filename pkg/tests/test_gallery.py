from __future__ import annotations

import runpy
from pathlib import Path

import pytest

GALLERY = sorted((Path(__file__).resolve().parents[1] / "gallery").glob("*.py"))


@pytest.mark.parametrize("script", GALLERY, ids=lambda p: p.stem)
def test_gallery_script_runs(script, capsys):
    runpy.run_path(str(script), run_name="__main__")
    assert capsys.readouterr().out
