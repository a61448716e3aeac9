# ==========================================
# tests/conftest.py
# ==========================================
import json

import pytest

from core.groups import PermutationGroup, c2v_group


@pytest.fixture
def p3() -> PermutationGroup:
    return PermutationGroup(3)


@pytest.fixture
def c2v():
    return c2v_group()


@pytest.fixture
def write_json(tmp_path):
    """Escribe un objeto como JSON en tmp_path y devuelve la ruta"""
    def write(name: str, payload) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
