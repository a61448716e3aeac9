# ==========================================
# tests/test_settings.py
# ==========================================
import importlib
import warnings

import pytest
from pydantic import ValidationError

import config.settings
from config.settings import WorkbenchSettings, settings


class TestSettings:
    def test_defaults(self):
        assert settings.permutation_enumeration_cap == 8
        assert settings.report_digits == 12

    def test_frozen(self):
        with pytest.raises(ValidationError):
            settings.report_digits = 3

    def test_ranges_are_validated(self):
        with pytest.raises(ValidationError):
            WorkbenchSettings(pair_block_elements=0)
        with pytest.raises(ValidationError):
            WorkbenchSettings(report_digits=18)

    def test_import_emits_no_deprecation(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error", DeprecationWarning)
            importlib.reload(importlib.import_module("config.settings"))
